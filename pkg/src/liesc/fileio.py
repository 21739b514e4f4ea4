"""The liesc-v1 JSON file format and report envelopes.

Scalars travel as decimal strings so exactness survives serialization; the
bracket table stores only pairs i < j with 1-based indices.
"""

from __future__ import annotations

import hashlib
import json
from typing import List, Optional, Tuple

from .algebra import LieAlgebra
from .decomposition import DecompositionCertificate, ExtractionStep
from .domains import DEFAULT_PRIME_CAP, DomainSpec
from .errors import IndexOutOfRange, InvalidScalar, ParseError
from .linear import Subspace

FORMAT = "liesc-v1"
TOOL_VERSION = "liesc 0.1.0"


def _field_to_json(d: DomainSpec) -> dict:
    if d.kind == "prime":
        return {"kind": "prime", "p": d.p}
    return {"kind": "rational"}


def _field_from_json(rec) -> DomainSpec:
    if not isinstance(rec, dict) or "kind" not in rec:
        raise ParseError("field record must be an object with a 'kind'")
    if rec["kind"] == "prime":
        p = rec.get("p")
        if not isinstance(p, int):
            raise ParseError("prime field requires an integer 'p'")
        if p > DEFAULT_PRIME_CAP:
            raise InvalidScalar(f"prime {p} exceeds the cap {DEFAULT_PRIME_CAP}")
        return DomainSpec("prime", p)
    if rec["kind"] == "rational":
        return DomainSpec("rational")
    raise ParseError(f"unknown field kind {rec['kind']!r}")


def algebra_to_json(L: LieAlgebra, basis_names: Optional[List[str]] = None) -> dict:
    d = L.domain
    brackets = []
    for (i, j) in sorted(L.sc):
        v = L.sc[(i, j)]
        terms = [{"k": k + 1, "c": d.to_string(v[k])} for k in range(L.dim) if v[k] != 0]
        brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
    out = {"format": FORMAT, "field": _field_to_json(d), "dim": L.dim,
           "brackets": brackets}
    if basis_names is not None:
        out["basis_names"] = list(basis_names)
    return out


def algebra_from_json(doc) -> Tuple[LieAlgebra, Optional[List[str]]]:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"unsupported format {doc.get('format')!r}, expected {FORMAT!r}")
    d = _field_from_json(doc.get("field"))
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("'dim' must be a nonnegative integer")
    names = doc.get("basis_names")
    if names is not None:
        if not (isinstance(names, list) and len(names) == dim
                and all(isinstance(s, str) for s in names)):
            raise ParseError("'basis_names' must list one string per basis vector")
    brackets = {}
    seen = set()
    for rec in doc.get("brackets", []):
        i, j = rec.get("i"), rec.get("j")
        if not (isinstance(i, int) and isinstance(j, int)):
            raise ParseError("bracket indices must be integers")
        if not (1 <= i < j <= dim):
            raise IndexOutOfRange(f"bracket pair ({i}, {j}) out of range for dim {dim}")
        if (i, j) in seen:
            raise ParseError(f"duplicate bracket pair ({i}, {j})")
        seen.add((i, j))
        v = [d.zero()] * dim
        for term in rec.get("terms", []):
            k = term.get("k")
            if not isinstance(k, int) or not 1 <= k <= dim:
                raise IndexOutOfRange(f"term index {k} out of range for dim {dim}")
            v[k - 1] = d.add(v[k - 1], d.from_string(str(term.get("c"))))
        brackets[(i - 1, j - 1)] = tuple(v)
    return LieAlgebra(d, dim, brackets), names


def save(L: LieAlgebra, path: str, basis_names: Optional[List[str]] = None) -> None:
    with open(path, "w") as fh:
        json.dump(algebra_to_json(L, basis_names), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load(path: str) -> LieAlgebra:
    return load_with_names(path)[0]


def load_with_names(path: str) -> Tuple[LieAlgebra, Optional[List[str]]]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e}") from None
    return algebra_from_json(doc)


# -- subspace / certificate serialization -------------------------------------


def subspace_to_json(S: Subspace) -> list:
    d = S.domain
    return [[d.to_string(v) for v in row] for row in S.rows]


def subspace_from_json(d: DomainSpec, ambient: int, rows) -> Subspace:
    vecs = [[d.from_string(str(v)) for v in row] for row in rows]
    return Subspace.from_rows(d, ambient, vecs)


def certificate_to_json(cert: DecompositionCertificate) -> dict:
    return {
        "case": cert.case,
        "center_dim": cert.center_dim,
        "factors": [subspace_to_json(f) for f in cert.factors],
        "nested_factors": [subspace_to_json(f) for f in cert.nested_factors],
        "trace": [
            {"M": subspace_to_json(s.M), "N": subspace_to_json(s.N),
             "E": subspace_to_json(s.E), "L_next": subspace_to_json(s.L_next)}
            for s in cert.trace
        ],
    }


def certificate_from_json(d: DomainSpec, ambient: int, doc: dict) -> DecompositionCertificate:
    from .errors import MalformedCertificate

    try:
        case = doc["case"]
        factors = tuple(subspace_from_json(d, ambient, r) for r in doc["factors"])
        nested = tuple(subspace_from_json(d, ambient, r)
                       for r in doc.get("nested_factors", []))
        trace = tuple(
            ExtractionStep(*(subspace_from_json(d, ambient, step[key])
                             for key in ("M", "N", "E", "L_next")))
            for step in doc.get("trace", [])
        )
        return DecompositionCertificate(case, factors, trace,
                                        int(doc["center_dim"]), nested)
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedCertificate(f"bad certificate document: {e}") from None


def file_digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def make_envelope(command: str, payload: dict, input_path: Optional[str] = None,
                  elapsed: Optional[float] = None) -> dict:
    return {
        "tool_version": TOOL_VERSION,
        "input_digest": file_digest(input_path) if input_path else None,
        "command": command,
        "result": payload,
        "timing": {"seconds": elapsed} if elapsed is not None else None,
    }
