"""Command-line interface.

Exit codes are a stable contract: 0 when the command succeeds (or the checked
property holds), 1 when a checked property fails (witness printed), 2 for
usage or input errors.  Errors are emitted as JSON records on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional

from . import fileio
from .algebra import LieAlgebra
from .constructions import abelian, catalog, filiform_standard, heisenberg, heisenberg_as_product
from .decomposition import decompose, verify_certificate
from .domains import DomainSpec, parse_field
from .errors import LiescError
from .frattinian import is_frattinian, lemma_suite
from .linear import Subspace
from .maximal import enumerate_maximal


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def format_subspace(S: Subspace, names: Optional[List[str]] = None) -> str:
    if S.dim == 0:
        return "{0}"
    d = S.domain
    if names is None:
        names = [f"e{i + 1}" for i in range(S.ambient)]
    parts = []
    for row in S.rows:
        terms = []
        for c, nm in zip(row, names):
            if c == 0:
                continue
            terms.append(nm if c == d.one() else f"{d.to_string(c)}*{nm}")
        parts.append(" + ".join(terms) if terms else "0")
    return "span{ " + "; ".join(parts) + " }"


def _cmd_gen(args) -> int:
    field = parse_field(args.field)
    kind = args.family
    if kind == "abelian":
        if args.n is None:
            raise LiescError("gen abelian requires --n")
        L = abelian(args.n, field)
        fileio.save(L, args.output)
    elif kind == "heisenberg":
        if args.m is None:
            raise LiescError("gen heisenberg requires --m")
        L = heisenberg(args.m, field)
        fileio.save(L, args.output)
    elif kind == "filiform":
        if args.dim is None:
            raise LiescError("gen filiform requires --dim")
        L = filiform_standard(args.dim, field)
        fileio.save(L, args.output)
    elif kind == "central-product":
        if args.m is None:
            raise LiescError("gen central-product requires --m (number of H(1) factors)")
        L = heisenberg_as_product(args.m, field).algebra
        fileio.save(L, args.output)
    elif kind == "catalog":
        if not field.is_finite:
            raise LiescError("gen catalog requires a finite field")
        os.makedirs(args.output, exist_ok=True)
        for entry in catalog(field, args.max_dim, seed=args.seed):
            safe = entry.name.replace("+", "_plus_").replace(".", "_cp_")
            fileio.save(entry.algebra, os.path.join(args.output, f"{safe}.json"))
    else:  # pragma: no cover - argparse restricts choices
        raise LiescError(f"unknown family {kind!r}")
    return 0


def _cmd_info(args) -> int:
    L, names = fileio.load_with_names(args.path)
    low = L.lower_central_series()
    up = L.upper_central_series()
    print(f"dim: {L.dim}")
    print(f"field: {L.domain}")
    if low.nilpotency_class is not None:
        print(f"nilpotent: yes, class {low.nilpotency_class}")
    else:
        print("nilpotent: no")
    print(f"lower central series dims: {[t.dim for t in low.terms]}")
    print(f"upper central series dims: {[t.dim for t in up.terms]}")
    print(f"center: {format_subspace(L.center(), names)}")
    print(f"abelian: {'yes' if L.is_abelian() else 'no'}")
    return 0


def _cmd_maximal(args) -> int:
    L, names = fileio.load_with_names(args.path)
    enum = enumerate_maximal(L)
    print(f"count: {enum.count}")
    if args.list:
        for M in enum.items:
            print(format_subspace(M, names))
    return 0


def _cmd_check(args) -> int:
    if args.property != "frattinian":
        raise LiescError(f"unknown property {args.property!r}")
    L, names = fileio.load_with_names(args.path)
    verdict = is_frattinian(L)
    if verdict.is_frattinian:
        print(f"frattinian: yes (checked {verdict.checked_count} maximal subalgebras)")
        return 0
    print("frattinian: no")
    print(f"witness maximal subalgebra M with Z(M) = Z(L): "
          f"{format_subspace(verdict.witness, names)}")
    return 1


def _cmd_decompose(args) -> int:
    t0 = time.time()
    L, names = fileio.load_with_names(args.path)
    cert = decompose(L)
    report = verify_certificate(L, cert)
    print(f"case: {cert.case}")
    print(f"factors ({len(cert.factors)}):")
    for f in cert.factors:
        print(f"  dim {f.dim}: {format_subspace(f, names)}")
    if cert.nested_factors:
        print(f"nested case-one factors of E ({len(cert.nested_factors)}):")
        for f in cert.nested_factors:
            print(f"  dim {f.dim}: {format_subspace(f, names)}")
    ok = report.all_passed
    print(f"verification: {'all obligations pass' if ok else 'FAILED'} "
          f"({len(report.obligations)} obligations)")
    if args.report:
        payload = {
            "certificate": fileio.certificate_to_json(cert),
            "verification": [
                {"name": o.name, "pass": o.passed, "detail": o.detail}
                for o in report.obligations
            ],
        }
        env = fileio.make_envelope("decompose", payload, args.path, time.time() - t0)
        with open(args.report, "w") as fh:
            json.dump(env, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    if args.what != "suite":
        raise LiescError(f"unknown verify target {args.what!r}")
    field = parse_field(args.field)
    if not field.is_finite:
        raise LiescError("verify suite requires a finite field")
    entries = catalog(field, args.max_dim, seed=args.seed)
    lemma_counts: dict = {}
    failures = []
    histogram = {"one": 0, "two": 0}
    for entry in entries:
        rep = lemma_suite(entry.algebra)
        for lemma, (ok, tot) in rep.counts().items():
            a, b = lemma_counts.get(lemma, (0, 0))
            lemma_counts[lemma] = (a + ok, b + tot)
        for c in rep.failures():
            failures.append((entry.name, c.lemma_id, c.witnesses))
        L = entry.algebra
        if not L.is_abelian() and is_frattinian(L).is_frattinian:
            cert = decompose(L)
            histogram[cert.case] += 1
            vrep = verify_certificate(L, cert)
            if not vrep.all_passed:
                failures.append((entry.name, "certificate",
                                 {o.name: o.detail for o in vrep.failures()}))
    print(f"catalog: {len(entries)} algebras over {field}, max dim {args.max_dim}")
    for lemma in sorted(lemma_counts):
        ok, tot = lemma_counts[lemma]
        print(f"{lemma}: {ok}/{tot} pass")
    print(f"decomposition case histogram: one={histogram['one']} two={histogram['two']}")
    if histogram["two"] == 0:
        print("note: no case-two instance arose; case-two obligations are "
              "exercised only on synthetic certificates")
    if failures:
        print(f"FAILURES ({len(failures)}):")
        for name, what, wit in failures:
            print(f"  {name}: {what}: {wit}")
        return 1
    print("all checks pass")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liesc",
                                 description="Exact nilpotent Lie algebra toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate algebra files")
    g.add_argument("family", choices=["abelian", "heisenberg", "filiform",
                                      "central-product", "catalog"])
    g.add_argument("--n", type=int, help="dimension for abelian")
    g.add_argument("--m", type=int, help="parameter for heisenberg / central-product")
    g.add_argument("--dim", type=int, help="dimension for filiform")
    g.add_argument("--max-dim", type=int, default=6, help="catalog dimension bound")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--field", required=True, help="Fp (e.g. F3) or Q")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    i = sub.add_parser("info", help="print invariants of an algebra file")
    i.add_argument("path")
    i.set_defaults(func=_cmd_info)

    m = sub.add_parser("maximal", help="enumerate maximal subalgebras")
    m.add_argument("path")
    m.add_argument("--list", action="store_true")
    m.set_defaults(func=_cmd_maximal)

    c = sub.add_parser("check", help="check a property (exit 1 with witness on failure)")
    c.add_argument("property", choices=["frattinian"])
    c.add_argument("path")
    c.set_defaults(func=_cmd_check)

    d = sub.add_parser("decompose", help="central-product decomposition + verification")
    d.add_argument("path")
    d.add_argument("--report", help="write a JSON report envelope")
    d.set_defaults(func=_cmd_decompose)

    v = sub.add_parser("verify", help="run the lemma/decomposition suite over the catalog")
    v.add_argument("what", choices=["suite"])
    v.add_argument("--field", required=True)
    v.add_argument("--max-dim", type=int, default=6)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except LiescError as e:
        _emit_error(type(e).__name__, str(e))
        return 2
    except OSError as e:
        _emit_error("OSError", str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
