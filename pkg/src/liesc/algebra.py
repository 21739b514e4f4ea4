"""Lie algebras by structure constants and their standard invariants.

The bracket is stored only for basis pairs i < j; i = j is forced zero and
i > j follows by antisymmetry, so the algebra is alternating by construction
even in characteristic 2.  The Jacobi identity is validated fail-fast when
an algebra is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from .domains import DomainSpec, Value
from .errors import (
    AmbientMismatch,
    DomainMismatch,
    JacobiViolation,
    NotASubalgebra,
    NotNilpotent,
)
from .linear import Subspace, Vector, left_nullspace, vec_is_zero, vec_zero


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "lower" | "upper"
    terms: Tuple[Subspace, ...]
    nilpotency_class: Optional[int]  # None marks "not nilpotent"


class LieAlgebra:
    """A finite-dimensional Lie algebra on a fixed basis e_1..e_n."""

    def __init__(self, domain: DomainSpec, dim: int,
                 brackets: Dict[Tuple[int, int], Sequence[Value]],
                 validate: bool = True):
        """``brackets`` maps 0-based pairs (i, j) with i < j to [e_i, e_j]."""
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.domain = domain
        self.dim = dim
        sc: Dict[Tuple[int, int], Vector] = {}
        for (i, j), v in brackets.items():
            if not (0 <= i < j < dim):
                raise AmbientMismatch(f"bad bracket pair ({i}, {j}) for dim {dim}")
            if len(v) != dim:
                raise AmbientMismatch(f"bracket value of width {len(v)}, expected {dim}")
            vv = tuple(domain.coerce(x) for x in v)
            if not vec_is_zero(vv):
                sc[(i, j)] = vv
        self.sc = sc
        self._np_tensor: Optional[np.ndarray] = None
        if domain.kind == "prime":
            t = np.zeros((dim, dim, dim), dtype=np.int64)
            for (i, j), v in sc.items():
                t[i, j] = v
                t[j, i] = [domain.neg(x) for x in v]
            self._np_tensor = t
        self._cache: dict = {}
        if validate:
            self._validate_jacobi()

    # -- construction checks --------------------------------------------------

    def _validate_jacobi(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in self.sc:
                    continue
                # only pairs with a nonzero bracket can contribute
                for k in range(n):
                    if k in (i, j):
                        continue
                    s = self._jacobiator(i, j, k)
                    if not vec_is_zero(s):
                        trip = tuple(sorted((i + 1, j + 1, k + 1)))
                        raise JacobiViolation(trip)

    def _jacobiator(self, i: int, j: int, k: int) -> Vector:
        d = self.domain
        t1 = self.bracket(self.basis_bracket(i, j), self.basis_vector(k))
        t2 = self.bracket(self.basis_bracket(j, k), self.basis_vector(i))
        t3 = self.bracket(self.basis_bracket(k, i), self.basis_vector(j))
        return tuple(d.add(d.add(a, b), c) for a, b, c in zip(t1, t2, t3))

    # -- basic vectors ---------------------------------------------------------

    def basis_vector(self, i: int) -> Vector:
        d = self.domain
        return tuple(d.one() if j == i else d.zero() for j in range(self.dim))

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return vec_zero(self.domain, self.dim)
        if i < j:
            return self.sc.get((i, j), vec_zero(self.domain, self.dim))
        v = self.sc.get((j, i))
        if v is None:
            return vec_zero(self.domain, self.dim)
        return tuple(self.domain.neg(x) for x in v)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.domain, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full(self.domain, self.dim)

    # -- the bracket ------------------------------------------------------------

    def bracket(self, x: Sequence[Value], y: Sequence[Value]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatch("vector width does not match algebra dimension")
        return self.bracket_rows([x], [y])[0]

    def bracket_rows(self, xs: Sequence[Sequence[Value]], ys: Sequence[Sequence[Value]]) -> list:
        """All pairwise brackets [x_s, y_t], flattened s-major."""
        if not xs or not ys:
            return []
        if self._np_tensor is not None:
            p = self.domain.p
            X = np.asarray([[int(v) for v in r] for r in xs], dtype=np.int64)
            Y = np.asarray([[int(v) for v in r] for r in ys], dtype=np.int64)
            out = np.einsum("sj,tl,jlk->stk", X, Y, self._np_tensor) % p
            return [tuple(int(v) for v in out[s, t])
                    for s in range(len(xs)) for t in range(len(ys))]
        d = self.domain
        res = []
        for x in xs:
            for y in ys:
                acc = list(vec_zero(d, self.dim))
                for (i, j), v in self.sc.items():
                    c = d.sub(d.mul(x[i], y[j]), d.mul(x[j], y[i]))
                    if c != 0:
                        acc = [d.add(a, d.mul(c, b)) for a, b in zip(acc, v)]
                res.append(tuple(acc))
        return res

    def bracket_spaces(self, U: Subspace, W: Subspace) -> Subspace:
        """Span of [u, w] over basis vectors of U and W, canonicalized."""
        self._check_space(U)
        self._check_space(W)
        vecs = self.bracket_rows(U.rows, W.rows)
        return Subspace.from_rows(self.domain, self.dim, vecs)

    def _check_space(self, U: Subspace) -> None:
        if U.domain != self.domain:
            raise DomainMismatch(f"{U.domain} vs {self.domain}")
        if U.ambient != self.dim:
            raise AmbientMismatch(f"ambient {U.ambient} vs dim {self.dim}")

    # -- centralizers and series -------------------------------------------------

    def relative_centralizer(self, S: Subspace, Z: Subspace) -> Subspace:
        """{x : [x, s] in Z for every basis vector s of S}."""
        self._check_space(S)
        self._check_space(Z)
        n = self.dim
        if S.dim == 0 or n == 0:
            return self.full_space()
        basis = [self.basis_vector(i) for i in range(n)]
        br = self.bracket_rows(basis, S.rows)  # i-major over t
        rows = []
        for i in range(n):
            row: list = []
            for t in range(S.dim):
                row.extend(Z.reduce(br[i * S.dim + t]))
            rows.append(row)
        ker = left_nullspace(self.domain, rows, S.dim * n)
        return Subspace.from_rows(self.domain, n, ker)

    def centralizer(self, S: Subspace) -> Subspace:
        return self.relative_centralizer(S, self.zero_space())

    def center(self) -> Subspace:
        if "center" not in self._cache:
            self._cache["center"] = self.centralizer(self.full_space())
        return self._cache["center"]

    def lower_central_series(self) -> SeriesReport:
        if "lower" in self._cache:
            return self._cache["lower"]
        terms = [self.full_space()]
        while True:
            nxt = self.bracket_spaces(self.full_space(), terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
            if nxt.dim == 0:
                break
        cls: Optional[int]
        if terms[-1].dim == 0:
            cls = len(terms) - 1
        else:
            cls = None
        rep = SeriesReport("lower", tuple(terms), cls)
        self._cache["lower"] = rep
        return rep

    def upper_central_series(self) -> SeriesReport:
        if "upper" in self._cache:
            return self._cache["upper"]
        terms = [self.zero_space()]
        full = self.full_space()
        while True:
            nxt = self.relative_centralizer(full, terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
            if nxt.dim == self.dim:
                break
        cls = len(terms) - 1 if terms[-1].dim == self.dim else None
        rep = SeriesReport("upper", tuple(terms), cls)
        self._cache["upper"] = rep
        return rep

    def derived(self) -> Subspace:
        """L^2 = [L, L]."""
        low = self.lower_central_series()
        return low.terms[1] if len(low.terms) > 1 else low.terms[0]

    def is_nilpotent(self) -> bool:
        return self.lower_central_series().nilpotency_class is not None

    def nilpotency_class(self) -> int:
        c = self.lower_central_series().nilpotency_class
        if c is None:
            raise NotNilpotent("algebra is not nilpotent")
        return c

    def is_abelian(self) -> bool:
        return self.derived().dim == 0

    def frattini(self) -> Subspace:
        """Frattini subalgebra; equals the derived subalgebra for nilpotent L."""
        if not self.is_nilpotent():
            raise NotNilpotent("Frattini subalgebra computed only for nilpotent algebras")
        return self.derived()

    # -- subalgebra predicates ----------------------------------------------------

    def is_subalgebra(self, U: Subspace) -> bool:
        return self.bracket_spaces(U, U) <= U

    def is_ideal(self, U: Subspace) -> bool:
        return self.bracket_spaces(self.full_space(), U) <= U

    def subalgebra_center(self, M: Subspace) -> Subspace:
        """Z(M) for a subalgebra M, computed inside the ambient algebra."""
        if not self.is_subalgebra(M):
            raise NotASubalgebra("argument is not closed under the bracket")
        return M & self.centralizer(M)

    def generated_subalgebra(self, gens: Iterable[Sequence[Value]]) -> Subspace:
        S = Subspace.from_rows(self.domain, self.dim, list(gens))
        for _ in range(self.dim + 1):
            B = self.bracket_spaces(S, S)
            if B <= S:
                return S
            S = S + B
        raise AssertionError("closure did not terminate")  # pragma: no cover

    # -- misc -----------------------------------------------------------------------

    def structure_summary(self) -> dict:
        low = self.lower_central_series()
        return {
            "dim": self.dim,
            "domain": str(self.domain),
            "nilpotent": low.nilpotency_class is not None,
            "class": low.nilpotency_class,
            "lower_series_dims": [t.dim for t in low.terms],
            "center_dim": self.center().dim,
        }

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, domain={self.domain}, nonzero_pairs={len(self.sc)})"
