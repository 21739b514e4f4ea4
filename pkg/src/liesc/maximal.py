"""Enumeration of maximal subalgebras of a nilpotent Lie algebra.

For nilpotent L the maximal subalgebras are exactly the codimension-1
subspaces containing the derived subalgebra L^2, so enumeration reduces to
the hyperplanes of L/L^2.  A brute-force oracle over all subspaces is
provided at tiny scale to cross-check that premise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from .algebra import LieAlgebra
from .domains import DomainSpec
from .errors import InfiniteDomain, NotNilpotent, TooLarge, ZeroAlgebra
from .linear import Subspace, complement_basis, mat_inverse, mat_vec, nullspace


@dataclass(frozen=True)
class MaximalEnumeration:
    algebra: LieAlgebra
    items: Tuple[Subspace, ...]
    count: int


def _check_enumerable(L: LieAlgebra) -> None:
    if not L.domain.is_finite:
        raise InfiniteDomain("maximal-subalgebra enumeration requires a finite field")
    if L.dim == 0:
        raise ZeroAlgebra("the zero algebra has no maximal subalgebras")
    if not L.is_nilpotent():
        raise NotNilpotent("enumeration implemented for nilpotent algebras only")


def _normals_lex(p: int, d: int):
    """All functionals on F_p^d up to scalar: first nonzero coordinate 1, lex order."""
    for i in range(d):
        for tail in itertools.product(range(p), repeat=d - 1 - i):
            yield (0,) * i + (1,) + tail


def enumerate_maximal(L: LieAlgebra) -> MaximalEnumeration:
    """All maximal subalgebras: hyperplanes of L/L^2 pulled back to L."""
    _check_enumerable(L)
    d0 = L.domain
    p = d0.p
    n = L.dim
    L2 = L.derived()
    comp = complement_basis(L2, L.full_space())
    d = len(comp)
    basis = list(L2.rows) + list(comp)
    inv = mat_inverse(d0, basis)
    # proj[k] = coordinates of e_k in the quotient L/L^2 (complement part)
    proj = [mat_vec(d0, inv, L.basis_vector(k))[L2.dim:] for k in range(n)]

    items: List[Subspace] = []
    for f in _normals_lex(p, d):
        g = tuple(_dot_mod(d0, proj[k], f) for k in range(n))
        rows = nullspace(d0, [g], n)
        items.append(Subspace.from_rows(d0, n, rows))
    expected = (p ** d - 1) // (p - 1)
    assert len(items) == expected
    items.sort(key=lambda s: s.rows)
    return MaximalEnumeration(L, tuple(items), expected)


def _dot_mod(d0: DomainSpec, xs, ys):
    acc = d0.zero()
    for x, y in zip(xs, ys):
        acc = d0.add(acc, d0.mul(x, y))
    return acc


def all_subspaces(domain: DomainSpec, n: int):
    """Every subspace of F_p^n, generated directly in RREF form."""
    p = domain.p
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n)
                    if c not in pivset]
            for vals in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, c), v in zip(free, vals):
                    rows[r][c] = v
                yield Subspace(domain, n, tuple(tuple(r) for r in rows), tuple(pivots))


def brute_force_maximal(L: LieAlgebra, p_cap: int = 2, dim_cap: int = 4) -> List[Subspace]:
    """Oracle: maximal elements among all proper subalgebras, by exhaustion."""
    _check_enumerable(L)
    if L.domain.p > p_cap or L.dim > dim_cap:
        raise TooLarge(f"brute force capped at p <= {p_cap}, dim <= {dim_cap}")
    proper = [S for S in all_subspaces(L.domain, L.dim)
              if S.dim < L.dim and L.is_subalgebra(S)]
    maximal = [S for S in proper
               if not any(S.dim < T.dim and S <= T for T in proper)]
    maximal.sort(key=lambda s: s.rows)
    return maximal
