"""Builders for the named algebra families and for central products.

Also provides ``catalog``: a deterministic corpus of small nilpotent algebras
(named families, direct sums, central products, and seeded pseudo-random
subalgebras of strictly upper-triangular matrices) used by the property and
acceptance suites.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .algebra import LieAlgebra
from .domains import DomainSpec, Value
from .errors import (
    DomainMismatch,
    IdentificationNotCentral,
    InfiniteDomain,
    InternalAssertionFailed,
    NotASubalgebra,
    NotInvertible,
)
from .linear import (
    Subspace,
    complement_basis,
    mat_inverse,
    mat_vec,
    push_forward,
    vec_is_zero,
)


def abelian(n: int, d: DomainSpec) -> LieAlgebra:
    """A(n): all structure constants zero."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LieAlgebra(d, n, {})


def heisenberg(m: int, d: DomainSpec) -> LieAlgebra:
    """H(m): dim 2m+1, basis (x_1,..,x_2m, x) with [x_{2i-1}, x_{2i}] = x."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 * m + 1
    one, zero = d.one(), d.zero()
    x = tuple(one if k == n - 1 else zero for k in range(n))
    brackets = {(2 * i, 2 * i + 1): x for i in range(m)}
    return LieAlgebra(d, n, brackets)


def filiform_standard(n: int, d: DomainSpec) -> LieAlgebra:
    """The model filiform algebra: [e_1, e_i] = e_{i+1} for 2 <= i <= n-1."""
    if n < 3:
        raise ValueError("n must be at least 3")
    one, zero = d.one(), d.zero()

    def e(k):
        return tuple(one if t == k else zero for t in range(n))

    brackets = {(0, i): e(i + 1) for i in range(1, n - 1)}
    return LieAlgebra(d, n, brackets)


def direct_sum(A: LieAlgebra, B: LieAlgebra) -> LieAlgebra:
    if A.domain != B.domain:
        raise DomainMismatch(f"{A.domain} vs {B.domain}")
    d = A.domain
    n = A.dim + B.dim
    zero = d.zero()

    def pad_left(v):
        return tuple(v) + (zero,) * B.dim

    def pad_right(v):
        return (zero,) * A.dim + tuple(v)

    brackets = {}
    for (i, j), v in A.sc.items():
        brackets[(i, j)] = pad_left(v)
    for (i, j), v in B.sc.items():
        brackets[(i + A.dim, j + A.dim)] = pad_right(v)
    return LieAlgebra(d, n, brackets)


def restrict(L: LieAlgebra, U: Subspace) -> Tuple[LieAlgebra, Tuple]:
    """The subalgebra on U's canonical basis, plus the inclusion (basis rows)."""
    L._check_space(U)
    if not L.is_subalgebra(U):
        raise NotASubalgebra("cannot restrict to a non-subalgebra")
    m = U.dim
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = L.bracket(U.rows[a], U.rows[b])
            if not vec_is_zero(w):
                brackets[(a, b)] = U.coordinates(w)
    return LieAlgebra(L.domain, m, brackets, validate=False), U.rows


@dataclass(frozen=True)
class CentralProductSpec:
    """Identify a central subspace of ``left`` with one of ``right``.

    The identification maps ``identified_left[i]`` to ``identified_right[i]``,
    extended linearly; both row lists must be linearly independent.
    """

    left: LieAlgebra
    right: LieAlgebra
    identified_left: Tuple
    identified_right: Tuple


@dataclass(frozen=True)
class CentralProduct:
    algebra: LieAlgebra
    emb_left: Tuple   # rows: images of left's basis vectors
    emb_right: Tuple
    identified_image: Subspace  # img(A) ∩ img(B) inside the product
    strict: bool      # True iff img(A) ∩ img(B) = Z(product)


def _quotient_by_central(L: LieAlgebra, K: Subspace) -> Tuple[LieAlgebra, list]:
    """Quotient of L by a central ideal K.

    Returns the quotient algebra on a canonical complement basis and the
    coordinate rows (in L) of that complement basis.
    """
    d = L.domain
    comp = complement_basis(K, L.full_space())
    basis = list(K.rows) + list(comp)
    inv = mat_inverse(d, basis)
    k = K.dim

    def qcoords(v):
        # v expressed in the K+comp basis; drop the K part
        c = mat_vec(d, inv, v)
        return c[k:]

    q = len(comp)
    brackets = {}
    for a in range(q):
        for b in range(a + 1, q):
            w = L.bracket(comp[a], comp[b])
            if not vec_is_zero(w):
                c = qcoords(w)
                if not vec_is_zero(c):
                    brackets[(a, b)] = c
    return LieAlgebra(d, q, brackets, validate=False), [qcoords(v) for v in _identity_rows(d, L.dim)]


def _identity_rows(d: DomainSpec, n: int):
    one, zero = d.one(), d.zero()
    return [tuple(one if j == i else zero for j in range(n)) for i in range(n)]


def central_product(spec: CentralProductSpec) -> CentralProduct:
    A, B = spec.left, spec.right
    if A.domain != B.domain:
        raise DomainMismatch(f"{A.domain} vs {B.domain}")
    d = A.domain
    dom_rows = tuple(tuple(d.coerce(x) for x in r) for r in spec.identified_left)
    img_rows = tuple(tuple(d.coerce(x) for x in r) for r in spec.identified_right)
    if len(dom_rows) != len(img_rows):
        raise NotInvertible("identification row counts differ")
    dom_span = Subspace.from_rows(d, A.dim, dom_rows)
    img_span = Subspace.from_rows(d, B.dim, img_rows)
    if dom_span.dim != len(dom_rows) or img_span.dim != len(img_rows):
        raise NotInvertible("identification rows are linearly dependent")
    if not dom_span <= A.center():
        raise IdentificationNotCentral("identified subspace not central in the left factor")
    if not img_span <= B.center():
        raise IdentificationNotCentral("identified image not central in the right factor")

    D = direct_sum(A, B)
    zero = d.zero()
    graph = [tuple(dr) + tuple(d.neg(x) for x in ir) for dr, ir in zip(dom_rows, img_rows)]
    K = Subspace.from_rows(d, D.dim, graph)
    Q, proj_rows = _quotient_by_central(D, K)

    emb_left = tuple(tuple(proj_rows[i]) for i in range(A.dim))
    emb_right = tuple(tuple(proj_rows[A.dim + j]) for j in range(B.dim))
    img_A = Subspace.from_rows(d, Q.dim, emb_left)
    img_B = Subspace.from_rows(d, Q.dim, emb_right)

    # post-hoc verification of the defining identities
    if Q.bracket_spaces(img_A, img_B).dim != 0:
        raise InternalAssertionFailed("[img(A), img(B)] != 0 in the central product")
    identified = Subspace.from_rows(
        d, Q.dim, [mat_vec(d, emb_left, r) for r in dom_span.rows])
    if (img_A & img_B) != identified:
        raise InternalAssertionFailed("img(A) ∩ img(B) differs from the identified subspace")

    Z = Q.center()
    strict = (img_A & img_B) == Z
    if strict:
        ZA = Q.subalgebra_center(img_A)
        ZB = Q.subalgebra_center(img_B)
        if (ZA & ZB) != (img_A & img_B) or (ZA + ZB) != Z:
            raise InternalAssertionFailed("central-product center identities failed")
    return CentralProduct(Q, emb_left, emb_right, identified, strict)


def heisenberg_as_product(m: int, d: DomainSpec) -> CentralProduct:
    """Central product of m copies of H(1) glued along their full centers."""
    if m < 1:
        raise ValueError("m must be at least 1")
    acc = heisenberg(1, d)
    prod = None
    for _ in range(m - 1):
        h = heisenberg(1, d)
        z_left = acc.center().rows
        z_right = h.center().rows
        prod = central_product(CentralProductSpec(acc, h, z_left, z_right))
        acc = prod.algebra
    if prod is None:
        # degenerate single-factor case: keep the builder total
        full = acc.full_space()
        return CentralProduct(acc, tuple(_identity_rows(d, acc.dim)),
                              tuple(_identity_rows(d, acc.dim)),
                              full, full == acc.center())
    return prod


# -- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra


def _mat_mul(d: DomainSpec, X, Y, t: int):
    return tuple(
        tuple(
            _dot(d, [X[i * t + k] for k in range(t)], [Y[k * t + j] for k in range(t)])
            for j in range(t)
        )
        for i in range(t)
    )


def _dot(d: DomainSpec, xs, ys):
    acc = d.zero()
    for x, y in zip(xs, ys):
        acc = d.add(acc, d.mul(x, y))
    return acc


def _commutator_flat(d: DomainSpec, x, y, t: int):
    X = _mat_mul(d, x, y, t)
    Y = _mat_mul(d, y, x, t)
    return tuple(d.sub(X[i][j], Y[i][j]) for i in range(t) for j in range(t))


def _random_upper_triangular_algebra(d: DomainSpec, t: int, rng: random.Random) -> LieAlgebra:
    """A bracket-closed subalgebra of strictly upper-triangular t x t matrices."""
    slots = [(i, j) for i in range(t) for j in range(i + 1, t)]
    gens = []
    for _ in range(rng.randint(2, 3)):
        g = [d.zero()] * (t * t)
        for (i, j) in slots:
            g[i * t + j] = rng.randrange(d.p)  # type: ignore[arg-type]
        gens.append(tuple(g))
    S = Subspace.from_rows(d, t * t, gens)
    for _ in range(t * t):
        new = [_commutator_flat(d, a, b, t) for a in S.rows for b in S.rows]
        nxt = S + Subspace.from_rows(d, t * t, new)
        if nxt == S:
            break
        S = nxt
    m = S.dim
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = _commutator_flat(d, S.rows[a], S.rows[b], t)
            if not vec_is_zero(w):
                brackets[(a, b)] = S.coordinates(w)
    return LieAlgebra(d, m, brackets)


def catalog(d: DomainSpec, max_dim: int, seed: int = 0) -> List[CatalogEntry]:
    """Deterministic corpus of nilpotent algebras of dimension <= max_dim."""
    if not d.is_finite:
        raise InfiniteDomain("catalog enumeration requires a finite domain")
    if max_dim > 8:
        raise ValueError("max_dim must be at most 8")
    base: List[CatalogEntry] = []

    h1 = heisenberg(1, d)
    m = 1
    while 2 * m + 1 <= max_dim:
        base.append(CatalogEntry(f"H{m}", heisenberg(m, d)))
        m += 1
    for n in range(3, max_dim + 1):
        base.append(CatalogEntry(f"fil{n}", filiform_standard(n, d)))
    if max_dim >= 6:
        base.append(CatalogEntry("H1+H1", direct_sum(h1, h1)))
    if max_dim >= 5:
        base.append(CatalogEntry("H1.H1", heisenberg_as_product(2, d).algebra))
    if max_dim >= 6:
        hp = central_product(CentralProductSpec(
            h1, direct_sum(h1, abelian(1, d)),
            h1.center().rows,
            (tuple((d.one() if i == 2 else d.zero()) for i in range(4)),),
        ))
        base.append(CatalogEntry("H1.(H1+A1)", hp.algebra))

    rng = random.Random(seed)
    idx = 0
    for t in (3, 4):
        for _ in range(12):
            alg = _random_upper_triangular_algebra(d, t, rng)
            if 1 <= alg.dim <= max_dim and not alg.is_abelian():
                base.append(CatalogEntry(f"rand{idx}_ut{t}", alg))
            idx += 1

    out: List[CatalogEntry] = [CatalogEntry(f"A{n}", abelian(n, d))
                               for n in range(1, max_dim + 1)]
    out.extend(base)
    # abelian-padded variants widen L/L^2 and hence the maximal-subalgebra scans
    for e in base:
        for k in range(1, max_dim - e.algebra.dim + 1):
            out.append(CatalogEntry(f"{e.name}+A{k}",
                                    direct_sum(e.algebra, abelian(k, d))))
    return out
