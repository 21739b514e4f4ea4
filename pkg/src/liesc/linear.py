"""Exact linear algebra: canonical subspaces and their lattice operations.

Vectors are coordinate rows over a fixed ambient basis, stored as tuples of
raw scalar values (ints mod p, or Fractions).  A ``Subspace`` keeps its basis
in unique reduced row echelon form, so subspace equality is plain equality
of the stored rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .domains import DomainSpec, Value
from .errors import AmbientMismatch, DomainMismatch, NotContained

Vector = tuple
Rows = tuple


def _as_rows(rows: Iterable[Sequence[Value]]) -> Rows:
    return tuple(tuple(r) for r in rows)


def rref(domain: DomainSpec, rows: Sequence[Sequence[Value]], width: int):
    """Reduced row echelon form. Returns (pivot_cols, nonzero_rows)."""
    for r in rows:
        if len(r) != width:
            raise AmbientMismatch(f"row of width {len(r)}, expected {width}")
    if not rows:
        return (), ()
    if domain.kind == "prime":
        a = np.array([[int(v) % domain.p for v in r] for r in rows], dtype=np.int64)
        rank, piv = kernels.rref_modp(a, domain.p)
        return tuple(int(c) for c in piv), _as_rows(a[:rank].tolist())
    return _rref_fraction([list(map(Fraction, r)) for r in rows], width)


def _rref_fraction(a: list, width: int):
    rows = len(a)
    piv = []
    r = 0
    for c in range(width):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    return tuple(piv), _as_rows(a[:r])


@dataclass(frozen=True)
class Subspace:
    """A subspace of the ambient coordinate space, in canonical RREF form."""

    domain: DomainSpec
    ambient: int
    rows: Rows
    pivots: tuple = field(default=(), compare=False)

    @classmethod
    def from_rows(cls, domain: DomainSpec, ambient: int, rows: Iterable[Sequence[Value]]) -> "Subspace":
        piv, red = rref(domain, list(rows), ambient)
        return cls(domain, ambient, red, piv)

    @classmethod
    def zero(cls, domain: DomainSpec, ambient: int) -> "Subspace":
        return cls(domain, ambient, (), ())

    @classmethod
    def full(cls, domain: DomainSpec, ambient: int) -> "Subspace":
        one, zero = domain.one(), domain.zero()
        rows = tuple(tuple(one if i == j else zero for j in range(ambient)) for i in range(ambient))
        return cls(domain, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check_peer(self, other: "Subspace") -> None:
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def _check_vector(self, v: Sequence[Value]) -> None:
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector width {len(v)}, ambient {self.ambient}")

    # -- lattice operations --------------------------------------------------

    def reduce(self, v: Sequence[Value]) -> Vector:
        """Residual of v after elimination by this basis; zero iff v is a member."""
        self._check_vector(v)
        d = self.domain
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = w[pc]
            if c != 0:
                w = [d.sub(x, d.mul(c, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[Value]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def __le__(self, other: "Subspace") -> bool:
        self._check_peer(other)
        return all(other.contains(r) for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_peer(other)
        return Subspace.from_rows(self.domain, self.ambient, self.rows + other.rows)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check_peer(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.domain, self.ambient)
        # Nullspace of the stacked-basis relation: a·U + b·W = 0 pairs an
        # element of U with its expression in W.
        du, dw = self.dim, other.dim
        cols = [[self.rows[i][k] for i in range(du)] + [other.rows[j][k] for j in range(dw)]
                for k in range(self.ambient)]
        rel = nullspace(self.domain, cols, du + dw)
        d = self.domain
        vecs = []
        for coeffs in rel:
            v = [d.zero()] * self.ambient
            for i in range(du):
                if coeffs[i] != 0:
                    v = [d.add(x, d.mul(coeffs[i], y)) for x, y in zip(v, self.rows[i])]
            vecs.append(v)
        return Subspace.from_rows(self.domain, self.ambient, vecs)

    def coordinates(self, v: Sequence[Value]) -> Vector:
        """Coordinates of a member vector in this canonical basis."""
        self._check_vector(v)
        if not self.contains(v):
            raise NotContained("vector not in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def vector_count(self) -> int:
        if not self.domain.is_finite:
            raise DomainMismatch("infinite domain")
        return self.domain.p ** self.dim

    def __str__(self) -> str:
        return "span{" + "; ".join("(" + ", ".join(map(str, r)) + ")" for r in self.rows) + "}"


def canonicalize(domain: DomainSpec, ambient: int, vectors: Iterable[Sequence[Value]]) -> Subspace:
    """Canonical subspace spanned by the given row vectors."""
    return Subspace.from_rows(domain, ambient, vectors)


def member(v: Sequence[Value], U: Subspace) -> bool:
    return U.contains(v)


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    return U + W


def intersect(U: Subspace, W: Subspace) -> Subspace:
    return U & W


def nullspace(domain: DomainSpec, rows: Sequence[Sequence[Value]], width: int) -> Rows:
    """Basis of the right kernel {x : M·x = 0} of the given matrix."""
    piv, red = rref(domain, rows, width)
    pivset = set(piv)
    free = [c for c in range(width) if c not in pivset]
    d = domain
    basis = []
    for f in free:
        x = [d.zero()] * width
        x[f] = d.one()
        for i, pc in enumerate(piv):
            x[pc] = d.neg(red[i][f])
        basis.append(tuple(x))
    return tuple(basis)


def left_nullspace(domain: DomainSpec, rows: Sequence[Sequence[Value]], width: int) -> Rows:
    """Basis of {c : c·M = 0} for M given by its rows (each of the given width)."""
    n = len(rows)
    cols = [[rows[i][k] for i in range(n)] for k in range(width)]
    return nullspace(domain, cols, n)


def complement_basis(U: Subspace, W: Subspace) -> list:
    """Vectors of W extending a basis of U to a basis of W.

    Returned vectors are rows of W's canonical basis; count = dim W - dim U.
    """
    U._check_peer(W)
    if not U <= W:
        raise NotContained("U is not contained in W")
    work = U
    out = []
    for w in W.rows:
        if not work.contains(w):
            out.append(w)
            work = work + Subspace.from_rows(U.domain, U.ambient, [w])
    assert len(out) == W.dim - U.dim
    return out


def mat_inverse(domain: DomainSpec, rows: Sequence[Sequence[Value]]) -> Rows:
    """Inverse of a square matrix given by rows; raises on singular input."""
    n = len(rows)
    aug = [list(r) + [domain.one() if i == j else domain.zero() for j in range(n)]
           for i, r in enumerate(rows)]
    piv, red = rref(domain, aug, 2 * n)
    if len(red) != n or piv[:n] != tuple(range(n)):
        from .errors import NotInvertible
        raise NotInvertible("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def vec_zero(domain: DomainSpec, n: int) -> Vector:
    return tuple(domain.zero() for _ in range(n))


def vec_is_zero(v: Sequence[Value]) -> bool:
    return all(x == 0 for x in v)


def vec_add(domain: DomainSpec, a: Sequence[Value], b: Sequence[Value]) -> Vector:
    return tuple(domain.add(x, y) for x, y in zip(a, b))


def vec_sub(domain: DomainSpec, a: Sequence[Value], b: Sequence[Value]) -> Vector:
    return tuple(domain.sub(x, y) for x, y in zip(a, b))


def vec_scale(domain: DomainSpec, c: Value, a: Sequence[Value]) -> Vector:
    return tuple(domain.mul(c, x) for x in a)


def mat_vec(domain: DomainSpec, rows: Sequence[Sequence[Value]], v: Sequence[Value]) -> Vector:
    """Row-vector times matrix: sum_i v_i * rows_i."""
    d = domain
    out = [d.zero()] * (len(rows[0]) if rows else 0)
    for c, row in zip(v, rows):
        if c != 0:
            out = [d.add(x, d.mul(c, y)) for x, y in zip(out, row)]
    return tuple(out)


def push_forward(local: Subspace, inclusion_rows: Rows, ambient: int) -> Subspace:
    """Map a subspace expressed in a subalgebra's basis into ambient coordinates."""
    vecs = [mat_vec(local.domain, inclusion_rows, r) for r in local.rows]
    return Subspace.from_rows(local.domain, ambient, vecs)


def pull_back(sub: Subspace, carrier: Subspace) -> Subspace:
    """Express a subspace of ``carrier`` in carrier's canonical-basis coordinates."""
    vecs = [carrier.coordinates(r) for r in sub.rows]
    return Subspace.from_rows(sub.domain, carrier.dim, vecs)
