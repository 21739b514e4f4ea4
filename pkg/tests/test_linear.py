import random

import pytest

from liesc.domains import GF, RATIONALS
from liesc.errors import AmbientMismatch, DomainMismatch, NotContained
from liesc.linear import (
    Subspace,
    canonicalize,
    complement_basis,
    intersect,
    member,
    nullspace,
    subspace_sum,
)

from conftest import random_subspace, random_vector


def span(domain, n, *rows):
    return Subspace.from_rows(domain, n, rows)


def e(domain, n, i):
    return tuple(domain.one() if j == i else domain.zero() for j in range(n))


def test_canonicalize_f2_example():
    # hand row-reduction: r2 := r1 + r2 over F_2
    S = canonicalize(GF(2), 3, [(1, 1, 0), (0, 1, 1)])
    assert S.rows == ((1, 0, 1), (0, 1, 1))


def test_canonicalize_zero_rows():
    S = canonicalize(GF(3), 4, [(0, 0, 0, 0), (0, 0, 0, 0)])
    assert S.dim == 0 and S.rows == ()


def test_canonicalize_full_rank_identity():
    d = GF(5)
    S = canonicalize(d, 3, [(1, 1, 0), (1, 1, 1), (2, 1, 1)])
    assert S == Subspace.full(d, 3)
    assert S.rows == tuple(e(d, 3, i) for i in range(3))


def test_canonicalize_idempotent_and_unique(rng):
    for domain in (GF(2), GF(3), RATIONALS):
        for _ in range(50):
            U = random_subspace(domain, 5, rng)
            again = canonicalize(domain, 5, U.rows)
            assert again == U
            # a reshuffled, rescaled generating set canonicalizes identically
            gens = list(U.rows)
            rng.shuffle(gens)
            if gens and domain.kind == "prime":
                c = rng.randrange(1, domain.p)
                gens[0] = tuple(domain.mul(c, x) for x in gens[0])
            assert canonicalize(domain, 5, gens) == U


def test_sum_zero_neutral(rng):
    d = GF(3)
    for _ in range(20):
        U = random_subspace(d, 4, rng)
        assert subspace_sum(U, Subspace.zero(d, 4)) == U


def test_sum_of_axes():
    d = GF(3)
    S = subspace_sum(span(d, 3, e(d, 3, 0)), span(d, 3, e(d, 3, 1)))
    assert S.dim == 2 and S == span(d, 3, e(d, 3, 0), e(d, 3, 1))


def test_dimension_formula_1000_pairs():
    for domain in (GF(2), GF(3), RATIONALS):
        rng = random.Random(99)
        for _ in range(1000):
            U = random_subspace(domain, 5, rng, max_gens=3)
            W = random_subspace(domain, 5, rng, max_gens=3)
            assert (U + W).dim + (U & W).dim == U.dim + W.dim


def test_intersect_idempotent(rng):
    d = GF(5)
    for _ in range(20):
        U = random_subspace(d, 4, rng)
        assert intersect(U, U) == U


def test_intersect_planes():
    d = GF(2)
    A = span(d, 3, e(d, 3, 0), e(d, 3, 1))
    B = span(d, 3, e(d, 3, 1), e(d, 3, 2))
    assert intersect(A, B) == span(d, 3, e(d, 3, 1))


def test_intersect_contained_in_both(rng):
    for domain in (GF(2), GF(3)):
        for _ in range(200):
            U = random_subspace(domain, 5, rng)
            W = random_subspace(domain, 5, rng)
            I = U & W
            assert I <= U and I <= W
            for row in I.rows:
                assert member(row, U) and member(row, W)


def test_member():
    d = GF(5)
    U = span(d, 3, e(d, 3, 0), e(d, 3, 2))
    assert member((0, 0, 0), U)
    assert member(e(d, 3, 2), U)
    assert not member(e(d, 3, 1), U)


def test_member_generators(rng):
    d = GF(3)
    for _ in range(100):
        U = random_subspace(d, 5, rng)
        for row in U.rows:
            assert member(row, U)
        assert member(tuple([0] * 5), U)


def test_lattice_laws(rng):
    for domain in (GF(2), GF(3), RATIONALS):
        reps = 1000 if domain.kind == "prime" else 200
        for _ in range(reps):
            U = random_subspace(domain, 4, rng, max_gens=3)
            W = random_subspace(domain, 4, rng, max_gens=3)
            X = random_subspace(domain, 4, rng, max_gens=3)
            assert U + W == W + U
            assert (U & W) == (W & U)
            assert (U + W) + X == U + (W + X)
            assert (U & W) & X == U & (W & X)
            assert U + (U & W) == U
            assert U & (U + W) == U


def test_complement_basis_trivial_cases(rng):
    d = GF(3)
    U = random_subspace(d, 4, rng)
    assert complement_basis(U, U) == []
    full = Subspace.full(d, 4)
    ext = complement_basis(Subspace.zero(d, 4), full)
    assert len(ext) == 4
    assert Subspace.from_rows(d, 4, ext) == full


def test_complement_basis_extends():
    d = GF(2)
    U = span(d, 3, e(d, 3, 2))
    W = Subspace.full(d, 3)
    ext = complement_basis(U, W)
    assert len(ext) == 2
    assert Subspace.from_rows(d, 3, list(U.rows) + ext) == W


def test_complement_basis_random(rng):
    for domain in (GF(2), GF(5), RATIONALS):
        for _ in range(50):
            W = random_subspace(domain, 5, rng)
            U = random_subspace(domain, 5, rng) & W
            ext = complement_basis(U, W)
            assert len(ext) == W.dim - U.dim
            assert Subspace.from_rows(domain, 5, list(U.rows) + ext) == W


def test_complement_requires_containment():
    d = GF(2)
    with pytest.raises(NotContained):
        complement_basis(span(d, 3, e(d, 3, 0)), span(d, 3, e(d, 3, 1)))


def test_mismatch_errors():
    with pytest.raises(DomainMismatch):
        subspace_sum(Subspace.full(GF(2), 3), Subspace.full(GF(3), 3))
    with pytest.raises(AmbientMismatch):
        subspace_sum(Subspace.full(GF(2), 3), Subspace.full(GF(2), 4))
    with pytest.raises(AmbientMismatch):
        member((1, 0), Subspace.full(GF(2), 3))


def test_nullspace():
    d = GF(5)
    ker = nullspace(d, [(1, 2, 3)], 3)
    assert len(ker) == 2
    for v in ker:
        assert (v[0] + 2 * v[1] + 3 * v[2]) % 5 == 0
