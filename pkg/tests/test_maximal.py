import pytest

from liesc.constructions import abelian, catalog, filiform_standard, heisenberg
from liesc.domains import GF, RATIONALS
from liesc.errors import InfiniteDomain, NotNilpotent, TooLarge, ZeroAlgebra
from liesc.linear import Subspace
from liesc.maximal import all_subspaces, brute_force_maximal, enumerate_maximal
from test_algebra import two_dim_nonnilpotent


def span(L, *rows):
    return Subspace.from_rows(L.domain, L.dim, rows)


def expected_count(L):
    p = L.domain.p
    d = L.dim - L.derived().dim
    return (p ** d - 1) // (p - 1)


def test_h1_f2_explicit():
    H = heisenberg(1, GF(2))
    enum = enumerate_maximal(H)
    assert enum.count == 3
    expected = {
        span(H, (1, 0, 0), (0, 0, 1)),
        span(H, (0, 1, 0), (0, 0, 1)),
        span(H, (1, 1, 0), (0, 0, 1)),
    }
    assert set(enum.items) == expected


def test_counts_match_formula():
    cases = [
        heisenberg(1, GF(2)), heisenberg(2, GF(3)), heisenberg(3, GF(5)),
        filiform_standard(5, GF(2)), abelian(3, GF(3)),
    ]
    for L in cases:
        enum = enumerate_maximal(L)
        assert enum.count == expected_count(L)
        assert len(enum.items) == enum.count


def test_items_are_maximal_subalgebras():
    for L in (heisenberg(2, GF(2)), filiform_standard(4, GF(3))):
        L2 = L.derived()
        for M in enumerate_maximal(L).items:
            assert M.dim == L.dim - 1
            assert L.is_subalgebra(M)
            assert L2 <= M
            assert M != L.full_space()


def test_no_duplicates_and_sorted():
    enum = enumerate_maximal(heisenberg(2, GF(3)))
    assert len(set(enum.items)) == enum.count
    assert list(enum.items) == sorted(enum.items, key=lambda s: s.rows)


def test_oracle_agreement():
    # independent brute-force subspace scan over every small F_2 catalog entry
    for entry in catalog(GF(2), 4):
        L = entry.algebra
        if L.dim == 0:
            continue
        fast = set(enumerate_maximal(L).items)
        slow = set(brute_force_maximal(L))
        assert fast == slow, entry.name


def test_all_subspaces_counts():
    # Gaussian binomials over F_2, n = 3: 1 + 7 + 7 + 1
    assert len(list(all_subspaces(GF(2), 3))) == 16
    # over F_3, n = 2: 1 + 4 + 1
    assert len(list(all_subspaces(GF(3), 2))) == 6


def test_brute_force_caps():
    with pytest.raises(TooLarge):
        brute_force_maximal(heisenberg(2, GF(2)))
    with pytest.raises(TooLarge):
        brute_force_maximal(heisenberg(1, GF(3)))
    assert brute_force_maximal(heisenberg(1, GF(3)), p_cap=3)


def test_guards():
    with pytest.raises(InfiniteDomain):
        enumerate_maximal(heisenberg(1, RATIONALS))
    with pytest.raises(ZeroAlgebra):
        enumerate_maximal(abelian(0, GF(2)))
    with pytest.raises(NotNilpotent):
        enumerate_maximal(two_dim_nonnilpotent(GF(3)))


def test_dichotomy_center_containment():
    # for each maximal M either Z(L) <= M, or M + Z(L) = L
    for L in (heisenberg(2, GF(2)), filiform_standard(5, GF(3))):
        Z = L.center()
        for M in enumerate_maximal(L).items:
            assert Z <= M or (M + Z) == L.full_space()
