import pytest

from liesc.constructions import (
    abelian,
    catalog,
    direct_sum,
    filiform_standard,
    heisenberg,
)
from liesc.domains import GF, RATIONALS
from liesc.errors import InfiniteDomain, NotNilpotent
from liesc.frattinian import is_frattinian, lemma_suite, minimal_supplement
from liesc.linear import Subspace
from liesc.maximal import enumerate_maximal
from test_algebra import two_dim_nonnilpotent


def span(L, *rows):
    return Subspace.from_rows(L.domain, L.dim, rows)


def bounded_centre_example():
    """A Frattinian F_2 algebra where every maximal M containing Z(L)
    has Z(M) inside Z(L) + L^2."""
    from liesc.algebra import LieAlgebra
    sc = {(0, 1): (0, 0, 0, 0, 1, 0),
          (0, 2): (0, 0, 0, 1, 0, 0),
          (0, 4): (0, 0, 1, 0, 0, 0),
          (0, 5): (0, 0, 0, 1, 0, 0),
          (1, 2): (0, 0, 0, 1, 0, 0),
          (1, 4): (0, 0, 0, 1, 0, 1)}
    return LieAlgebra(GF(2), 6, sc)


class TestIsFrattinian:
    def test_heisenberg_is_frattinian(self):
        for m in (1, 2):
            for d in (GF(2), GF(3)):
                v = is_frattinian(heisenberg(m, d))
                assert v.is_frattinian and v.witness is None
                assert v.checked_count == len(enumerate_maximal(heisenberg(m, d)).items)

    def test_abelian_short_circuit(self):
        for d in (GF(2), RATIONALS):
            v = is_frattinian(abelian(3, d))
            assert v.is_frattinian and v.checked_count == 0

    def test_filiform_is_not(self):
        L = filiform_standard(4, GF(2))
        v = is_frattinian(L)
        assert not v.is_frattinian
        M = v.witness
        assert M is not None and M.dim == 3
        assert L.is_subalgebra(M)
        assert L.subalgebra_center(M) == L.center()

    def test_witness_is_first_in_canonical_order(self):
        L = filiform_standard(5, GF(3))
        v = is_frattinian(L)
        Z = L.center()
        for M in enumerate_maximal(L).items:
            if Z <= M and L.subalgebra_center(M) == Z:
                assert v.witness == M
                break
            assert M != v.witness

    def test_guards(self):
        with pytest.raises(NotNilpotent):
            is_frattinian(two_dim_nonnilpotent(GF(2)))
        with pytest.raises(InfiniteDomain):
            is_frattinian(heisenberg(1, RATIONALS))

    def test_heisenberg_plus_abelian(self):
        # every maximal containing the centre is abelian, hence its own centre
        L = direct_sum(heisenberg(1, GF(2)), abelian(1, GF(2)))
        assert is_frattinian(L).is_frattinian


class TestMinimalSupplement:
    def test_h1_supplement_is_everything(self):
        H = heisenberg(1, GF(3))
        res = minimal_supplement(H)
        assert res.F == H.full_space()
        assert res.minimal is True
        # the maximals of H(1) are abelian with two-dimensional centres,
        # so the bounded-centre hypothesis fails even though H(1) is Frattinian
        assert res.hypothesis_met is False

    def test_h1_plus_a1_strips_the_pad(self):
        L = direct_sum(heisenberg(1, GF(2)), abelian(1, GF(2)))
        res = minimal_supplement(L)
        assert res.F == span(L, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        assert res.minimal is True
        assert res.hypothesis_met is False  # abelian maximals have large centres

    def test_abelian_supplement_trivial(self):
        A = abelian(3, GF(5))
        res = minimal_supplement(A)
        assert res.F.dim == 0 and res.minimal is True

    def test_supplement_property_across_catalog(self):
        for entry in catalog(GF(2), 5):
            L = entry.algebra
            if L.dim == 0:
                continue
            res = minimal_supplement(L)
            assert (res.F + L.center()) == L.full_space(), entry.name
            assert res.minimal is True, entry.name

    def test_rational_minimality_uncertified(self):
        res = minimal_supplement(heisenberg(2, RATIONALS))
        assert res.minimal is None
        assert res.hypothesis_met is None
        assert (res.F + heisenberg(2, RATIONALS).center()).dim == 5


class TestLemmaSuite:
    def test_all_pass_on_families(self):
        for L in (heisenberg(1, GF(2)), heisenberg(2, GF(3)),
                  filiform_standard(5, GF(2)), abelian(3, GF(3)),
                  direct_sum(heisenberg(1, GF(2)), abelian(2, GF(2)))):
            rep = lemma_suite(L)
            assert rep.all_passed, rep.failures()

    def test_check_population(self):
        H = heisenberg(2, GF(3))
        rep = lemma_suite(H)
        counts = rep.counts()
        n_max = enumerate_maximal(H).count
        assert counts["lemma_l2"] == (n_max, n_max)
        assert counts["corollary_7"] == (n_max, n_max)
        # H has maximals with centres escaping Z(L)+L^2, so the N-existence
        # branch fires instead of the bounded-centre branch
        assert "lemma_9_2" not in counts
        n10, tot10 = counts["lemma_10"]
        assert n10 == tot10 > 0

    def test_lemma8_only_for_off_center_maximals(self):
        L = filiform_standard(4, GF(2))
        rep = lemma_suite(L)
        n8 = sum(1 for c in rep.checks if c.lemma_id == "lemma_8")
        off = 0
        Z = L.center()
        for M in enumerate_maximal(L).items:
            if not L.subalgebra_center(M) <= Z:
                off += 1
        assert n8 == off > 0

    def test_bounded_centre_branch_fires(self):
        # a six-dimensional class-4 algebra over F_2 (found by random search
        # in strictly upper-triangular matrices) whose maximals containing
        # the centre all have centres inside Z(L) + L^2
        L = bounded_centre_example()
        rep = lemma_suite(L)
        counts = rep.counts()
        assert counts["lemma_9_2"] == (1, 1)
        assert "lemma_10" not in counts
        assert rep.all_passed

    def test_supplement_conclusions_on_bounded_centre_example(self):
        res = minimal_supplement(bounded_centre_example())
        assert res.hypothesis_met is True
        assert set(res.conclusions) == {
            "Z(F) <= F^2", "C_L(F) = Z(L)", "C_L(Z(F^2)) = F^2"}
        assert all(res.conclusions.values())

    def test_guard(self):
        with pytest.raises(NotNilpotent):
            lemma_suite(two_dim_nonnilpotent(GF(5)))

    def test_full_catalog_passes(self):
        for d, md in ((GF(2), 6), (GF(3), 5)):
            for entry in catalog(d, md):
                if entry.algebra.dim == 0:
                    continue
                rep = lemma_suite(entry.algebra)
                assert rep.all_passed, (entry.name, rep.failures())
