"""End-to-end acceptance suite.

Each criterion prints a single ``ACCEPT <n> <name>: pass`` line when it
succeeds; a failed assertion both fails pytest and withholds that line.
"""

import random
import time

from liesc.constructions import catalog, filiform_standard, heisenberg
from liesc.decomposition import decompose, verify_certificate
from liesc.domains import GF, RATIONALS
from liesc.frattinian import is_frattinian, lemma_suite
from liesc.linear import Subspace, canonicalize
from liesc.maximal import brute_force_maximal, enumerate_maximal

from liesc import fileio

from conftest import random_subspace


def _catalogs():
    return [("F2", GF(2), catalog(GF(2), 6)), ("F3", GF(3), catalog(GF(3), 5))]


def test_acceptance_1_heisenberg_frattinian():
    t0 = time.time()
    for d in (GF(2), GF(3), GF(5)):
        for m in (1, 2, 3):
            verdict = is_frattinian(heisenberg(m, d))
            assert verdict.is_frattinian, (m, d)
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    print(f"ACCEPT 1 heisenberg-frattinian: pass ({elapsed:.2f}s)")


def test_acceptance_2_filiform_not_frattinian():
    for d in (GF(2), GF(3)):
        for n in range(4, 8):
            L = filiform_standard(n, d)
            verdict = is_frattinian(L)
            assert not verdict.is_frattinian, (n, d)
            ZM = L.subalgebra_center(verdict.witness)
            lower = L.lower_central_series().terms
            assert any(ZM == t for t in lower[1:]), (n, d)
    print("ACCEPT 2 filiform-not-frattinian: pass")


def test_acceptance_3_heisenberg_decomposition():
    for d in (GF(2), GF(3), GF(5)):
        for m in (1, 2, 3):
            H = heisenberg(m, d)
            Z = H.center()
            cert = decompose(H)
            assert cert.case == "one"
            assert len(cert.factors) == m
            for E in cert.factors:
                assert E.dim == 2 + Z.dim == 3
                assert H.bracket_spaces(E, E).dim > 0
                assert H.subalgebra_center(E) == Z
            assert verify_certificate(H, cert).all_passed
    print("ACCEPT 3 heisenberg-decomposition: pass")


def test_acceptance_4_lemma_suite():
    algebras = 0
    pairs = 0
    failures = []
    for label, d, entries in _catalogs():
        for entry in entries:
            L = entry.algebra
            if L.dim == 0:
                continue
            algebras += 1
            pairs += enumerate_maximal(L).count
            rep = lemma_suite(L)
            for c in rep.failures():
                failures.append((label, entry.name, c.lemma_id, c.witnesses))
    assert algebras >= 30, algebras
    assert pairs >= 2000, pairs
    assert not failures, failures
    print(f"ACCEPT 4 lemma-suite: pass ({algebras} algebras, {pairs} pairs)")


def test_acceptance_5_maximal_oracle():
    for label, d, entries in _catalogs():
        for entry in entries:
            L = entry.algebra
            if L.dim == 0:
                continue
            enum = enumerate_maximal(L)
            p = d.p
            dd = L.dim - L.derived().dim
            assert enum.count == (p ** dd - 1) // (p - 1), entry.name
            if d.p == 2 and L.dim <= 4:
                assert set(enum.items) == set(brute_force_maximal(L)), entry.name
    print("ACCEPT 5 maximal-oracle: pass")


def test_acceptance_6_frattini_agreement():
    for label, d, entries in _catalogs():
        for entry in entries:
            L = entry.algebra
            if L.dim == 0:
                continue
            phi = L.frattini()
            assert phi == L.derived(), entry.name
            acc = L.full_space()
            for M in enumerate_maximal(L).items:
                acc = acc & M
            assert acc == phi, entry.name
    print("ACCEPT 6 frattini-agreement: pass")


def test_acceptance_7_theorem_round_trip():
    histogram = {"one": 0, "two": 0}
    for label, d, entries in _catalogs():
        for entry in entries:
            L = entry.algebra
            if L.dim == 0 or L.is_abelian():
                continue
            if not is_frattinian(L).is_frattinian:
                continue
            cert = decompose(L)  # raises InternalAssertionFailed on any breach
            histogram[cert.case] += 1
            rep = verify_certificate(L, cert)
            assert rep.all_passed, (entry.name, rep.failures())
            if cert.case == "two":
                names = {o.name for o in rep.obligations}
                assert "C_L(F^2) = C_L(L^2)" in names
    assert histogram["one"] + histogram["two"] > 0
    print(f"ACCEPT 7 theorem-round-trip: pass (case histogram: "
          f"one={histogram['one']} two={histogram['two']})")


def test_acceptance_8_linear_property_suite():
    t0 = time.time()
    for d in (GF(2), GF(3), RATIONALS):
        rng = random.Random(2024)
        for _ in range(1000):
            U = random_subspace(d, 5, rng, max_gens=3)
            W = random_subspace(d, 5, rng, max_gens=3)
            assert (U + W).dim + (U & W).dim == U.dim + W.dim
            assert canonicalize(d, 5, U.rows) == U
            assert U + (U & W) == U
            assert U & (U + W) == U
    elapsed = time.time() - t0
    assert elapsed < 5.0, f"took {elapsed:.1f}s"
    print(f"ACCEPT 8 linear-properties: pass ({elapsed:.2f}s)")


def test_acceptance_9_serialization(tmp_path):
    import pytest
    for label, d, entries in _catalogs():
        for k, entry in enumerate(entries):
            p = tmp_path / f"{label}_{k}.json"
            fileio.save(entry.algebra, str(p))
            back = fileio.load(str(p))
            assert back.sc == entry.algebra.sc, entry.name
            assert back.domain == entry.algebra.domain
    from liesc.errors import JacobiViolation
    bad = {"format": "liesc-v1", "field": {"kind": "prime", "p": 5}, "dim": 3,
           "brackets": [{"i": 1, "j": 2, "terms": [{"k": 1, "c": "1"}]},
                        {"i": 1, "j": 3, "terms": [{"k": 2, "c": "1"}]}]}
    with pytest.raises(JacobiViolation) as exc:
        fileio.algebra_from_json(bad)
    assert exc.value.triple == (1, 2, 3)
    print("ACCEPT 9 serialization: pass")
