"""The Frattinian predicate, the minimal-supplement construction, and
executable property suites for the centralizer lemmas.

An algebra is Frattinian when no maximal subalgebra M has Z(M) = Z(L).
Verdicts carry the first witness in canonical enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import LieAlgebra
from .constructions import restrict
from .errors import InfiniteDomain, InternalAssertionFailed, NotNilpotent
from .linear import Subspace, complement_basis, push_forward
from .maximal import enumerate_maximal


@dataclass(frozen=True)
class FrattinianVerdict:
    is_frattinian: bool
    witness: Optional[Subspace]  # maximal M with Z(M) = Z(L), iff not Frattinian
    checked_count: int


def is_frattinian(L: LieAlgebra) -> FrattinianVerdict:
    """Check Z(M) != Z(L) for every maximal subalgebra M.

    Abelian algebras short-circuit to True without enumeration (every maximal
    M is its own center and differs from Z(L) = L).
    """
    if not L.is_nilpotent():
        raise NotNilpotent("the Frattinian property is defined for nilpotent algebras")
    if L.is_abelian():
        return FrattinianVerdict(True, None, 0)
    if not L.domain.is_finite:
        raise InfiniteDomain("nonabelian Frattinian check requires a finite field")
    Z = L.center()
    checked = 0
    for M in enumerate_maximal(L).items:
        checked += 1
        if not Z <= M:
            continue  # Z(M) = Z(L) would force Z(L) <= M
        if L.subalgebra_center(M) == Z:
            return FrattinianVerdict(False, M, checked)
    return FrattinianVerdict(True, None, checked)


@dataclass(frozen=True)
class SupplementResult:
    F: Subspace
    minimal: Optional[bool]          # None when minimality is not certifiable
    minimality_checks: Tuple[bool, ...]
    hypothesis_met: Optional[bool]   # the Frattinian-plus-bounded-centers hypothesis
    conclusions: Dict[str, bool]


def minimal_supplement(L: LieAlgebra) -> SupplementResult:
    """The smallest supplement subalgebra F of Z(L) in L.

    F is generated by a complement of Z(L) + L^2; minimality is certified by
    scanning the maximal subalgebras of F (finite fields only).
    """
    if not L.is_nilpotent():
        raise NotNilpotent("minimal supplement defined for nilpotent algebras")
    Z = L.center()
    L2 = L.derived()
    T = Z + L2
    comp = complement_basis(T, L.full_space())
    F = L.generated_subalgebra(comp)
    if (F + Z) != L.full_space():
        raise InternalAssertionFailed("F + Z(L) != L for the generated supplement",
                                      {"F": F, "Z": Z})

    checks: List[bool] = []
    minimal: Optional[bool]
    if F.dim == 0:
        minimal = True
    elif L.domain.is_finite:
        FA, _ = restrict(L, F)
        for X in enumerate_maximal(FA).items:
            Xamb = push_forward(X, F.rows, L.dim)
            checks.append((Xamb + Z) != L.full_space())
        minimal = all(checks)
    else:
        minimal = None

    hypothesis_met: Optional[bool] = None
    conclusions: Dict[str, bool] = {}
    if L.domain.is_finite:
        hypothesis_met = (not L.is_abelian()
                          and is_frattinian(L).is_frattinian
                          and _bounded_center_hypothesis(L, Z, L2))
        if hypothesis_met:
            F2 = L.bracket_spaces(F, F)
            conclusions["Z(F) <= F^2"] = L.subalgebra_center(F) <= F2
            conclusions["C_L(F) = Z(L)"] = L.centralizer(F) == Z
            conclusions["C_L(Z(F^2)) = F^2"] = L.centralizer(L.subalgebra_center(F2)) == F2
    return SupplementResult(F, minimal, tuple(checks), hypothesis_met, conclusions)


def _bounded_center_hypothesis(L: LieAlgebra, Z: Subspace, L2: Subspace) -> bool:
    """Every maximal M containing Z(L) has Z(M) <= Z(L) + L^2."""
    T = Z + L2
    for M in enumerate_maximal(L).items:
        if Z <= M and not L.subalgebra_center(M) <= T:
            return False
    return True


@dataclass(frozen=True)
class LemmaCheck:
    lemma_id: str
    maximal_basis: Optional[Tuple]
    passed: bool
    witnesses: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class LemmaSuiteReport:
    checks: Tuple[LemmaCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def counts(self) -> Dict[str, Tuple[int, int]]:
        out: Dict[str, Tuple[int, int]] = {}
        for c in self.checks:
            ok, tot = out.get(c.lemma_id, (0, 0))
            out[c.lemma_id] = (ok + (1 if c.passed else 0), tot + 1)
        return out

    def failures(self) -> List[LemmaCheck]:
        return [c for c in self.checks if not c.passed]


def lemma_suite(L: LieAlgebra) -> LemmaSuiteReport:
    """Run the centralizer-lemma checks over every maximal subalgebra of L."""
    if not L.is_nilpotent():
        raise NotNilpotent("lemma suite defined for nilpotent algebras")
    Z = L.center()
    L2 = L.derived()
    T = Z + L2
    full = L.full_space()
    enum = enumerate_maximal(L)
    checks: List[LemmaCheck] = []

    centers = {}
    for M in enum.items:
        ZM = L.subalgebra_center(M)
        centers[M] = ZM
        C = L.centralizer(M)

        ok_a = (C == ZM) or (C == Z and (C + M) == full)
        checks.append(LemmaCheck("lemma_l2", M.rows, ok_a,
                                 {} if ok_a else {"C_L(M)": str(C), "Z(M)": str(ZM)}))

        if Z <= M:
            ok_b = C == ZM
        else:
            ok_b = C == Z
        checks.append(LemmaCheck("corollary_7", M.rows, ok_b,
                                 {} if ok_b else {"C_L(M)": str(C), "Z(M)": str(ZM),
                                                  "Z(L) <= M": str(Z <= M)}))

        if not ZM <= Z:
            ok_c = L.centralizer(ZM) == M
            checks.append(LemmaCheck("lemma_8", M.rows, ok_c,
                                     {} if ok_c else {"C_L(Z(M))": str(L.centralizer(ZM))}))

    frattinian_nonabelian = (not L.is_abelian()) and is_frattinian(L).is_frattinian
    if frattinian_nonabelian:
        hyp = all(centers[M] <= T for M in enum.items if Z <= M)
        if hyp:
            ZL2 = L.subalgebra_center(L2)
            ok_d = L.centralizer(ZL2) == T
            checks.append(LemmaCheck("lemma_9_2", None, ok_d,
                                     {} if ok_d else {"C_L(Z(L^2))": str(L.centralizer(ZL2)),
                                                      "Z(L)+L^2": str(T)}))
        else:
            for M in enum.items:
                if not (Z <= M) or centers[M] <= T:
                    continue
                ZM = centers[M]
                ok_e = False
                wit = {"M": str(M)}
                for N in enum.items:
                    if Z <= N and not ZM <= N:
                        ZN = centers[N]
                        if (ZN & M) == Z and (ZM & N) == Z:
                            ok_e = True
                            wit = {}
                            break
                checks.append(LemmaCheck("lemma_10", M.rows, ok_e, wit))

    return LemmaSuiteReport(tuple(checks))
