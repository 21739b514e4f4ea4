"""Constructive central-product decomposition of Frattinian algebras.

``decompose`` extracts small central factors E_i = Z(M) + Z(N) from pairs of
maximal subalgebras, recursing into the centralizer, and emits a certificate
that an independent ``verify_certificate`` replays from the algebra and the
factor subspaces alone.  Every identity the construction relies on is
re-checked at runtime; a failed identity aborts with full witnesses instead
of emitting an unverified certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import LieAlgebra
from .constructions import restrict
from .errors import (
    AbelianInput,
    InfiniteDomain,
    InternalAssertionFailed,
    MalformedCertificate,
    NotFrattinian,
    NotNilpotent,
)
from .frattinian import is_frattinian, minimal_supplement
from .linear import Subspace, pull_back, push_forward
from .maximal import enumerate_maximal


@dataclass(frozen=True)
class ExtractionStep:
    """One loop iteration, recorded in ambient coordinates of L."""

    M: Subspace
    N: Subspace
    E: Subspace
    L_next: Subspace


@dataclass(frozen=True)
class DecompositionCertificate:
    case: str                         # "one" | "two"
    factors: Tuple[Subspace, ...]     # case one: the E_i; case two: (E, F)
    trace: Tuple[ExtractionStep, ...]
    center_dim: int
    nested_factors: Tuple[Subspace, ...] = ()  # case two with E != Z(L)


@dataclass(frozen=True)
class Obligation:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    obligations: Tuple[Obligation, ...]

    @property
    def all_passed(self) -> bool:
        return all(o.passed for o in self.obligations)

    def failures(self) -> List[Obligation]:
        return [o for o in self.obligations if not o.passed]


def verify_central_product(L: LieAlgebra, A: Subspace, B: Subspace) -> VerificationReport:
    """Check the defining identities of L = A ∔ B plus the derived center facts."""
    obs: List[Obligation] = []

    def ob(name, cond, detail=""):
        obs.append(Obligation(name, bool(cond), detail if not cond else ""))

    ob("A is a subalgebra", L.is_subalgebra(A))
    ob("B is a subalgebra", L.is_subalgebra(B))
    ob("A is an ideal", L.is_ideal(A))
    ob("B is an ideal", L.is_ideal(B))
    ob("A + B = L", (A + B) == L.full_space(), f"A+B has dim {(A + B).dim}")
    ob("[A, B] = 0", L.bracket_spaces(A, B).dim == 0)
    Z = L.center()
    ob("A ∩ B = Z(L)", (A & B) == Z, f"A∩B dim {(A & B).dim}, Z(L) dim {Z.dim}")
    if L.is_subalgebra(A) and L.is_subalgebra(B):
        ZA = L.subalgebra_center(A)
        ZB = L.subalgebra_center(B)
        ob("Z(A) ∩ Z(B) = A ∩ B", (ZA & ZB) == (A & B))
        ob("Z(L) = Z(A) + Z(B)", (ZA + ZB) == Z)
    return VerificationReport(tuple(obs))


def _extract_factors(L: LieAlgebra, start: Subspace, Zl: Subspace):
    """Run the extraction loop inside ``start``; returns (factors, trace, residual)."""
    n = L.dim
    max_steps = (start.dim - Zl.dim) // 2
    factors: List[Subspace] = []
    trace: List[ExtractionStep] = []
    cur = start
    for _ in range(max_steps + 1):
        if cur == Zl:
            return factors, trace, cur
        cur_alg, inc = restrict(L, cur)
        Zloc = pull_back(Zl, cur)
        if cur_alg.center() != Zloc:
            raise InternalAssertionFailed(
                "Z(L_k) != Z(L) in the extraction loop",
                {"L_k": cur, "Z(L_k)": push_forward(cur_alg.center(), inc, n)})
        enum = enumerate_maximal(cur_alg)
        T = Zloc + cur_alg.derived()
        picked = None
        for M in enum.items:
            if Zloc <= M:
                ZM = cur_alg.subalgebra_center(M)
                if not ZM <= T:
                    picked = (M, ZM)
                    break
        if picked is None:
            return factors, trace, cur
        M, ZM = picked
        Npick = None
        for N in enum.items:
            if Zloc <= N and not ZM <= N:
                Npick = N
                break
        if Npick is None:
            raise InternalAssertionFailed(
                "no maximal N with Z(L) <= N and Z(M) not <= N (Lemma 10 part 1 failed)",
                {"M": M, "Z(M)": ZM})
        N = Npick
        ZN = cur_alg.subalgebra_center(N)
        if (ZM & N) != Zloc or (ZN & M) != Zloc:
            raise InternalAssertionFailed(
                "Z(M) ∩ N = Z(N) ∩ M = Z(L) failed (Lemma 10 part 2)",
                {"M": M, "N": N, "Z(M)∩N": ZM & N, "Z(N)∩M": ZN & M})
        E = ZM + ZN
        if E.dim != Zl.dim + 2:
            raise InternalAssertionFailed(
                f"extracted factor has dim {E.dim}, expected {Zl.dim + 2}", {"E": E})
        if cur_alg.bracket_spaces(E, E).dim == 0:
            raise InternalAssertionFailed("extracted factor is abelian", {"E": E})
        if cur_alg.subalgebra_center(E) != Zloc:
            raise InternalAssertionFailed("Z(E_i) != Z(L)", {"E": E})
        L_next = cur_alg.centralizer(E)
        if L_next != (M & N):
            raise InternalAssertionFailed("C(E_i) != M ∩ N",
                                          {"C(E_i)": L_next, "M∩N": M & N})
        cp = verify_central_product(cur_alg, E, L_next)
        if not cp.all_passed:
            raise InternalAssertionFailed(
                "L_k is not the central product of E_{k+1} and L_{k+1}: "
                + "; ".join(o.name for o in cp.failures()))
        next_alg, _ = restrict(cur_alg, L_next)
        if not is_frattinian(next_alg).is_frattinian:
            raise InternalAssertionFailed("L_{k+1} is not Frattinian")
        E_amb = push_forward(E, inc, n)
        next_amb = push_forward(L_next, inc, n)
        M_amb = push_forward(M, inc, n)
        N_amb = push_forward(N, inc, n)
        factors.append(E_amb)
        trace.append(ExtractionStep(M_amb, N_amb, E_amb, next_amb))
        cur = next_amb
    raise InternalAssertionFailed("extraction exceeded its step bound")


def decompose(L: LieAlgebra) -> DecompositionCertificate:
    """Central-product decomposition with a replayable certificate."""
    if not L.is_nilpotent():
        raise NotNilpotent("decomposition defined for nilpotent algebras")
    if L.is_abelian():
        raise AbelianInput("the decomposition theorem requires a nonabelian algebra")
    if not L.domain.is_finite:
        raise InfiniteDomain("decomposition requires a finite field")
    verdict = is_frattinian(L)
    if not verdict.is_frattinian:
        raise NotFrattinian(f"witness maximal subalgebra: {verdict.witness}")

    Zl = L.center()
    factors, trace, residual = _extract_factors(L, L.full_space(), Zl)

    if residual == Zl:
        cert = DecompositionCertificate("one", tuple(factors), tuple(trace), Zl.dim)
    else:
        res_alg, res_inc = restrict(L, residual)
        supp = minimal_supplement(res_alg)
        F = push_forward(supp.F, res_inc, L.dim)
        E = L.centralizer(F)
        expected_E = Zl
        for f in factors:
            expected_E = expected_E + f
        if E != expected_E:
            raise InternalAssertionFailed("C_L(F) != Z(L) + sum of extracted factors",
                                          {"C_L(F)": E, "expected": expected_E})
        nested: Tuple[Subspace, ...] = ()
        if E != Zl:
            nfac, _, nres = _extract_factors(L, E, Zl)
            if nres != Zl:
                raise InternalAssertionFailed(
                    "nested extraction of E did not exhaust E", {"residual": nres})
            nested = tuple(nfac)
        cert = DecompositionCertificate("two", (E, F), tuple(trace), Zl.dim, nested)

    report = verify_certificate(L, cert)
    if not report.all_passed:
        raise InternalAssertionFailed(
            "emitted certificate failed verification: "
            + "; ".join(f"{o.name} ({o.detail})" for o in report.failures()))
    return cert


def _check_case_one_factors(L: LieAlgebra, factors, target: Subspace,
                            Z: Subspace, obs: List[Obligation], prefix: str = ""):
    def ob(name, cond, detail=""):
        obs.append(Obligation(prefix + name, bool(cond), detail if not cond else ""))

    ob("at least one factor", len(factors) >= 1)
    total = Z
    for i, Ei in enumerate(factors):
        tag = f"factor {i + 1}: "
        ob(tag + "is a subalgebra", L.is_subalgebra(Ei))
        ob(tag + "is an ideal of L", L.is_ideal(Ei))
        ob(tag + f"dim = 2 + dim Z(L) = {Z.dim + 2}", Ei.dim == Z.dim + 2,
           f"dim {Ei.dim}")
        ob(tag + "nonabelian", L.bracket_spaces(Ei, Ei).dim > 0)
        if L.is_subalgebra(Ei):
            ob(tag + "center equals Z(L)", L.subalgebra_center(Ei) == Z)
        total = total + Ei
    ob("factors sum to the whole space", total == target,
       f"sum dim {total.dim}, target dim {target.dim}")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            ob(f"[factor {i + 1}, factor {j + 1}] = 0",
               L.bracket_spaces(factors[i], factors[j]).dim == 0)


def verify_certificate(L: LieAlgebra, cert: DecompositionCertificate) -> VerificationReport:
    """Re-derive every certificate obligation from L and the factors alone."""
    if cert.case not in ("one", "two"):
        raise MalformedCertificate(f"unknown case {cert.case!r}")
    for S in cert.factors + cert.nested_factors:
        if S.ambient != L.dim or S.domain != L.domain:
            raise MalformedCertificate("factor subspace does not live in L")
    if cert.case == "two" and len(cert.factors) != 2:
        raise MalformedCertificate("case two requires exactly the pair (E, F)")

    obs: List[Obligation] = []

    def ob(name, cond, detail=""):
        obs.append(Obligation(name, bool(cond), detail if not cond else ""))

    Z = L.center()
    ob("recorded center dimension matches", cert.center_dim == Z.dim,
       f"recorded {cert.center_dim}, actual {Z.dim}")

    if cert.case == "one":
        _check_case_one_factors(L, cert.factors, L.full_space(), Z, obs)
        return VerificationReport(tuple(obs))

    E, F = cert.factors
    ob("E is a subalgebra", L.is_subalgebra(E))
    ob("F is a subalgebra", L.is_subalgebra(F))
    ob("[E, F] = 0", L.bracket_spaces(E, F).dim == 0)
    ob("E + F = L", (E + F) == L.full_space(),
       f"sum dim {(E + F).dim}")
    ob("E = C_L(F)", L.centralizer(F) == E)
    ob("E^2 <= Z(L)", L.bracket_spaces(E, E) <= Z)
    if L.is_subalgebra(F):
        F2 = L.bracket_spaces(F, F)
        ZF2 = L.subalgebra_center(F2)
        ob("C_L(Z(F^2)) = F^2", L.centralizer(ZF2) == F2,
           f"centralizer dim {L.centralizer(ZF2).dim}, F^2 dim {F2.dim}")
        # Remark: the choice of F does not move these
        L2 = L.derived()
        ob("C_L(F^2) = C_L(L^2)", L.centralizer(F2) == L.centralizer(L2))
        ob("Z(L) + F^2 = Z(L) + L^2", (Z + F2) == (Z + L2))
        FA, _ = restrict(L, F)
        ob("F is Frattinian", is_frattinian(FA).is_frattinian)
    if L.is_subalgebra(E):
        EA, _ = restrict(L, E)
        ob("E is Frattinian", is_frattinian(EA).is_frattinian)
        if E == Z:
            ob("E = Z(L)", True)
        else:
            ob("nested case-one factors present for E != Z(L)",
               len(cert.nested_factors) >= 1)
            if cert.nested_factors:
                _check_case_one_factors(L, cert.nested_factors, E, Z, obs,
                                        prefix="nested ")
    return VerificationReport(tuple(obs))
