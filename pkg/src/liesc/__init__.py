"""liesc: exact computation with nilpotent Lie algebras given by structure
constants — Frattinian checks, maximal-subalgebra enumeration, and central-
product decompositions with machine-verifiable certificates."""

from .algebra import LieAlgebra, SeriesReport
from .constructions import (
    CentralProduct,
    CentralProductSpec,
    abelian,
    catalog,
    central_product,
    direct_sum,
    filiform_standard,
    heisenberg,
    heisenberg_as_product,
    restrict,
)
from .decomposition import (
    DecompositionCertificate,
    decompose,
    verify_central_product,
    verify_certificate,
)
from .domains import GF, RATIONALS, DomainSpec, ExactScalar, arith, inverse, parse_field
from .frattinian import (
    FrattinianVerdict,
    SupplementResult,
    is_frattinian,
    lemma_suite,
    minimal_supplement,
)
from .linear import Subspace, canonicalize, complement_basis, intersect, member, subspace_sum
from .maximal import MaximalEnumeration, brute_force_maximal, enumerate_maximal

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra", "SeriesReport", "Subspace", "DomainSpec", "ExactScalar",
    "GF", "RATIONALS", "arith", "inverse", "parse_field",
    "canonicalize", "member", "subspace_sum", "intersect", "complement_basis",
    "abelian", "heisenberg", "filiform_standard", "direct_sum",
    "CentralProductSpec", "CentralProduct", "central_product",
    "heisenberg_as_product", "restrict", "catalog",
    "MaximalEnumeration", "enumerate_maximal", "brute_force_maximal",
    "FrattinianVerdict", "SupplementResult", "is_frattinian",
    "minimal_supplement", "lemma_suite",
    "DecompositionCertificate", "decompose", "verify_certificate",
    "verify_central_product",
]
