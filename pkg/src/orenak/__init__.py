"""Exact Ore extensions of polynomial rings over the rationals.

Builds E = R[x; sigma, delta] for R = Q[z1..zn], computes the Nakayama
automorphism in closed form, verifies the homological identities behind it,
and truncates the invariant algebra of the Nakayama action.
"""

from .checks import CheckEntry, CheckReport
from .endo import (
    Automorphism,
    NonConstantJacobian,
    PolyEndo,
    compose,
    invert,
    jacobian_det,
    order_of,
)
from .homology import (
    ChainElem,
    EnvElem,
    TensorRR,
    cone_d,
    delta_p,
    koszul_d,
    lift_rho,
    mu,
    nc_jacobian,
    nc_jacobian_minor,
    nc_one_form,
    twisted_one_form,
    verify_chain_map,
)
from .invariants import (
    EigenBasis,
    InvariantElement,
    SurjectivityReport,
    TargetOutcome,
    TwistedElement,
    check_j_surjectivity,
    eigenspace,
    find_invariants,
    leading_map_j,
    zhang_twist_mul,
)
from .linalg import AffineSolution, det_cofactor, det_over_ring, kernel, rref, solve_affine
from .nakayama import (
    CalabiYauResult,
    KappaDriftViolation,
    NakayamaData,
    NotDifferentialError,
    compute_nakayama,
    divergence,
    is_calabi_yau,
    kappa_drift,
    nakayama_order,
    verify_automorphism,
)
from .ore import (
    OreContext,
    OrePoly,
    OrePolyQ,
    elementary_symmetric,
    from_shifted_basis,
    shifted_power,
    to_shifted_basis,
)
from .parser import (
    ParseError,
    default_names,
    format_ore,
    format_poly,
    format_ratfunc,
    parse_poly,
)
from .poly import (
    Polynomial,
    RationalFunction,
    grlex_key,
    monomials_up_to,
    partial_derivative,
    poly_gcd,
    ratfunc_reduce,
    substitute,
)
from .skew import DifferentialCaseError, InconsistentDerivation, SkewDerivation, compute_kappa

__version__ = "0.1.0"

__all__ = [
    "AffineSolution",
    "Automorphism",
    "CalabiYauResult",
    "ChainElem",
    "CheckEntry",
    "CheckReport",
    "DifferentialCaseError",
    "EigenBasis",
    "EnvElem",
    "InconsistentDerivation",
    "InvariantElement",
    "KappaDriftViolation",
    "NakayamaData",
    "NonConstantJacobian",
    "NotDifferentialError",
    "OreContext",
    "OrePoly",
    "OrePolyQ",
    "ParseError",
    "PolyEndo",
    "Polynomial",
    "RationalFunction",
    "SkewDerivation",
    "SurjectivityReport",
    "TargetOutcome",
    "TensorRR",
    "TwistedElement",
    "check_j_surjectivity",
    "compose",
    "compute_kappa",
    "compute_nakayama",
    "cone_d",
    "default_names",
    "delta_p",
    "det_cofactor",
    "det_over_ring",
    "divergence",
    "eigenspace",
    "elementary_symmetric",
    "find_invariants",
    "format_ore",
    "format_poly",
    "format_ratfunc",
    "from_shifted_basis",
    "grlex_key",
    "invert",
    "is_calabi_yau",
    "jacobian_det",
    "kappa_drift",
    "kernel",
    "koszul_d",
    "leading_map_j",
    "lift_rho",
    "monomials_up_to",
    "mu",
    "nakayama_order",
    "nc_jacobian",
    "nc_jacobian_minor",
    "nc_one_form",
    "order_of",
    "parse_poly",
    "partial_derivative",
    "poly_gcd",
    "ratfunc_reduce",
    "rref",
    "shifted_power",
    "solve_affine",
    "substitute",
    "to_shifted_basis",
    "twisted_one_form",
    "verify_automorphism",
    "verify_chain_map",
    "zhang_twist_mul",
]
