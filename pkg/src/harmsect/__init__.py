"""Univalence radii of sections of planar harmonic mappings.

Certified root solving for the family margin functions, exact power-series
tail sums, finite-range verification of the asymptotic-bound claims, and
empirical kernel/Jacobian grid scans of extremal polynomial sections.
"""

from .claims import (
    CLAIMS,
    ClaimReport,
    ConvexRatioBounds,
    UnknownClaimError,
    ratio_bound_parts,
    slope_bracket_general,
    slope_bracket_scaled,
    slope_prefactor_general,
    tail_ratio_convex,
    tail_ratio_general,
    verify_all,
    verify_claim,
)
from .harmonic import (
    EmpiricalScan,
    ExtremalCoefficients,
    HarmonicPolynomial,
    IdentityCoefficients,
    KernelScan,
    ProbeGrid,
    divided_difference,
    empirical_radius,
    empirical_scan,
    evaluate,
    jacobian,
    kernel,
    kernel_min_modulus,
    section,
)
from .polyroots import RealPolynomial, isolate_real_roots
from .radius import (
    FamilyClass,
    NoBracketError,
    RadiusResult,
    SectionSpec,
    close_to_convex_radius,
    distortion_floor_convex,
    distortion_floor_general,
    log_offset_convex,
    log_offset_general,
    lower_bound_convex,
    lower_bound_general,
    margin_convex,
    margin_convex_diag,
    margin_convex_poly,
    margin_general,
    margin_general_diag,
    solve_radius,
    threshold_order,
)
from .tails import TailClass, tail_brute, tail_cube, tail_general_pair_diag, tail_linear, tail_square, tail_weighted

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "ClaimReport",
    "ConvexRatioBounds",
    "EmpiricalScan",
    "ExtremalCoefficients",
    "FamilyClass",
    "HarmonicPolynomial",
    "IdentityCoefficients",
    "KernelScan",
    "NoBracketError",
    "ProbeGrid",
    "RadiusResult",
    "RealPolynomial",
    "SectionSpec",
    "TailClass",
    "UnknownClaimError",
    "close_to_convex_radius",
    "distortion_floor_convex",
    "distortion_floor_general",
    "divided_difference",
    "empirical_radius",
    "empirical_scan",
    "evaluate",
    "isolate_real_roots",
    "jacobian",
    "kernel",
    "kernel_min_modulus",
    "log_offset_convex",
    "log_offset_general",
    "lower_bound_convex",
    "lower_bound_general",
    "margin_convex",
    "margin_convex_diag",
    "margin_convex_poly",
    "margin_general",
    "margin_general_diag",
    "ratio_bound_parts",
    "section",
    "slope_bracket_general",
    "slope_bracket_scaled",
    "slope_prefactor_general",
    "solve_radius",
    "tail_brute",
    "tail_cube",
    "tail_general_pair_diag",
    "tail_linear",
    "tail_ratio_convex",
    "tail_ratio_general",
    "tail_square",
    "tail_weighted",
    "threshold_order",
    "verify_all",
    "verify_claim",
]
