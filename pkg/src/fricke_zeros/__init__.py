"""Zeros of Eisenstein series on the boundary arcs of Fricke fundamental domains."""

from .eisenstein import (
    Arc,
    ArcCoordinate,
    AngleConstants,
    DomainError,
    NonConvergence,
    RealnessViolation,
    TruncatedValue,
    alpha_p,
    angle_constants,
    arc_range,
    arc_to_halfplane,
    arc2_shift,
    eisenstein_Ek,
    eisenstein_star,
    eisenstein_star_coset,
    F_arc,
    F_arc_series,
    F_glued,
    forced_junction_zero,
    glue_sign,
    glued_range,
    junction_phase,
    lattice_lambda,
    max_shell_default,
    DEFAULT_TOL,
    DEFAULT_MAX_SHELL,
    MAX_SHELL_ENV,
    SUPPORTED_LEVELS,
)
from .bounds import (
    BoundReport,
    ShellTerm,
    SingularTerm,
    TailEstimate,
    UnknownBound,
    enumerate_shell,
    fixed_theta_bound,
    r7_neg_lower,
    refined_r5_2_bound,
    remainder_bound,
    shell_sup_base,
    FIXED_BOUND_IDS,
)
from .arguments import (
    DWindow,
    ModAngles,
    PrimedAngle,
    Term,
    TERMS_FOR_LEVEL,
    d_window,
    endpoint_theta,
    envelope_check,
    envelope_value,
    exp_crossover_gap,
    growth_rate,
    half_weight_phase,
    primed_angle,
    primed_angle_window,
    primed_mod_angles,
    slope_constant,
    term_vector,
    third_weight_phase,
)
from .algorithm import (
    AlgoDerived,
    AlgoParams,
    CaseReport,
    CaseTerm,
    CertificateMismatch,
    CheckValue,
    ConstraintViolation,
    LemmaCase,
    ParamTerm,
    ProbeRecord,
    attribution_threshold,
    case_applies,
    case_by_id,
    catalog,
    certify,
    certify_all,
    curvature_threshold,
    derive,
    margin_Y,
    params_of,
    probe_weights,
    remaining_case_probe,
    remaining_window,
    special_margin,
    tail_threshold,
    valid_weights,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcCoordinate",
    "AngleConstants",
    "DomainError",
    "NonConvergence",
    "RealnessViolation",
    "TruncatedValue",
    "alpha_p",
    "angle_constants",
    "arc_range",
    "arc_to_halfplane",
    "arc2_shift",
    "eisenstein_Ek",
    "eisenstein_star",
    "eisenstein_star_coset",
    "F_arc",
    "F_arc_series",
    "F_glued",
    "forced_junction_zero",
    "glue_sign",
    "glued_range",
    "junction_phase",
    "lattice_lambda",
    "max_shell_default",
    "DEFAULT_TOL",
    "DEFAULT_MAX_SHELL",
    "MAX_SHELL_ENV",
    "SUPPORTED_LEVELS",
    "BoundReport",
    "ShellTerm",
    "SingularTerm",
    "TailEstimate",
    "UnknownBound",
    "enumerate_shell",
    "fixed_theta_bound",
    "r7_neg_lower",
    "refined_r5_2_bound",
    "remainder_bound",
    "shell_sup_base",
    "FIXED_BOUND_IDS",
    "DWindow",
    "ModAngles",
    "PrimedAngle",
    "Term",
    "TERMS_FOR_LEVEL",
    "d_window",
    "endpoint_theta",
    "envelope_check",
    "envelope_value",
    "exp_crossover_gap",
    "growth_rate",
    "half_weight_phase",
    "primed_angle",
    "primed_angle_window",
    "primed_mod_angles",
    "slope_constant",
    "term_vector",
    "third_weight_phase",
    "AlgoDerived",
    "AlgoParams",
    "CaseReport",
    "CaseTerm",
    "CertificateMismatch",
    "CheckValue",
    "ConstraintViolation",
    "LemmaCase",
    "ParamTerm",
    "ProbeRecord",
    "attribution_threshold",
    "case_applies",
    "case_by_id",
    "catalog",
    "certify",
    "certify_all",
    "curvature_threshold",
    "derive",
    "margin_Y",
    "params_of",
    "probe_weights",
    "remaining_case_probe",
    "remaining_window",
    "special_margin",
    "tail_threshold",
    "valid_weights",
    "__version__",
]
