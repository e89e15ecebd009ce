"""Contractive wave-packet dynamics for a free mass.

Computes, optimizes and independently verifies the variance-narrowing
behavior of free Gaussian, twisted-Gaussian and two-/three-component cat
states relative to the standard quantum limit.  All internal quantities are
adimensional; see :mod:`contractive.states` for the unit convention.
"""

__version__ = "0.1.0"

from .dynamics import (
    HBAR_SI,
    ContractivityRegion,
    VarianceCurve,
    contractivity_region,
    curve_from_moments,
    eta_from_time,
    gl_family_member,
    is_contractive,
    lambda_at,
    optimal_eta,
    sql_crossings,
    variance_at,
    yuen_lambda_min,
    yuen_times,
)
from .errors import (
    ConfigError,
    ContractiveError,
    DegenerateNorm,
    GridTooSmall,
    InvalidBeta,
    NoFiniteEvaluation,
    NonPositiveParameter,
    NonPositiveTime,
    ZeroOutcome,
    ZeroXi,
)
from .moments import (
    cat2_moments,
    cat3_moments,
    superposition_moments,
    yuen_moments,
    zeta,
)
from .optimize import (
    OptimizerConfig,
    OptResult,
    SearchSpace,
    cat2_search_space,
    cat3_search_space,
    minimize,
    optimize_cat2,
    optimize_cat3,
)
from .oracle import (
    Grid,
    SampledState,
    evolve_analytic,
    evolve_spectral,
    grid_moments,
    sample,
)
from .states import (
    EPS_NORM,
    GAUSSIAN_MOMENTS,
    Cat2Params,
    Cat3Params,
    GaussianSuperposition,
    Moments,
    YuenParams,
    make_cat2,
    make_cat3,
    make_yuen,
    norm_squared,
    to_superposition,
)
from .table import ScanTable

__all__ = [name for name in dir() if not name.startswith("_")]
