"""Total cross section for an attractive 2D delta-function potential.

Three routes to the same number: the closed form, the partial-wave sum,
and the eps -> 0 limit of the cutoff-regularized Green-function bracket.
"""

from ._deltascat import (
    EULER_GAMMA,
    DegenerateBracketError,
    DomainError,
    EpsilonSchedule,
    LimitEstimate,
    RegularizationMode,
    ScatteringProblem,
    SingularInputError,
    ValidationError,
    bessel_j0,
    bessel_k0,
    bessel_y0,
    bound_state_scale,
    cross_section_closed,
    cross_section_partial_wave,
    hankel1_0,
    hankel1_0_small_z,
    k0_small_z,
    limit_extrapolate,
    log_x,
    mead_godines_wrong_limit,
    regularized_cross_section,
    s_wave_phase_shift,
    sin_sq_from_tan,
    wrong_limit_ratio,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
