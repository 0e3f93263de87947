"""Relativistic uncertainty propagation and Heisenberg-type lower bounds."""

__version__ = "0.1.0"

from .bounds import (
    InequalityCheck,
    bound_et_rel,
    bound_et_ultra,
    bound_report,
    bound_xp_rel,
    bound_xp_ultra,
    check_component_hup,
    check_modulus_hup,
    eq9_identity,
    landau_dE_bound,
    landau_dp_bound,
    landau_dq_bound,
    min_delta_epsilon,
    zeta,
    zeta_inverse,
)
from .core import (
    BoundReport,
    KinematicState,
    MeasuredScalar,
    MeasuredVector3,
    PhysicalConstants,
    vec_dot,
    vec_norm,
)
from .errors import *  # noqa: F401,F403
from .kinematics import (
    RelativisticUncertainties,
    de_broglie_min_dq,
    delta_p_sq,
    delta_x_sq,
    gamma_from_beta,
    lorentz_gamma,
    momentum_modulus,
    position_modulus,
    proper_time,
)
from .montecarlo import (
    KinematicScenario,
    ModulusScenario,
    SampleSummary,
    mc_verify_bound,
    sample_modulus,
)
from .propagation import fd_gradient, gradient, modulus_sigma, propagate_sigma
