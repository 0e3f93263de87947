"""Uncertainty lower bounds and the inequalities they rest on.

Non-relativistic:
    dq dp >= hbar/2 per component, the dot-product and modulus forms.
Relativistic:
    dx dp >= (hbar/2) zeta(gamma),     zeta = gamma^4 sqrt(2 - 1/gamma^2)
    de dt >= (hbar/2) gamma^3 sqrt(2 - 1/gamma^2)
together with their ultra-relativistic (gamma -> inf) forms and the
rate bounds obtained from dq = (v' - v) dt and dq = c dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import (
    BoundReport,
    KinematicState,
    MeasuredVector3,
    PhysicalConstants,
    vec_dot,
    vec_norm,
)
from .errors import (
    ComponentHupViolatedError,
    DegenerateVelocitiesError,
    GammaBelowOneError,
    NonpositiveEnergyError,
    NonpositiveTimeError,
)
from .kinematics import delta_p_sq, delta_x_sq, gamma_from_beta, lorentz_gamma

SQRT2_2 = math.sqrt(2.0) / 2.0

# relative slack absorbed by every >= comparison
REL_SLACK = 1e-12


def _tolerance(rhs: float) -> float:
    return REL_SLACK * max(1.0, abs(rhs))


@dataclass(frozen=True)
class InequalityCheck:
    """Result of testing ``lhs >= rhs``.

    ``chain`` holds the intermediate links when a check is the end of a
    longer argument; ``weakest`` picks the link with least slack.
    """

    lhs: float
    rhs: float
    label: str = ""
    chain: Tuple["InequalityCheck", ...] = ()

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs

    @property
    def satisfied(self) -> bool:
        return self.lhs >= self.rhs - _tolerance(self.rhs)

    @property
    def weakest(self) -> "InequalityCheck":
        links = (self,) + self.chain
        return min(links, key=lambda c: c.slack / max(1.0, abs(c.rhs)))

    def __str__(self):
        status = "PASS" if self.satisfied else "FAIL"
        name = f"{self.label}: " if self.label else ""
        return f"{name}{self.lhs!r} >= {self.rhs!r} [{status}]"


def _check_gamma(gamma: float):
    if not gamma >= 1.0:
        raise GammaBelowOneError(f"gamma must be >= 1, got {gamma}")


def zeta(gamma: float) -> float:
    """Relativistic amplification factor ``gamma^4 sqrt(2 - 1/gamma^2)``."""
    _check_gamma(gamma)
    return gamma ** 4 * math.sqrt(2.0 - 1.0 / (gamma * gamma))


def zeta_inverse(target: float, gamma_max: float = 1e6, rtol: float = 1e-10) -> float:
    """Speed (as beta = v/c) at which ``zeta`` reaches ``target``.

    Bisection on gamma in [1, gamma_max].
    """
    if not target >= 1.0:
        raise ValueError(f"zeta is >= 1 everywhere; target {target} is unreachable")
    if target > zeta(gamma_max):
        raise ValueError(f"target {target} exceeds zeta({gamma_max})")
    lo, hi = 1.0, gamma_max
    while hi - lo > rtol * lo:
        mid = 0.5 * (lo + hi)
        if zeta(mid) < target:
            lo = mid
        else:
            hi = mid
    g = 0.5 * (lo + hi)
    return math.sqrt(1.0 - 1.0 / (g * g))


def bound_xp_rel(gamma: float, hbar: float = 1.0) -> float:
    """Lower bound on dx dp for a particle with Lorentz factor ``gamma``."""
    return 0.5 * hbar * zeta(gamma)


def bound_xp_ultra(gamma: float, hbar: float = 1.0) -> float:
    _check_gamma(gamma)
    return SQRT2_2 * hbar * gamma ** 4


def bound_et_rel(gamma: float, hbar: float = 1.0) -> float:
    """Lower bound on de dt; equal to ``bound_xp_rel / gamma``."""
    _check_gamma(gamma)
    return 0.5 * hbar * gamma ** 3 * math.sqrt(2.0 - 1.0 / (gamma * gamma))


def bound_et_ultra(gamma: float, hbar: float = 1.0) -> float:
    _check_gamma(gamma)
    return SQRT2_2 * gamma ** 3 * hbar


def min_delta_epsilon(dt: float, gamma: float, hbar: float = 1.0) -> float:
    """Smallest energy uncertainty compatible with a measuring time ``dt``."""
    if not dt > 0:
        raise NonpositiveTimeError(f"dt must be positive, got {dt}")
    return bound_et_ultra(gamma, hbar) / dt


def landau_dp_bound(dt: float, v: float, v_prime: float, hbar: float = 1.0) -> float:
    """``hbar / (2 dt (v' - v))``."""
    if not dt > 0:
        raise NonpositiveTimeError(f"dt must be positive, got {dt}")
    if not v_prime > v:
        raise DegenerateVelocitiesError(f"need v' > v, got v={v}, v'={v_prime}")
    return hbar / (2.0 * dt * (v_prime - v))


def landau_dq_bound(dE: float, c: float = 1.0, hbar: float = 1.0) -> float:
    """``hbar c / (2 dE)``."""
    if not dE > 0:
        raise NonpositiveEnergyError(f"dE must be positive, got {dE}")
    return hbar * c / (2.0 * dE)


def landau_dE_bound(dt: float, hbar: float = 1.0) -> float:
    """``hbar / (2 dt)``."""
    if not dt > 0:
        raise NonpositiveTimeError(f"dt must be positive, got {dt}")
    return hbar / (2.0 * dt)


def _sigma_vector(x) -> tuple:
    if isinstance(x, MeasuredVector3):
        return x.sigmas
    t = tuple(float(s) for s in x)
    if len(t) != 3:
        raise ValueError(f"expected 3 uncertainties, got {len(t)}")
    if any(not s >= 0 for s in t):
        raise ValueError(f"uncertainties must be >= 0, got {t}")
    return t


def _require_component_hup(dq: tuple, dp: tuple, hbar: float):
    floor = 0.5 * hbar
    for i, (a, b) in enumerate(zip(dq, dp)):
        if a * b < floor - _tolerance(floor):
            raise ComponentHupViolatedError(
                f"component {i}: dq*dp = {a * b!r} < hbar/2 = {floor!r}")


def check_component_hup(dq, dp, hbar: float = 1.0) -> InequalityCheck:
    """Check ``sum_i dq_i dp_i >= 3 hbar / 2``.

    ``dq`` and ``dp`` are uncertainty triples (or vectors whose ``sigmas``
    are used). Each component must already satisfy dq_i dp_i >= hbar/2,
    otherwise :class:`ComponentHupViolatedError` is raised.
    """
    dq, dp = _sigma_vector(dq), _sigma_vector(dp)
    _require_component_hup(dq, dp, hbar)
    return InequalityCheck(abs(vec_dot(dq, dp)), 1.5 * hbar, "sum dq_i dp_i >= 3 hbar/2")


def check_modulus_hup(dq, dp, hbar: float = 1.0) -> InequalityCheck:
    """Check ``|dq| |dp| >= hbar / 2`` for the uncertainty vectors.

    The returned check carries the chain
    ``|dq||dp| >= |<dq,dp>|`` (Cauchy-Schwarz) and ``|<dq,dp>| >= 3 hbar/2``.
    """
    dq, dp = _sigma_vector(dq), _sigma_vector(dp)
    _require_component_hup(dq, dp, hbar)
    prod = vec_norm(dq) * vec_norm(dp)
    dot = abs(vec_dot(dq, dp))
    chain = (
        InequalityCheck(prod, dot, "|dq||dp| >= |<dq,dp>|"),
        InequalityCheck(dot, 1.5 * hbar, "|<dq,dp>| >= 3 hbar/2"),
    )
    return InequalityCheck(prod, 0.5 * hbar, "|dq||dp| >= hbar/2", chain)


def check_cauchy_schwarz(a, b) -> InequalityCheck:
    return InequalityCheck(vec_norm(a) * vec_norm(b), abs(vec_dot(a, b)),
                           "|a||b| >= |<a,b>|")


def eq9_identity(state: KinematicState, c: float = 1.0) -> Tuple[float, float]:
    """Both sides of the product identity for the squared uncertainties.

    Left: ``delta_x_sq * delta_p_sq``. Right:
    ``gamma^8 dE^2 dt^2 + gamma^8 (1 - 1/gamma^2) dq^2 dp^2`` read with
    ``dp = m0 dv`` and ``dE = c dp``.
    """
    lhs = delta_x_sq(state, c) * delta_p_sq(state, c)
    g = lorentz_gamma(state.v, c)
    g8 = g ** 8
    dp = state.m0 * state.dv
    dE = c * dp
    # 1 - 1/gamma^2 written as beta^2 to avoid cancellation at small v
    beta_sq = (state.v / c) ** 2
    rhs = g8 * dE ** 2 * state.dt ** 2 + g8 * beta_sq * state.dq ** 2 * dp ** 2
    return lhs, rhs


def bound_report(beta: float, constants: Optional[PhysicalConstants] = None,
                 dt: Optional[float] = None) -> BoundReport:
    """All relativistic bounds for a particle moving at ``beta = v/c``."""
    hbar = 1.0 if constants is None else constants.hbar
    g = gamma_from_beta(beta)
    return BoundReport(
        beta=float(beta),
        gamma=g,
        zeta=zeta(g),
        bound_xp=bound_xp_rel(g, hbar),
        bound_xp_ultra=bound_xp_ultra(g, hbar),
        bound_et=bound_et_rel(g, hbar),
        bound_et_ultra=bound_et_ultra(g, hbar),
        min_delta_epsilon=None if dt is None else min_delta_epsilon(dt, g, hbar),
    )
