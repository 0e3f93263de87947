"""Relativistic kinematics and the propagated position/momentum uncertainties.

The functions ``position_x`` and ``momentum_p`` are written with dual-aware
arithmetic so the propagation engine can differentiate them; the
``delta_*`` functions are the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import dual
from .core import KinematicState
from .errors import (
    GammaBelowOneError,
    NonpositiveTimeError,
    SpacelikeInputError,
    SuperluminalSpeedError,
    ZeroMomentumError,
)

SEC3 = "sec3"
SEC4 = "sec4"


@dataclass(frozen=True)
class RelativisticUncertainties:
    delta_x_sq: float
    delta_p_sq: float
    gamma: float

    def __post_init__(self):
        for name in ("delta_x_sq", "delta_p_sq"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {val}")
        if not self.gamma >= 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")

    @property
    def product(self) -> float:
        """delta_x * delta_p"""
        return math.sqrt(self.delta_x_sq * self.delta_p_sq)


def _check_speed(v, c):
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}")
    if abs(v) >= c:
        raise SuperluminalSpeedError(f"speed {abs(float(v))!r} is not below c = {c!r}")


def lorentz_gamma(v, c: float = 1.0):
    """Lorentz factor ``(1 - v^2/c^2)^(-1/2)``; accepts dual numbers.

    ``v`` may be a signed velocity component; only ``|v| < c`` is required.
    """
    _check_speed(v, c)
    b = v / c
    return 1.0 / dual.sqrt(1.0 - b * b)


def gamma_from_beta(beta: float) -> float:
    return lorentz_gamma(beta, 1.0)


def beta_from_gamma(gamma: float) -> float:
    if not gamma >= 1:
        raise GammaBelowOneError(f"gamma must be >= 1, got {gamma}")
    return math.sqrt(1.0 - 1.0 / (gamma * gamma))


def position_x(t, q, c: float = 1.0):
    """Modulus of the relativistic position, ``sqrt(c^2 t^2 - q^2)``."""
    radicand = c * c * t * t - q * q
    if radicand <= 0:
        raise SpacelikeInputError(
            f"q = {float(q)!r} is not below c t = {float(c * t)!r}")
    return dual.sqrt(radicand)


def position_modulus(t: float, q: float, c: float = 1.0) -> float:
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    return float(position_x(t, q, c))


def momentum_p(m0, v, c: float = 1.0):
    """``gamma m0 v``; accepts dual numbers."""
    return lorentz_gamma(v, c) * m0 * v


def momentum_modulus(m0: float, v: float, c: float = 1.0) -> float:
    if not m0 > 0:
        raise ValueError(f"m0 must be positive, got {m0}")
    if v < 0:
        raise ValueError(f"speed must be >= 0, got {v}")
    return float(momentum_p(m0, v, c))


def delta_x_sq(state: KinematicState, c: float = 1.0) -> float:
    """Squared propagated uncertainty of the position modulus.

    With q = v t the partial derivatives of sqrt(c^2 t^2 - q^2) are
    gamma c (in t) and -gamma v / c (in q).
    """
    g = lorentz_gamma(state.v, c)
    g2 = g * g
    return g2 * c * c * state.dt ** 2 + g2 * (state.v / c) ** 2 * state.dq ** 2


def delta_p_sq(state: KinematicState, c: float = 1.0) -> float:
    """Squared propagated uncertainty of ``gamma m0 v``, i.e. (m0 gamma^3 dv)^2."""
    g = lorentz_gamma(state.v, c)
    return (state.m0 * g ** 3 * state.dv) ** 2


def relativistic_uncertainties(state: KinematicState, c: float = 1.0) -> RelativisticUncertainties:
    return RelativisticUncertainties(delta_x_sq(state, c), delta_p_sq(state, c),
                                     lorentz_gamma(state.v, c))


def proper_time(t: float, gamma: float, convention: str) -> float:
    """Proper time under one of two conventions.

    ``"sec3"`` gives ``t / gamma`` (used for the position modulus),
    ``"sec4"`` gives ``gamma * t`` (used for the energy-time relation).
    There is no default; the caller must choose.
    """
    if not gamma >= 1:
        raise GammaBelowOneError(f"gamma must be >= 1, got {gamma}")
    if not t > 0:
        raise NonpositiveTimeError(f"t must be positive, got {t}")
    if convention == SEC3:
        return t / gamma
    if convention == SEC4:
        return gamma * t
    raise ValueError(f"convention must be {SEC3!r} or {SEC4!r}, got {convention!r}")


def de_broglie_min_dq(p: float, hbar: float = 1.0) -> float:
    """Position-uncertainty floor ``hbar / (2 p)``."""
    if p == 0:
        raise ZeroMomentumError("momentum must be nonzero")
    if p < 0:
        raise ValueError(f"momentum must be positive, got {p}")
    return hbar / (2.0 * p)
