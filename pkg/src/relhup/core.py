"""Domain types, physical constants and 3-vector algebra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

SI = "SI"
NATURAL = "natural"

# CODATA 2018 exact / recommended values
HBAR_SI = 1.054571817e-34  # J s
C_SI = 299792458.0  # m/s
ELECTRON_MASS_SI = 9.1093837015e-31  # kg


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant and speed of light in a chosen unit system.

    In natural mode both constants are exactly 1.
    """

    hbar: float = HBAR_SI
    c: float = C_SI
    mode: str = SI

    def __post_init__(self):
        if self.mode not in (SI, NATURAL):
            raise ValueError(f"unknown units mode {self.mode!r}")
        if not (math.isfinite(self.hbar) and self.hbar > 0):
            raise ValueError(f"hbar must be positive and finite, got {self.hbar}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be positive and finite, got {self.c}")
        if self.mode == NATURAL and (self.hbar != 1.0 or self.c != 1.0):
            raise ValueError("natural units fix hbar = c = 1")

    @property
    def h(self) -> float:
        return 2.0 * math.pi * self.hbar

    @classmethod
    def si(cls, hbar: Optional[float] = None, c: Optional[float] = None) -> "PhysicalConstants":
        return cls(HBAR_SI if hbar is None else float(hbar),
                   C_SI if c is None else float(c), SI)

    @classmethod
    def natural(cls) -> "PhysicalConstants":
        return cls(1.0, 1.0, NATURAL)


@dataclass(frozen=True)
class MeasuredScalar:
    value: float
    sigma: float = 0.0
    unit: str = ""

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value}")
        if not (math.isfinite(self.sigma) and self.sigma >= 0):
            raise ValueError(f"sigma must be finite and >= 0, got {self.sigma}")

    def __str__(self):
        unit = f" {self.unit}" if self.unit else ""
        return f"{self.value!r} +/- {self.sigma!r}{unit}"


@dataclass(frozen=True)
class MeasuredVector3:
    """Three components with independent one-sigma uncertainties."""

    components: tuple
    sigmas: tuple = (0.0, 0.0, 0.0)
    unit: str = ""

    def __post_init__(self):
        comps = tuple(float(x) for x in self.components)
        sigs = tuple(float(s) for s in self.sigmas)
        if len(comps) != 3 or len(sigs) != 3:
            raise ValueError("MeasuredVector3 needs exactly 3 components and 3 sigmas")
        if not all(math.isfinite(x) for x in comps):
            raise ValueError(f"components must be finite, got {comps}")
        if not all(math.isfinite(s) and s >= 0 for s in sigs):
            raise ValueError(f"sigmas must be finite and >= 0, got {sigs}")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "sigmas", sigs)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return MeasuredScalar(self.components[i], self.sigmas[i], self.unit)


@dataclass(frozen=True)
class KinematicState:
    """Rest mass, speed and lab time of a particle, with their uncertainties.

    ``dq`` is the uncertainty of the spatial displacement ``q = v t``.
    The constraint ``v < c`` depends on the unit system and is checked by
    the functions that receive ``c``.
    """

    m0: float
    v: float
    t: float
    dt: float = 0.0
    dv: float = 0.0
    dq: float = 0.0

    def __post_init__(self):
        for name in ("m0", "v", "t", "dt", "dv", "dq"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.m0 <= 0:
            raise ValueError(f"m0 must be positive, got {self.m0}")
        if self.v < 0:
            raise ValueError(f"v must be >= 0, got {self.v}")
        if self.t <= 0:
            raise ValueError(f"t must be positive, got {self.t}")
        if min(self.dt, self.dv, self.dq) < 0:
            raise ValueError("uncertainties must be >= 0")

    @property
    def q(self) -> float:
        return self.v * self.t


@dataclass(frozen=True)
class BoundReport:
    """Evaluated lower bounds for one speed.

    ``min_delta_epsilon`` is only filled in when a measuring time was given.
    """

    beta: float
    gamma: float
    zeta: float
    bound_xp: float
    bound_xp_ultra: float
    bound_et: float
    bound_et_ultra: float
    min_delta_epsilon: Optional[float] = None

    def as_dict(self) -> dict:
        d = {
            "beta": self.beta,
            "gamma": self.gamma,
            "zeta": self.zeta,
            "bound_xp": self.bound_xp,
            "bound_xp_ultra": self.bound_xp_ultra,
            "bound_et": self.bound_et,
            "bound_et_ultra": self.bound_et_ultra,
        }
        if self.min_delta_epsilon is not None:
            d["min_delta_epsilon"] = self.min_delta_epsilon
        return d


VectorLike = Union[MeasuredVector3, Sequence[float]]


def _as_triple(v: VectorLike) -> tuple:
    if isinstance(v, MeasuredVector3):
        return v.components
    t = tuple(float(x) for x in v)
    if len(t) != 3:
        raise ValueError(f"expected 3 components, got {len(t)}")
    return t


def vec_norm(v: VectorLike) -> float:
    """Euclidean norm of the components."""
    return math.hypot(*_as_triple(v))


def vec_dot(a: VectorLike, b: VectorLike) -> float:
    a, b = _as_triple(a), _as_triple(b)
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
