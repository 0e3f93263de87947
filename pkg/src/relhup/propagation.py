"""First-order (delta-method) uncertainty propagation.

Inputs are assumed independent, so

    sigma_f**2 = sum_i (df/dx_i * sigma_i)**2

The partial derivatives come from forward-mode dual numbers; central
finite differences are provided only as an independent check.
"""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence

from . import dual
from .core import MeasuredVector3, vec_norm
from .dual import Dual
from .errors import ZeroModulusError

ScalarFn = Callable[..., float]


def evaluate(f: ScalarFn, x: Sequence[float]) -> float:
    """Evaluate ``f`` at a point given as a sequence of coordinates."""
    return float(f(*[float(xi) for xi in x]))


def gradient(f: ScalarFn, x: Sequence[float]) -> list:
    """Exact partial derivatives of ``f`` at ``x``, one dual pass per input.

    ``f`` takes ``len(x)`` positional arguments and must be built from
    arithmetic operators and the functions in :mod:`relhup.dual`.

    Raises
    ------
    DomainError
        If ``f`` cannot be evaluated at ``x``.
    """
    x = [float(xi) for xi in x]
    grad = []
    for i in range(len(x)):
        args = [Dual(xj, 1.0 if j == i else 0.0) for j, xj in enumerate(x)]
        out = f(*args)
        # constant functions return a plain number
        grad.append(out.der if isinstance(out, Dual) else 0.0)
    return grad


def fd_gradient(f: ScalarFn, x: Sequence[float], h: Optional[float] = None) -> list:
    """Central finite-difference gradient.

    With ``h=None`` the step for coordinate i is ``1e-6 * max(1, |x_i|)``.
    """
    if h is not None and not h > 0:
        raise ValueError(f"step must be positive, got {h}")
    x = [float(xi) for xi in x]
    grad = []
    for i, xi in enumerate(x):
        hi = 1e-6 * max(1.0, abs(xi)) if h is None else float(h)
        up = list(x)
        down = list(x)
        up[i] = xi + hi
        down[i] = xi - hi
        grad.append((evaluate(f, up) - evaluate(f, down)) / (2.0 * hi))
    return grad


def propagate_sigma(f: ScalarFn, x: Sequence[float], sigmas: Sequence[float]) -> float:
    """Delta-method standard deviation of ``f`` for independent inputs."""
    sigmas = [float(s) for s in sigmas]
    if len(sigmas) != len(x):
        raise ValueError("x and sigmas must have the same length")
    if any(not s >= 0 for s in sigmas):
        raise ValueError(f"sigmas must be >= 0, got {sigmas}")
    if not any(sigmas):
        # still evaluate f so domain errors surface
        evaluate(f, x)
        return 0.0
    grad = gradient(f, x)
    return math.hypot(*(g * s for g, s in zip(grad, sigmas)))


def norm3(x: float, y: float, z: float):
    """Euclidean norm written for dual evaluation."""
    return dual.sqrt(x * x + y * y + z * z)


def modulus_sigma(v: MeasuredVector3) -> float:
    """Closed-form uncertainty of ``|v|``: sqrt(sum v_i^2 s_i^2) / |v|."""
    n = vec_norm(v)
    if n == 0.0:
        raise ZeroModulusError("modulus uncertainty is undefined for the zero vector")
    comps = v.components
    return math.hypot(*(c * s for c, s in zip(comps, v.sigmas))) / n
