"""Property suites run by ``relhup verify``.

Each suite is a generator of :class:`CheckResult`; random inputs come from
a generator seeded with the run seed so reruns are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import bounds, kinematics, montecarlo
from .core import KinematicState, MeasuredVector3, PhysicalConstants
from .propagation import fd_gradient, gradient, modulus_sigma, norm3, propagate_sigma

SUITES = ("propagation", "inequalities", "identity", "limits")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status}{extra}"


def _rel(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else 0.0


def random_state(rng: np.random.Generator, c: float) -> KinematicState:
    """A valid state with beta in [0, 0.99] and modest relative uncertainties."""
    t = rng.uniform(0.5, 10.0) / c
    return KinematicState(
        m0=rng.uniform(0.1, 10.0),
        v=c * rng.uniform(0.0, 0.99),
        t=t,
        dt=t * rng.uniform(0.0, 0.05),
        dv=c * rng.uniform(0.0, 1e-3),
        dq=c * t * rng.uniform(0.0, 0.05),
    )


def random_saturating(rng: np.random.Generator, hbar: float):
    """Uncertainty triples with every component product exactly at hbar/2 or above."""
    dq = rng.uniform(0.1, 10.0, 3)
    excess = np.where(rng.random(3) < 0.5, 1.0, 1.0 + rng.uniform(0.0, 2.0, 3))
    dp = 0.5 * hbar / dq * excess
    # products like dq*(0.5/dq) can fall 1 ulp short; the checks absorb it
    return tuple(dq), tuple(dp)


def propagation_suite(const: PhysicalConstants, seed: int, samples: int) -> Iterator[CheckResult]:
    rng = np.random.default_rng(seed)

    funcs = [
        ("cubic polynomial", lambda x, y: x ** 3 - 2 * x * y + 0.5 * y ** 2, 2),
        ("vector norm", norm3, 3),
        ("lorentz gamma", lambda v: kinematics.lorentz_gamma(v, 1.0), 1),
    ]
    worst = 0.0
    for _ in range(200):
        for _, f, dim in funcs:
            x = rng.uniform(0.1, 0.95, dim) if dim == 1 else rng.uniform(0.5, 5.0, dim)
            for a, b in zip(gradient(f, x), fd_gradient(f, x, 1e-6)):
                worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    yield CheckResult("dual gradient matches central differences", worst < 1e-6,
                      f"max deviation {worst:.3g}")

    worst = 0.0
    for _ in range(1000):
        comps = rng.normal(0.0, 10.0, 3)
        sig = rng.uniform(0.0, 1.0, 3)
        v = MeasuredVector3(comps, sig)
        worst = max(worst, _rel(modulus_sigma(v), propagate_sigma(norm3, comps, sig)))
    yield CheckResult("closed-form modulus sigma matches engine", worst < 1e-12,
                      f"max rel {worst:.3g}")

    v = MeasuredVector3((3.0, 4.0, 0.0), (0.1, 0.2, 0.3))
    expected = modulus_sigma(v)
    summary = montecarlo.sample_modulus(v, samples, seed)
    dev = montecarlo.relative_deviation(summary.std, expected)
    yield CheckResult("Monte Carlo modulus sigma within 2%", dev < 0.02,
                      f"sampled {summary.std:.6g} vs {expected:.6g}, n={samples}")


def inequality_suite(const: PhysicalConstants, seed: int, samples: int) -> Iterator[CheckResult]:
    rng = np.random.default_rng(seed)
    hbar = const.hbar
    comp_ok = mod_ok = True
    for _ in range(1000):
        dq, dp = random_saturating(rng, hbar)
        comp_ok &= bounds.check_component_hup(dq, dp, hbar).satisfied
        check = bounds.check_modulus_hup(dq, dp, hbar)
        mod_ok &= check.satisfied and all(c.satisfied for c in check.chain)
    yield CheckResult("sum of component products >= 3 hbar/2", comp_ok, "1000 saturating trials")
    yield CheckResult("modulus product >= hbar/2", mod_ok, "1000 saturating trials")

    cs_ok = True
    for _ in range(10_000):
        a = rng.normal(0.0, 1.0, 3) * 10.0 ** rng.uniform(-3, 3)
        b = rng.normal(0.0, 1.0, 3) * 10.0 ** rng.uniform(-3, 3)
        lhs = math.hypot(*a) * math.hypot(*b)
        cs_ok &= lhs >= abs(float(np.dot(a, b))) - 1e-12 * lhs
    yield CheckResult("Cauchy-Schwarz on random pairs", cs_ok, "10000 pairs")


def identity_suite(const: PhysicalConstants, seed: int, samples: int) -> Iterator[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        lhs, rhs = bounds.eq9_identity(random_state(rng, const.c), const.c)
        worst = max(worst, _rel(lhs, rhs))
    yield CheckResult("product identity on 1000 random states", worst < 1e-12,
                      f"max rel {worst:.3g}")

    lhs, rhs = bounds.eq9_identity(KinematicState(1.0, 0.6, 1.0, 0.01, 0.01, 0.02), 1.0)
    ok = _rel(lhs, 1.4543533325195312e-07) < 1e-10 and _rel(rhs, 1.4543533325195312e-07) < 1e-10
    yield CheckResult("worked instance v=0.6", ok, f"lhs={lhs!r} rhs={rhs!r}")


def limits_suite(const: PhysicalConstants, seed: int, samples: int) -> Iterator[CheckResult]:
    hbar, c = const.hbar, const.c
    b = bounds.bound_xp_rel(1.0 + 1e-9, hbar)
    yield CheckResult("gamma→1 reduces bound to ħ/2", _rel(b, 0.5 * hbar) < 1e-8,
                      f"{b!r}")

    g = kinematics.gamma_from_beta(1e-6)
    b = bounds.bound_xp_rel(g, hbar)
    yield CheckResult("beta=1e-6 bound equals ħ/2", _rel(b, 0.5 * hbar) < 1e-8, f"{b!r}")

    r = bounds.zeta(100.0) / (math.sqrt(2.0) * 100.0 ** 4)
    yield CheckResult("ultra-relativistic zeta ~ sqrt(2) gamma^4", abs(r - 1) < 1e-4,
                      f"ratio {r!r} at gamma=100")

    dp_lim = bounds.landau_dp_bound(1.0, 0.0, c, hbar)
    yield CheckResult("rate bound with v'-v = c gives hbar/(2 c dt)",
                      _rel(dp_lim, hbar / (2 * c)) < 1e-15, f"{dp_lim!r}")
    m = 1.0
    dq_lim = bounds.landau_dq_bound(m * c * c, c, hbar)
    yield CheckResult("rate bound with dE = m c^2 gives hbar/(2p)",
                      _rel(dq_lim, kinematics.de_broglie_min_dq(m * c, hbar)) < 1e-15, f"{dq_lim!r}")

    z = bounds.zeta(kinematics.gamma_from_beta(0.985))
    yield CheckResult("zeta(0.985c) is of order 10^3", 1e3 <= z < 1e4, f"{z:.6g}")

    z99 = bounds.zeta(kinematics.gamma_from_beta(0.99))
    beta6 = bounds.zeta_inverse(1e6)
    yield CheckResult("zeta(0.99c) is not of order 10^6", z99 < 1e5,
                      f"zeta={z99:.6g}; zeta reaches 1e6 only at beta={beta6:.10f}")


_SUITE_FUNCS = {
    "propagation": propagation_suite,
    "inequalities": inequality_suite,
    "identity": identity_suite,
    "limits": limits_suite,
}


def run(suite: str, const: PhysicalConstants, seed: int = 42, samples: int = 1_000_000):
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from _SUITE_FUNCS[name](const, seed, samples)
