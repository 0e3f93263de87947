"""Seeded Gaussian sampling used as an independent check of the delta method.

All sampling goes through numpy's PCG64 bit generator. Without chunking a
single stream seeded with ``seed`` produces all ``n`` draws. With
``chunk_size`` set, chunk ``k`` gets its own stream seeded with
``seed + k``; chunks are concatenated in index order, so the result does
not depend on ``workers``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .bounds import InequalityCheck
from .core import KinematicState, MeasuredVector3
from .errors import DomainError, InsufficientSamplesError


@dataclass(frozen=True)
class SampleSummary:
    n: int
    mean: float
    std: float
    min: float
    max: float
    seed: int


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def summarize(samples: np.ndarray, seed: int) -> SampleSummary:
    """Summary with the unbiased (n - 1) standard deviation."""
    n = samples.size
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    lo = float(samples.min())
    hi = float(samples.max())
    if lo == hi:
        # a constant ensemble must report exactly zero spread
        return SampleSummary(n, lo, 0.0, lo, hi, seed)
    mean = float(samples.mean())
    std = float(samples.std(ddof=1))
    return SampleSummary(n, mean, std, lo, hi, seed)


def _chunks(n: int, chunk_size: Optional[int]):
    if chunk_size is None:
        return [(0, n)]
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size}")
    return [(k, min(chunk_size, n - start))
            for k, start in enumerate(range(0, n, chunk_size))]


def draw(kernel: Callable[[np.random.Generator, int], np.ndarray], n: int, seed: int,
         chunk_size: Optional[int] = None, workers: int = 1) -> np.ndarray:
    """Run ``kernel(rng, m)`` over the chunk decomposition and concatenate.

    ``kernel`` must return an array whose first axis has length ``m``.
    """
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    parts = _chunks(n, chunk_size)

    def run(part):
        k, m = part
        return kernel(make_rng(seed + k), m)

    if workers > 1 and len(parts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, parts))
    else:
        results = [run(p) for p in parts]
    return np.concatenate(results, axis=0)


def _gaussian_vectors(v: MeasuredVector3):
    mu = np.asarray(v.components, dtype=float)
    sd = np.asarray(v.sigmas, dtype=float)

    def kernel(rng, m):
        return mu + sd * rng.standard_normal((m, 3))

    return kernel


def sample_moduli(v: MeasuredVector3, n: int, seed: int,
                  chunk_size: Optional[int] = None, workers: int = 1) -> np.ndarray:
    vecs = draw(_gaussian_vectors(v), n, seed, chunk_size, workers)
    return np.sqrt(np.einsum("ij,ij->i", vecs, vecs))


def sample_modulus(v: MeasuredVector3, n: int, seed: int,
                   chunk_size: Optional[int] = None, workers: int = 1) -> SampleSummary:
    """Summary of ``|v|`` over ``n`` draws with independent Gaussian components."""
    return summarize(sample_moduli(v, n, seed, chunk_size, workers), seed)


@dataclass(frozen=True)
class ModulusScenario:
    """Position and momentum vectors measured with independent Gaussian errors.

    Sampling yields the empirical spread of ``|q|`` and ``|p|``.
    """

    q: MeasuredVector3
    p: MeasuredVector3

    def sample_sigmas(self, n: int, seed: int, chunk_size=None, workers=1) -> Tuple[float, float]:
        sq = sample_modulus(self.q, n, seed, chunk_size, workers)
        # distinct stream so q and p errors are independent
        sp = sample_modulus(self.p, n, seed + 0x9E3779B9, chunk_size, workers)
        return sq.std, sp.std


@dataclass(frozen=True)
class KinematicScenario:
    """A particle whose lab time, displacement and speed are measured.

    Each trial draws ``t``, ``q`` and ``v`` independently around
    ``state.t``, ``state.v * state.t`` and ``state.v`` and evaluates
    ``x = sqrt(c^2 t^2 - q^2)`` and ``p = gamma m0 v``.
    """

    state: KinematicState
    c: float = 1.0

    def sample_sigmas(self, n: int, seed: int, chunk_size=None, workers=1) -> Tuple[float, float]:
        s, c = self.state, self.c
        mu = np.array([s.t, s.v * s.t, s.v])
        sd = np.array([s.dt, s.dq, s.dv])

        def kernel(rng, m):
            return mu + sd * rng.standard_normal((m, 3))

        tqv = draw(kernel, n, seed, chunk_size, workers)
        t, q, v = tqv[:, 0], tqv[:, 1], tqv[:, 2]
        radicand = (c * t) ** 2 - q * q
        if np.any(radicand <= 0) or np.any(np.abs(v) >= c):
            raise DomainError("sampled state left the timelike, subluminal region; "
                              "reduce the uncertainties")
        x = np.sqrt(radicand)
        p = s.m0 * v / np.sqrt(1.0 - (v / c) ** 2)
        return summarize(x, seed).std, summarize(p, seed).std


def mc_verify_bound(scenario, bound: float, n: int, seed: int, rtol: float = 0.0,
                    chunk_size: Optional[int] = None, workers: int = 1) -> InequalityCheck:
    """Compare the product of empirical sigmas with an analytic lower bound.

    ``lhs`` is the sampled product; ``rhs`` is ``bound * (1 - rtol)``, the
    bound relaxed by the allowed sampling tolerance.
    """
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    if not 0 <= rtol < 1:
        raise ValueError(f"rtol must be in [0, 1), got {rtol}")
    s_left, s_right = scenario.sample_sigmas(n, seed, chunk_size, workers)
    return InequalityCheck(s_left * s_right, bound * (1.0 - rtol),
                           f"sampled product >= bound (rtol={rtol:g})")


def relative_deviation(sampled: float, expected: float) -> float:
    if expected == 0:
        return 0.0 if sampled == 0 else math.inf
    return abs(sampled - expected) / abs(expected)
