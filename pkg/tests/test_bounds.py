import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf
from mpmath import sqrt as msqrt

from relhup.bounds import (
    InequalityCheck,
    bound_et_rel,
    bound_et_ultra,
    bound_report,
    bound_xp_rel,
    bound_xp_ultra,
    check_cauchy_schwarz,
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
from relhup.core import KinematicState, MeasuredVector3, PhysicalConstants
from relhup.errors import (
    ComponentHupViolatedError,
    DegenerateVelocitiesError,
    GammaBelowOneError,
    NonpositiveEnergyError,
    NonpositiveTimeError,
    SuperluminalSpeedError,
)
from relhup.kinematics import gamma_from_beta

mp.dps = 40
G985 = gamma_from_beta(0.985)
gammas = st.floats(1.0, 1e3)


def mp_zeta(beta):
    g = 1 / msqrt(1 - mpf(beta) ** 2)
    return g ** 4 * msqrt(2 - 1 / g ** 2)


class TestInequalityCheck:
    def test_saturation_counts(self):
        c = InequalityCheck(1.5, 1.5)
        assert c.satisfied and c.slack == 0.0

    def test_rounding_slack(self):
        assert InequalityCheck(1.5 - 1e-13, 1.5).satisfied
        assert not InequalityCheck(1.5 - 1e-9, 1.5).satisfied

    def test_weakest_link(self):
        outer = InequalityCheck(10.0, 1.0, "outer", (InequalityCheck(2.0, 1.9, "inner"),))
        assert outer.weakest.label == "inner"


class TestZeta:
    def test_rest(self):
        assert zeta(1.0) == 1.0

    def test_985(self):
        assert zeta(G985) == pytest.approx(float(mp_zeta("0.985")), rel=1e-12)
        assert zeta(G985) == pytest.approx(1583.3, abs=0.1)

    def test_99(self):
        assert zeta(gamma_from_beta(0.99)) == pytest.approx(float(mp_zeta("0.99")), rel=1e-12)
        assert zeta(gamma_from_beta(0.99)) == pytest.approx(3553.4, abs=0.1)

    def test_below_one(self):
        with pytest.raises(GammaBelowOneError):
            zeta(0.999)

    def test_ultra_asymptote(self):
        assert zeta(100.0) / (math.sqrt(2) * 100.0 ** 4) == pytest.approx(1.0, abs=1e-4)

    def test_monotone_on_grid(self):
        z = [zeta(g) for g in np.linspace(1, 100, 10_000)]
        assert all(a < b for a, b in zip(z, z[1:]))

    def test_inverse(self):
        beta = zeta_inverse(1e6)
        # bisection of the same closed form at 40 digits gives gamma = 29.0003697...
        assert beta == pytest.approx(0.9994053080081332, rel=1e-10)
        assert zeta(gamma_from_beta(beta)) == pytest.approx(1e6, rel=1e-8)

    @pytest.mark.parametrize("target", [1.0, 2.0, 1583.2677749277511])
    def test_inverse_round_trip(self, target):
        beta = zeta_inverse(target)
        assert zeta(gamma_from_beta(beta)) == pytest.approx(target, rel=1e-8)

    def test_inverse_bad_target(self):
        with pytest.raises(ValueError):
            zeta_inverse(0.5)


class TestPositionMomentumBounds:
    def test_rest_value(self):
        assert bound_xp_rel(1.0) == 0.5

    def test_three_four_five(self):
        # 0.5 * 1.25^4 * sqrt(1.36)
        assert bound_xp_rel(1.25) == pytest.approx(1.4235722399524659, rel=1e-14)

    def test_985(self):
        assert bound_xp_rel(G985) == pytest.approx(791.6, abs=0.1)

    def test_ultra_values(self):
        assert bound_xp_ultra(1.0) == pytest.approx(0.7071068, rel=1e-7)
        assert bound_xp_ultra(10.0) == pytest.approx(7071.068, rel=1e-7)

    def test_ultra_convergence(self):
        ratio = bound_xp_ultra(100.0) / bound_xp_rel(100.0)
        assert ratio == pytest.approx(1.0000250009375391, rel=1e-12)

    def test_nonrelativistic_limit(self):
        assert bound_xp_rel(1.0 + 1e-9) == pytest.approx(0.5, rel=1e-8)

    @given(gammas)
    def test_at_least_half_hbar(self, g):
        assert bound_xp_rel(g) >= 0.5


class TestEnergyTimeBounds:
    def test_values(self):
        assert bound_et_rel(1.0) == 0.5
        assert bound_et_rel(1.25) == pytest.approx(1.1388577919619727, rel=1e-14)
        assert bound_et_rel(G985) == pytest.approx(136.6, abs=0.1)
        assert bound_et_ultra(1.0) == pytest.approx(0.7071068, rel=1e-7)
        assert bound_et_ultra(2.0) == pytest.approx(5.656854, rel=1e-7)

    def test_ultra_ratio(self):
        assert bound_et_ultra(10.0) / bound_et_rel(10.0) == pytest.approx(1.0025094142341710, rel=1e-12)

    def test_grid_properties(self):
        for g in np.linspace(1, 100, 10_000):
            assert bound_et_rel(g) == pytest.approx(bound_xp_rel(g) / g, rel=1e-12)
            assert bound_et_ultra(g) >= bound_et_rel(g)

    @pytest.mark.parametrize("fn", [bound_xp_rel, bound_xp_ultra, bound_et_rel, bound_et_ultra])
    @given(g=gammas, hbar=st.floats(1e-40, 1e10))
    def test_homogeneous_in_hbar(self, fn, g, hbar):
        assert fn(g, 2 * hbar) == 2 * fn(g, hbar)


class TestMinDeltaEpsilon:
    def test_values(self):
        assert min_delta_epsilon(1.0, 1.0) == pytest.approx(0.7071068, rel=1e-7)
        assert min_delta_epsilon(0.5, 1.0) == pytest.approx(1.4142136, rel=1e-7)

    def test_985(self):
        expected = float(msqrt(2) / 2 * (1 / msqrt(1 - mpf("0.985") ** 2)) ** 3 / mpf("1e-3"))
        assert expected == pytest.approx(137628.17370877641, rel=1e-14)
        assert min_delta_epsilon(1e-3, G985) == pytest.approx(expected, rel=1e-12)

    def test_nonpositive_time(self):
        with pytest.raises(NonpositiveTimeError):
            min_delta_epsilon(0.0, 1.0)


class TestRateBounds:
    def test_dp(self):
        assert landau_dp_bound(1.0, 0.0, 0.5) == 1.0
        assert landau_dp_bound(2.0, 0.5, 0.75) == 1.0

    def test_dp_light_speed_limit(self):
        k = PhysicalConstants.si()
        assert landau_dp_bound(1e-9, 0.0, k.c, k.hbar) == k.hbar / (2 * k.c * 1e-9)
        assert landau_dp_bound(1.0, 0.0, 1.0) == 0.5

    def test_dp_errors(self):
        with pytest.raises(NonpositiveTimeError):
            landau_dp_bound(0.0, 0.0, 1.0)
        with pytest.raises(DegenerateVelocitiesError):
            landau_dp_bound(1.0, 0.5, 0.5)

    def test_dq(self):
        assert landau_dq_bound(1.0) == 0.5
        assert landau_dq_bound(0.1) == pytest.approx(5.0, rel=1e-15)
        with pytest.raises(NonpositiveEnergyError):
            landau_dq_bound(0.0)

    def test_dq_rest_energy_limit(self):
        assert landau_dq_bound(1.0, 1.0, 1.0) == 0.5

    def test_dE(self):
        assert landau_dE_bound(1.0) == 0.5
        assert landau_dE_bound(0.25) == 2.0
        with pytest.raises(NonpositiveTimeError):
            landau_dE_bound(-1.0)

    def test_dE_si(self):
        k = PhysicalConstants.si()
        e = landau_dE_bound(1e-21, k.hbar)
        assert e == pytest.approx(5.272859085e-14, rel=1e-12)
        assert e / 1.602176634e-13 == pytest.approx(0.329, abs=5e-4)  # MeV


class TestComponentHup:
    def test_saturation(self):
        c = check_component_hup((1, 1, 1), (0.5, 0.5, 0.5))
        assert (c.lhs, c.rhs, c.satisfied) == (1.5, 1.5, True)

    def test_excess(self):
        c = check_component_hup((2, 1, 1), (0.5, 0.5, 0.5))
        assert c.lhs == 2.0 and c.satisfied

    def test_hypothesis_violated(self):
        with pytest.raises(ComponentHupViolatedError):
            check_component_hup((1, 1, 1), (0.4, 0.5, 0.5))

    def test_accepts_measured_vectors(self):
        q = MeasuredVector3((0, 0, 0), (1, 1, 1))
        p = MeasuredVector3((5, 5, 5), (0.5, 0.5, 0.5))
        assert check_component_hup(q, p).satisfied


class TestModulusHup:
    def test_saturation(self):
        c = check_modulus_hup((1, 1, 1), (0.5, 0.5, 0.5))
        assert c.lhs == pytest.approx(1.5, rel=1e-15)
        assert c.rhs == 0.5 and c.satisfied
        assert all(link.satisfied for link in c.chain)

    def test_unequal(self):
        c = check_modulus_hup((1, 2, 3), (0.5, 0.25, 0.1667))
        dot = c.chain[1].lhs
        assert dot == pytest.approx(1.5001, rel=1e-12)
        assert c.lhs >= dot and c.satisfied

    def test_random_saturating(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            hbar = 10.0 ** rng.uniform(-34, 2)
            dq = rng.uniform(0.01, 100, 3)
            dp = 0.5 * hbar / dq
            c = check_modulus_hup(dq, dp, hbar)
            assert c.satisfied and all(link.satisfied for link in c.chain)

    def test_hypothesis_violated(self):
        with pytest.raises(ComponentHupViolatedError):
            check_modulus_hup((1, 1, 1), (0.5, 0.5, 0.1))


def test_cauchy_schwarz_check():
    rng = np.random.default_rng(9)
    for _ in range(10_000):
        assert check_cauchy_schwarz(rng.normal(size=3), rng.normal(size=3)).satisfied


class TestEq9Identity:
    def test_zero(self):
        assert eq9_identity(KinematicState(1, 0.6, 1)) == (0.0, 0.0)

    def test_worked_instance(self):
        lhs, rhs = eq9_identity(KinematicState(m0=1, v=0.6, t=1, dt=0.01, dv=0.01, dq=0.02))
        # 1.25^8 * (1e-8 + 0.36 * 4e-8), exact in binary up to rounding
        expected = 1.454353332519531e-07
        assert lhs == pytest.approx(expected, rel=1e-10)
        assert rhs == pytest.approx(expected, rel=1e-10)

    def test_random_states(self):
        rng = np.random.default_rng(13)
        for _ in range(1000):
            t = rng.uniform(0.1, 10)
            s = KinematicState(rng.uniform(0.1, 10), rng.uniform(0, 0.99), t,
                               t * rng.uniform(0, 0.1), rng.uniform(0, 1e-3), t * rng.uniform(0, 0.1))
            lhs, rhs = eq9_identity(s)
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=0)

    def test_superluminal(self):
        with pytest.raises(SuperluminalSpeedError):
            eq9_identity(KinematicState(1, 1.0, 1))


class TestBoundReport:
    def test_rest(self):
        r = bound_report(0.0)
        assert (r.gamma, r.zeta, r.bound_xp, r.bound_et) == (1.0, 1.0, 0.5, 0.5)
        assert r.min_delta_epsilon is None

    def test_invariants(self):
        r = bound_report(0.985, dt=1e-3)
        assert r.gamma == pytest.approx((1 - 0.985 ** 2) ** -0.5, rel=1e-15)
        assert r.zeta == pytest.approx(r.gamma ** 4 * math.sqrt(2 - r.gamma ** -2), rel=1e-15)
        assert r.min_delta_epsilon == pytest.approx(137628.17370877641, rel=1e-12)

    def test_si_scales_with_hbar(self):
        k = PhysicalConstants.si()
        assert bound_report(0.0, k).bound_xp == k.hbar / 2

    def test_superluminal(self):
        with pytest.raises(SuperluminalSpeedError):
            bound_report(1.0)
