"""Propagated uncertainties of the relativistic position and momentum.

x = sqrt(c^2 t^2 - q^2) with q = v t, and p = gamma m0 v. Their squared
uncertainties multiply into a combination of an energy-time and a
position-momentum term, each weighted by gamma^8. At the Heisenberg floor
of both terms the product equals the relativistic bound exactly, and
sampling the measurement reproduces it.
"""

from relhup import (
    KinematicScenario,
    KinematicState,
    bound_xp_rel,
    delta_p_sq,
    delta_x_sq,
    eq9_identity,
    gamma_from_beta,
    mc_verify_bound,
)

state = KinematicState(m0=1.0, v=0.6, t=1.0, dt=0.01, dv=0.01, dq=0.02)
print("(dx)^2 =", delta_x_sq(state))
print("(dp)^2 =", delta_p_sq(state))
lhs, rhs = eq9_identity(state)
print("product:", lhs, " gamma^8 combination:", rhs)

# put both terms at hbar/2: c m0 dv dt = hbar/2 and m0 dv dq = hbar/2
hbar, m0, dv, beta = 1.0, 1.0, 1e-5, 0.985
floor = KinematicState(m0=m0, v=beta, t=1e10, dt=0.5 * hbar / (m0 * dv), dv=dv, dq=0.5 * hbar / (m0 * dv))
analytic = (delta_x_sq(floor) * delta_p_sq(floor)) ** 0.5
bound = bound_xp_rel(gamma_from_beta(beta), hbar)
print(f"analytic dx dp at the floor = {analytic:.4f}, bound = {bound:.4f}")

check = mc_verify_bound(KinematicScenario(floor), bound, n=10**6, seed=1, rtol=0.02)
print(check)
