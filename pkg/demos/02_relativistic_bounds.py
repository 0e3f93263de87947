"""How the position-momentum floor grows with speed.

The modulus uncertainty product for a free particle picks up the factor
zeta = gamma^4 sqrt(2 - 1/gamma^2). At low speed it is 1; close to c it
behaves like sqrt(2) gamma^4.
"""

from relhup import bound_report, bound_xp_rel, bound_xp_ultra, gamma_from_beta, zeta, zeta_inverse

print(f"{'beta':>8} {'gamma':>10} {'zeta':>14} {'dx dp floor':>14}")
for beta in (0.0, 0.1, 0.5, 0.9, 0.95, 0.985, 0.99, 0.999):
    g = gamma_from_beta(beta)
    print(f"{beta:8.3f} {g:10.4f} {zeta(g):14.4f} {bound_xp_rel(g):14.4f}")

# the two speeds usually quoted for this factor
for beta in (0.985, 0.99):
    print(f"zeta at {beta} c = {zeta(gamma_from_beta(beta)):.1f}")

# where zeta actually reaches a million
beta = zeta_inverse(1e6)
print(f"zeta = 1e6 needs beta = {beta:.10f} (gamma = {1 / (1 - beta**2) ** 0.5:.4f})")

# ultra-relativistic form converges to the full expression
for g in (2.0, 10.0, 100.0):
    print(f"gamma={g:6.1f}: ultra/full = {bound_xp_ultra(g) / bound_xp_rel(g):.8f}")

print(bound_report(0.985, dt=1e-3))
