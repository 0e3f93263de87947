"""Energy uncertainty floors for a short measurement.

Non-relativistically dE >= hbar/(2 dt). For a particle at Lorentz factor
gamma the corresponding floor is (sqrt(2)/(2 dt)) gamma^3 hbar. SI units
are used here so the numbers can be read in MeV.
"""

from relhup import PhysicalConstants, gamma_from_beta, landau_dE_bound, min_delta_epsilon

MEV = 1.602176634e-13  # J
k = PhysicalConstants.si()
dt = 1e-21  # s

print(f"dt = {dt:g} s")
print(f"non-relativistic floor: {landau_dE_bound(dt, k.hbar) / MEV:.4f} MeV")
for beta in (0.5, 0.9, 0.985, 0.99):
    g = gamma_from_beta(beta)
    print(f"beta={beta:5.3f} gamma={g:7.3f}  floor = {min_delta_epsilon(dt, g, k.hbar) / MEV:10.3f} MeV")
