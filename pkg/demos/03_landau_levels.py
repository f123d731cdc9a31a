#!/usr/bin/env python3
"""A charge in a magnetic field realizes the fuzzy plane twice over.

The kinematic momenta give one canonical pair with [rho_x, rho_y] = +i L^2,
and the orbit-center coordinates give a second, commuting pair with the
opposite sign, where L^2 = hbar c / (e B) is the magnetic length squared.
Energy levels stack as hbar omega_c (n + 1/2), orbit areas as pi L^2 (2n+1),
and each step up the ladder threads exactly one more flux quantum.
"""

import numpy as np

from ncplane import (
    MagneticParams,
    aharonov_bohm_phase,
    cyclotron_algebra,
    flux_quantization,
    landau_spectrum,
    magnetic_length,
)

params = MagneticParams(B=2.0)

print(f"B = {params.B}, omega_c = {params.omega_c}, L = {magnetic_length(params):.6f}")
print(f"flux quantum phi_0 = {params.flux_quantum:.12f}")
print()

print("Landau levels, E_n = hbar omega_c (n + 1/2):")
for n, e in enumerate(landau_spectrum(params, 5)):
    print(f"  n = {n}: E = {e:.6f}")
print()

print("orbit areas and the flux step between neighbors:")
print(f"  {'n':>2} {'area':>12} {'B * d(area)':>14} {'/ phi_0':>10}")
for n, (area, step) in enumerate(flux_quantization(params, 6)):
    print(f"  {n:>2} {area:>12.6f} {step:>14.8f} {step / params.flux_quantum:>10.6f}")
print()

report = cyclotron_algebra(params, 6)
idx = {label: k for k, label in enumerate(report.labels)}
lead = report.leading
print("commutator table, leading block / i:")
print(f"  [rho_x, rho_y]     = {lead[idx['rho_x'], idx['rho_y']].imag:+.6f}   (+L^2)")
print(f"  [center_x, center_y] = {lead[idx['center_x'], idx['center_y']].imag:+.6f}   (-L^2)")
print(f"  [rho_x, center_y]  = {abs(lead[idx['rho_x'], idx['center_y']]):.2e}   (cross, zero)")
print(f"  worst clean-block deviation: {report.max_clean_deviation():.2e}")
print()

# the interference phase around a loop is flux over (hbar c / e);
# one quantum of enclosed flux means a 2 pi phase, i.e. no fringe shift
area_one_quantum = params.flux_quantum / params.B
side = np.sqrt(area_one_quantum)
square = np.array([[0.0, 0.0], [side, 0.0], [side, side], [0.0, side]])
print("flux-threading phase for square loops:")
for scale, label in ((1.0, "one quantum"), (0.5, "half quantum"), (2.0, "two quanta")):
    loop = square * np.sqrt(scale)
    phase = aharonov_bohm_phase(params, loop)
    print(f"  {label:>12}: phase = {phase:.8f} = {phase / (2 * np.pi):.4f} * 2 pi")
