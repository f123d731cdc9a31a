#!/usr/bin/env python3
"""Reading energy gaps off a density matrix, no wavefunction needed.

Off-diagonal density-matrix entries rotate at the Bohr transition
frequencies (E_f - E_i) / hbar while the diagonal sits still.  Sampling
the evolving matrix and stacking the coherence power spectra therefore
reveals every level gap.  This is the dissipative-planes story run in
reverse: instead of predicting decay from a spectrum, we recover the
spectrum from coherent beats.
"""

import numpy as np

from ncplane import bohr_frequencies, evolve_density, validate_density_matrix

energies = np.array([0.0, 0.9, 2.4, 3.1])
dim = len(energies)
true_gaps = sorted(
    energies[j] - energies[i] for i in range(dim) for j in range(i + 1, dim)
)

print("hidden spectrum:", energies)
print("pairwise gaps:  ", [f"{g:.3f}" for g in true_gaps])
print()

# start from an even superposition so every coherence is populated
rho0 = np.full((dim, dim), 1.0 / dim)
validate_density_matrix(rho0)

dt = 0.25
n_samples = 4096
rhos = np.array([evolve_density(energies, rho0, k * dt) for k in range(n_samples)])

# sanity: the diagonal never moves, the trace stays one
assert np.allclose(rhos[:, range(dim), range(dim)].imag, 0.0, atol=1e-12)
print(f"sampled {n_samples} matrices at dt = {dt}")
print(f"trace drift: {np.abs(np.einsum('kii->k', rhos) - 1).max():.2e}")
print()

found = bohr_frequencies(rhos, dt)
bin_width = 2 * np.pi / (n_samples * dt)
print(f"DFT bin width: {bin_width:.5f}")
print("recovered frequencies vs true gaps:")
print(f"  {'found':>10} {'nearest gap':>12} {'offset/bin':>11}")
for f in found:
    nearest = min(true_gaps, key=lambda g: abs(g - f))
    print(f"  {f:>10.5f} {nearest:>12.5f} {abs(f - nearest) / bin_width:>11.3f}")
print()

missed = [g for g in true_gaps if min(abs(g - f) for f in found) > bin_width]
print(f"gaps missed by more than one bin: {missed if missed else 'none'}")
print()

# a stationary state has no beats at all
still = np.array(
    [evolve_density(np.zeros(3), np.eye(3) / 3, k * dt) for k in range(256)]
)
print(f"peaks found in a stationary state: {bohr_frequencies(still, dt).size}")
