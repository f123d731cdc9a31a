#!/usr/bin/env python3
"""Distance from the origin on a fuzzy plane comes in discrete rungs.

With [X, Y] = i L^2 the squared radius X^2 + Y^2 behaves like a harmonic
oscillator Hamiltonian: its eigenvalues are L^2 (2n + 1).  The smallest
measurable distance from the origin is L, not zero, and successive rings
are spaced by 2 L^2 in squared distance.  This script builds the truncated
operators, prints the spectrum next to the closed form, and shows where
the finite matrix stops being trustworthy.
"""

import numpy as np

from ncplane import (
    NcParams,
    build_ladder,
    build_xy,
    commutator,
    distance_spectrum,
    hermiticity_defect,
)

L = 0.7
DIM = 8

params = NcParams(L=L)
X, Y = build_xy(params, DIM)

print(f"plane with L = {L}, truncated at dim = {DIM}")
print(f"hermiticity defect of X: {hermiticity_defect(X):.2e}")
print()

C = commutator(X, Y)
print("[X, Y] diagonal / (i L^2):")
ratio = np.diag(C).imag / params.L2
for n, r in enumerate(ratio):
    tag = "truncation artifact" if n == DIM - 1 else "clean"
    print(f"  n = {n}: {r:+.12f}   ({tag})")
print()

values = distance_spectrum(params, DIM)
exact = params.L2 * (2 * np.arange(DIM) + 1)
print("squared-distance spectrum vs L^2 (2n + 1):")
print(f"  {'n':>2} {'eigenvalue':>18} {'closed form':>18} {'rel err':>10}")
for n in range(DIM):
    rel = abs(values[n] / exact[n] - 1)
    print(f"  {n:>2} {values[n]:>18.12f} {exact[n]:>18.12f} {rel:>10.1e}")
print()

# the top rung of the truncated matrix is an artifact, not physics:
# the raw X^2 + Y^2 matrix caps at L^2 (dim - 1) instead of L^2 (2 dim - 1)
Z, Zdag = build_ladder(DIM)
R2 = X @ X + Y @ Y
print(f"top diagonal of X^2 + Y^2: {R2[-1, -1].real:.6f}")
print(f"clean continuation would be: {params.L2 * (2 * DIM - 1):.6f}")
print()

# shortest distance from the origin: sqrt of the lowest rung, i.e. L itself
print(f"minimum distance: sqrt({values[0]:.6f}) = {np.sqrt(values[0]):.6f}  (L = {L})")
