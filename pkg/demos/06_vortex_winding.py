#!/usr/bin/env python3
"""Dragging a vortex around a loop counts the atoms inside it.

A quantized vortex in a thin superfluid film picks up 2 pi sigma of phase
for every atom its path encloses, so the expected phase for a loop of area
A on a film of density n is 2 pi sigma n A.  Averaged over placements the
count concentrates, and the length scale L with L^2 = 1 / (2 pi n) plays
the same role the magnetic length plays for a charge in a field.
"""

import numpy as np

from ncplane import (
    circulation_integral,
    film_length_scale,
    scene_from_dict,
    signed_area,
    winding_number,
    winding_phase,
)

rng = np.random.default_rng(6)

density = 8.0
side = 12.0
atoms = rng.uniform(0.0, side, size=(int(density * side**2), 2))
print(f"film: {len(atoms)} atoms over a {side} x {side} box, density n = {density}")
print(f"length scale L = {film_length_scale(density):.6f}")
print()

print("winding phase vs 2 pi n A for random circular paths:")
print(f"  {'area':>8} {'atoms in':>9} {'n A':>8} {'dev/sqrt(nA)':>13}")
for _ in range(6):
    area = rng.uniform(3.0, 18.0)
    radius = np.sqrt(area / np.pi)
    center = rng.uniform(radius, side - radius, 2)
    angles = 2 * np.pi * np.arange(128) / 128
    loop = center + radius * np.column_stack([np.cos(angles), np.sin(angles)])
    scene = scene_from_dict(
        {"core_loop": loop.tolist(), "atoms": atoms.tolist(), "sigma": 1}
    )
    count = winding_phase(scene) / (2 * np.pi)
    expected = density * abs(signed_area(loop))
    print(
        f"  {area:>8.3f} {count:>9.0f} {expected:>8.2f}"
        f" {(count - expected) / np.sqrt(expected):>13.3f}"
    )
print()

# circulation around the core agrees with the crossing-count winding number
square = np.array([[0.0, 0.0], [3.0, 0.0], [3.0, 3.0], [0.0, 3.0]])
double = np.column_stack(
    [
        1.5 + np.cos(np.linspace(0, 4 * np.pi, 600, endpoint=False)),
        1.5 + np.sin(np.linspace(0, 4 * np.pi, 600, endpoint=False)),
    ]
)
print("circulation vs winding number (two independent algorithms):")
for label, loop in (("square, once around", square), ("circle, twice around", double)):
    core = (1.5, 1.5)
    w = winding_number(core, loop)
    circ = circulation_integral(core, loop)
    print(f"  {label:<22} winding = {w}, circulation / 2 pi = {circ / (2 * np.pi):.10f}")
core_out = (10.0, 10.0)
print(
    f"  {'core outside':<22} winding = {winding_number(core_out, square)},"
    f" circulation / 2 pi = {circulation_integral(core_out, square) / (2 * np.pi):.10f}"
)
print()

# orientation of the path and the sign of the vortex both flip the phase
scene_dict = {
    "core_loop": square.tolist(),
    "atoms": [[1.0, 1.0], [2.0, 2.0], [2.5, 0.5]],
    "sigma": 1,
}
plus = winding_phase(scene_from_dict(scene_dict))
scene_dict["sigma"] = -1
minus = winding_phase(scene_from_dict(scene_dict))
print(f"three enclosed atoms: sigma = +1 gives {plus / np.pi:+.1f} pi,"
      f" sigma = -1 gives {minus / np.pi:+.1f} pi")
