#!/usr/bin/env python3
"""Two routes to one interference phase: enclosed area vs action difference.

A closed loop in the noncommutative plane carries phase A / L^2, the signed
area over the square length scale.  The same number comes out of mechanics:
split the loop into two branches meeting at common endpoints, treat y as the
momentum conjugate to x (p = hbar y / L^2), and take the action difference
over hbar.  The agreement is exact for polygons because both sides reduce to
the shoelace sum.
"""

import numpy as np

from ncplane import (
    NcParams,
    interference_phase_area,
    loop_action_phase,
    signed_area,
    to_phase_space,
)

params = NcParams(L=0.5)

hexagon = np.column_stack(
    [np.cos(2 * np.pi * np.arange(6) / 6), np.sin(2 * np.pi * np.arange(6) / 6)]
)

print(f"regular hexagon, area = {signed_area(hexagon):.12f}")
print(f"  phase by area route:   {interference_phase_area(hexagon, params):.12f}")
print(f"  phase by action route: {loop_action_phase(hexagon, params):.12f}")
print()

print("reversing the loop flips the sign:")
print(f"  area route, reversed:  {interference_phase_area(hexagon[::-1], params):.12f}")
print()

# a circle discretized fine enough behaves the same way
angles = 2 * np.pi * np.arange(2000) / 2000
circle = np.column_stack([1.3 * np.cos(angles), 1.3 * np.sin(angles)])
area_route = interference_phase_area(circle, params)
action_route = loop_action_phase(circle, params)
print(f"circle r = 1.3 with 2000 segments:")
print(f"  area route:   {area_route:.12f}")
print(f"  action route: {action_route:.12f}")
print(f"  pi r^2 / L^2: {np.pi * 1.3**2 / params.L2:.12f}")
print()

# the phase-space image stretches y by hbar / L^2; the action picks that up
mapped = to_phase_space(hexagon, params)
print("phase-space image of the hexagon (q, p):")
for q, p in mapped[:3]:
    print(f"  ({q:+.4f}, {p:+.4f})")
print("  ...")
print()

# scan the length scale: phase ~ 1 / L^2, so small L means violent phases
print("same hexagon at different length scales:")
for L in (0.3, 0.5, 1.0, 2.0):
    p = NcParams(L=L)
    print(f"  L = {L:>4}: phase = {interference_phase_area(hexagon, p):>12.6f}")
