"""Winding counts, winding phase, and circulation on the film geometry."""

import numpy as np
import pytest

from ncplane import (
    VortexScene,
    circulation_integral,
    film_length_scale,
    point_in_polygon,
    points_in_polygon,
    scene_from_dict,
    winding_number,
    winding_numbers,
    winding_phase,
)

SQUARE = np.array([[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]])


def star_loop(rng, n, center=(0.0, 0.0), r_lo=0.5, r_hi=2.0):
    angles = np.sort(rng.uniform(0, 2 * np.pi, n))
    radii = rng.uniform(r_lo, r_hi, n)
    return np.column_stack(
        [center[0] + radii * np.cos(angles), center[1] + radii * np.sin(angles)]
    )


def test_winding_number_inside_outside():
    assert winding_number((0.5, 0.5), SQUARE) == 1
    assert winding_number((1.5, 0.5), SQUARE) == 1
    assert winding_number((2.5, 0.5), SQUARE) == 0
    assert winding_number((-0.1, 1.0), SQUARE) == 0
    # clockwise traversal counts with opposite sign
    assert winding_number((1.0, 1.0), SQUARE[::-1]) == -1


def test_winding_numbers_vectorized():
    pts = np.array([[0.5, 0.5], [3.0, 3.0], [1.0, 1.9], [1.0, -0.5]])
    np.testing.assert_array_equal(winding_numbers(pts, SQUARE), [1, 0, 1, 0])
    inside = points_in_polygon(pts, SQUARE)
    np.testing.assert_array_equal(inside, [True, False, True, False])
    assert point_in_polygon((0.5, 0.5), SQUARE)


def test_winding_number_double_wound_loop():
    angles = np.linspace(0, 4 * np.pi, 400, endpoint=False)
    loop = np.column_stack([np.cos(angles), np.sin(angles)])
    assert winding_number((0.0, 0.0), loop) == 2


def test_scene_validation():
    with pytest.raises(ValueError, match="sigma"):
        VortexScene(core_loop=SQUARE, atoms=np.zeros((0, 2)), sigma=2)
    with pytest.raises(ValueError):
        VortexScene(core_loop=SQUARE, atoms=np.zeros((3, 3)), sigma=1)
    with pytest.raises(ValueError):
        VortexScene(core_loop=SQUARE, atoms=np.zeros((0, 2)), sigma=1, density=-1.0)
    with pytest.raises(ValueError, match="core_loop"):
        scene_from_dict({"atoms": [], "sigma": 1})


def test_winding_phase_counts_enclosed_atoms():
    atoms = [[0.5, 0.5], [1.5, 1.5], [1.0, 0.3], [3.0, 3.0]]
    scene = scene_from_dict({"core_loop": SQUARE.tolist(), "atoms": atoms, "sigma": 1})
    assert winding_phase(scene) == pytest.approx(6 * np.pi)
    flipped = scene_from_dict({"core_loop": SQUARE.tolist(), "atoms": atoms, "sigma": -1})
    assert winding_phase(flipped) == pytest.approx(-6 * np.pi)


def test_winding_phase_empty_scene():
    scene = scene_from_dict({"core_loop": SQUARE.tolist(), "atoms": [], "sigma": 1})
    assert winding_phase(scene) == 0.0
    assert scene.atoms.shape == (0, 2)


def test_film_length_scale():
    assert film_length_scale(1.0 / (2 * np.pi)) == pytest.approx(1.0, rel=1e-14)
    # L^2 = 1/(2 pi n)
    n = 3.7
    assert film_length_scale(n) ** 2 == pytest.approx(1.0 / (2 * np.pi * n), rel=1e-14)
    with pytest.raises(ValueError):
        film_length_scale(0.0)


def test_circulation_square_loop():
    core = (1.0, 1.0)
    assert circulation_integral(core, SQUARE) == pytest.approx(2 * np.pi, rel=1e-12)
    assert circulation_integral(core, SQUARE, sigma=-1) == pytest.approx(-2 * np.pi)
    assert circulation_integral(core, SQUARE[::-1]) == pytest.approx(-2 * np.pi)
    # core outside the loop picks up no net angle
    assert circulation_integral((5.0, 5.0), SQUARE) == pytest.approx(0.0, abs=1e-12)


def test_circulation_double_wound_loop():
    angles = np.linspace(0, 4 * np.pi, 1000, endpoint=False)
    loop = np.column_stack([np.cos(angles), np.sin(angles)])
    assert circulation_integral((0.0, 0.0), loop) == pytest.approx(4 * np.pi, rel=1e-12)


def test_circulation_rejects_core_on_loop():
    with pytest.raises(ValueError, match="through the core"):
        circulation_integral((0.0, 0.0), SQUARE)


def test_circulation_matches_crossing_count():
    # two independent routes to the winding number must agree
    rng = np.random.default_rng(23)
    for _ in range(100):
        n = int(rng.integers(3, 30))
        loop = star_loop(rng, n)
        core = tuple(rng.uniform(-2.5, 2.5, size=2))
        if np.min(np.hypot(loop[:, 0] - core[0], loop[:, 1] - core[1])) < 1e-6:
            continue
        w = winding_number(core, loop)
        circ = circulation_integral(core, loop)
        assert circ == pytest.approx(2 * np.pi * w, abs=1e-9)
