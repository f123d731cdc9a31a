"""Landau levels of a charge on a plane threaded by a uniform field.

The field B turns the kinematic momenta into a canonical pair with
commutator scale L^2 = hbar c / (e B), and independently turns the orbit
centers into a second pair with the opposite sign, [X, Y] = -i L^2.  The
two pairs commute with each other, which is why the level spectrum is an
oscillator ladder E_n = hbar omega_c (n + 1/2) while the center
coordinates are frozen.  Orbit areas pi L^2 (2n + 1) then step the
enclosed flux by exactly one flux quantum per level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operator_core import CommutatorReport, build_ladder, commutator_table, require_dim
from .phase_geometry import signed_area

__all__ = [
    "MagneticParams",
    "magnetic_length",
    "landau_spectrum",
    "landau_hamiltonian",
    "cyclotron_operators",
    "cyclotron_algebra",
    "flux_quantization",
    "aharonov_bohm_phase",
]


@dataclass(frozen=True)
class MagneticParams:
    """Field strength and particle constants, all strictly positive."""

    B: float
    e: float = 1.0
    c: float = 1.0
    M: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("B", "e", "c", "M", "hbar"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")

    @property
    def omega_c(self) -> float:
        """Cyclotron frequency e B / (M c)."""
        return self.e * self.B / (self.M * self.c)

    @property
    def L2(self) -> float:
        """Squared magnetic length hbar c / (e B)."""
        return self.hbar * self.c / (self.e * self.B)

    @property
    def flux_quantum(self) -> float:
        """2 pi hbar c / e."""
        return 2.0 * math.pi * self.hbar * self.c / self.e


def magnetic_length(params: MagneticParams) -> float:
    """sqrt(hbar c / (e B)), the field-induced length scale."""
    return math.sqrt(params.L2)


def landau_spectrum(params: MagneticParams, n_max: int) -> np.ndarray:
    """Level energies hbar omega_c (n + 1/2) for n = 0 .. n_max."""
    if not isinstance(n_max, (int, np.integer)) or n_max < 0:
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max}")
    n = np.arange(n_max + 1, dtype=float)
    return params.hbar * params.omega_c * (n + 0.5)


def landau_hamiltonian(params: MagneticParams, dim: int) -> np.ndarray:
    """Finite representation of H = (M/2) omega_c^2 (rho_x^2 + rho_y^2).

    Built on a single truncated ladder for the kinematic pair.  The leading
    dim-1 eigenvalues reproduce landau_spectrum; the top level is polluted
    by the truncation and should be discarded.
    """
    dim = require_dim(dim)
    z, zdag = build_ladder(dim)
    ell = magnetic_length(params)
    rho_x = ell / math.sqrt(2.0) * (z + zdag)
    rho_y = -1j * ell / math.sqrt(2.0) * (z - zdag)
    pref = 0.5 * params.M * params.omega_c ** 2
    return pref * (rho_x @ rho_x + rho_y @ rho_y)


def cyclotron_operators(params: MagneticParams, dim: int) -> dict[str, np.ndarray]:
    """Kinematic and orbit-center pairs on a dim x dim tensor space.

    The kinematic pair (rho_x, rho_y) acts on the first ladder factor with
    [rho_x, rho_y] = +i L^2; the center pair (center_x, center_y) acts on
    the second factor with [center_x, center_y] = -i L^2.  Operators from
    different factors commute exactly, no truncation caveat.
    """
    dim = require_dim(dim)
    z, zdag = build_ladder(dim)
    eye = np.eye(dim)
    ell = magnetic_length(params)
    plus = ell / math.sqrt(2.0) * (z + zdag)
    minus = -1j * ell / math.sqrt(2.0) * (z - zdag)
    return {
        "rho_x": np.kron(plus, eye),
        "rho_y": np.kron(minus, eye),
        "center_x": np.kron(eye, plus),
        "center_y": np.kron(eye, -minus),
    }


def cyclotron_algebra(params: MagneticParams, dim: int) -> CommutatorReport:
    """Pairwise bracket table for (rho_x, rho_y, center_x, center_y).

    Expected clean-block values: [rho_x, rho_y] = i L^2,
    [center_x, center_y] = -i L^2, all cross-factor brackets zero.
    Requires dim >= 3 so the clean block is big enough to certify
    constancy.
    """
    dim = require_dim(dim, minimum=3)
    ops = cyclotron_operators(params, dim)
    level_a = np.arange(dim * dim) // dim
    level_b = np.arange(dim * dim) % dim
    mask_a = level_a < dim - 1
    mask_b = level_b < dim - 1
    entries = [
        ("rho_x", ops["rho_x"], mask_a),
        ("rho_y", ops["rho_y"], mask_a),
        ("center_x", ops["center_x"], mask_b),
        ("center_y", ops["center_y"], mask_b),
    ]
    return commutator_table(entries, dim)


def flux_quantization(params: MagneticParams, n_max: int) -> list[tuple[float, float]]:
    """Orbit areas and flux steps for levels n = 0 .. n_max - 1.

    Returns n_max pairs (A_n, dPhi_n) with A_n = pi L^2 (2n + 1) and
    dPhi_n = B (A_{n+1} - A_n), the flux gained climbing from level n to
    n + 1.  Every step equals the flux quantum.
    """
    if not isinstance(n_max, (int, np.integer)) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    n = np.arange(n_max + 1, dtype=float)
    areas = math.pi * params.L2 * (2.0 * n + 1.0)
    steps = params.B * np.diff(areas)
    return [(float(areas[k]), float(steps[k])) for k in range(n_max)]


def aharonov_bohm_phase(params: MagneticParams, loop) -> float:
    """e Phi / (hbar c) for the flux Phi = B * signed_area(loop).

    Identical to the geometric interference phase area / L^2; the loop's
    orientation carries through as the sign.
    """
    flux = params.B * signed_area(loop)
    return params.e * flux / (params.hbar * params.c)
