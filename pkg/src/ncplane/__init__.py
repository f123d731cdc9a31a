"""Numerical toolkit for noncommutative planes.

Magnetic fields and linear friction both replace ordinary plane
coordinates with canonical pairs [X, Y] = i L^2.  This package provides
the finite operator algebra, the two equivalent interference-phase routes
(enclosed area vs. action difference), the Landau level stack with its
flux quantization, the doubled-coordinate dissipative dynamics with its
hyperbolic canonical flow, and winding-number phase counting for a point
vortex in a thin film.
"""

from .operator_core import (
    CommutatorReport,
    NcParams,
    build_ladder,
    build_xy,
    commutator,
    commutator_table,
    distance_spectrum,
    hermiticity_defect,
    require_dim,
)
from .phase_geometry import (
    action_integral,
    as_path,
    interference_phase_action,
    interference_phase_area,
    loop_action_phase,
    signed_area,
    to_phase_space,
)
from .landau import (
    MagneticParams,
    aharonov_bohm_phase,
    cyclotron_algebra,
    cyclotron_operators,
    flux_quantization,
    landau_hamiltonian,
    landau_spectrum,
    magnetic_length,
)
from .dissipative_dynamics import (
    CanonicalCoords,
    DissipativeParams,
    DivergenceError,
    Potential,
    TwoCoordState,
    bohr_frequencies,
    canonical_coords,
    canonical_momenta,
    doubled_operators,
    eom_rhs,
    evolve_density,
    friction_hamiltonian,
    hamiltonian_value,
    hyperbolic_evolve,
    integrate_trajectory,
    kappa_commutator_check,
    orbit_invariant,
    trajectory_to_array,
    transmission_coefficient,
    validate_density_matrix,
)
from .vortex_film import (
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

__version__ = "0.1.0"

__all__ = [
    "CommutatorReport",
    "NcParams",
    "build_ladder",
    "build_xy",
    "commutator",
    "commutator_table",
    "distance_spectrum",
    "hermiticity_defect",
    "require_dim",
    "action_integral",
    "as_path",
    "interference_phase_action",
    "interference_phase_area",
    "loop_action_phase",
    "signed_area",
    "to_phase_space",
    "MagneticParams",
    "aharonov_bohm_phase",
    "cyclotron_algebra",
    "cyclotron_operators",
    "flux_quantization",
    "landau_hamiltonian",
    "landau_spectrum",
    "magnetic_length",
    "CanonicalCoords",
    "DissipativeParams",
    "DivergenceError",
    "Potential",
    "TwoCoordState",
    "bohr_frequencies",
    "canonical_coords",
    "canonical_momenta",
    "doubled_operators",
    "eom_rhs",
    "evolve_density",
    "friction_hamiltonian",
    "hamiltonian_value",
    "hyperbolic_evolve",
    "integrate_trajectory",
    "kappa_commutator_check",
    "orbit_invariant",
    "trajectory_to_array",
    "transmission_coefficient",
    "validate_density_matrix",
    "VortexScene",
    "circulation_integral",
    "film_length_scale",
    "point_in_polygon",
    "points_in_polygon",
    "scene_from_dict",
    "winding_number",
    "winding_numbers",
    "winding_phase",
    "__version__",
]
