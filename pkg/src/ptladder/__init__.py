"""Non-Hermitian tight-binding ladders with balanced gain and loss.

The package builds two-leg ladder lattices whose legs carry opposite
imaginary on-site potentials, closes them into rings with either parallel
or crossed bonds, and provides eigenspectrum sweeps, exceptional-point
searches, a complex-rotation diagonalization of the two-component cell
space, and two-terminal scattering transport.
"""

from .lattice import (
    BlochPoint,
    BoundaryTopology,
    LatticeSpec,
    UnitCellBlocks,
    analytic_cll_spectrum,
    analytic_mll_spectrum,
    bloch_eigenvalues,
    bloch_point,
    build_bloch_hamiltonian,
    build_real_space_hamiltonian,
    unit_cell_blocks,
)
from .spectral import (
    BrokenWindow,
    EigensolverError,
    EpKind,
    ExceptionalPoint,
    NearDegeneracy,
    Phase,
    PhaseLabel,
    PhaseReport,
    Spectrum,
    SweepResult,
    broken_windows,
    classify_pt_phase,
    eigendecompose,
    locate_exceptional_points,
    locate_zero_energy_eps,
    sweep_matrix_family,
    sweep_spectrum,
)
from .rotation import (
    DetangledChainPair,
    ModeWeights,
    RotationAngle,
    SingularAngleError,
    complex_rotation_angle,
    detangle_transform,
    diagonalize_by_rotation,
    mode_weights,
    open_chain_spectrum,
    rotation_matrix,
)
from .transport import (
    DetangleTransportReport,
    LeadSpec,
    OutOfBandError,
    ScatteringResult,
    ScatteringSystem,
    SingularSystemError,
    TransmissionMap,
    assemble_scattering_system,
    detangled_transport_check,
    find_trace_peaks,
    lead_momentum,
    solve_scattering,
    transmission_map,
    zero_energy_trace,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BlochPoint",
    "BoundaryTopology",
    "LatticeSpec",
    "UnitCellBlocks",
    "analytic_cll_spectrum",
    "analytic_mll_spectrum",
    "bloch_eigenvalues",
    "bloch_point",
    "build_bloch_hamiltonian",
    "build_real_space_hamiltonian",
    "unit_cell_blocks",
    "BrokenWindow",
    "EigensolverError",
    "EpKind",
    "ExceptionalPoint",
    "NearDegeneracy",
    "Phase",
    "PhaseLabel",
    "PhaseReport",
    "Spectrum",
    "SweepResult",
    "broken_windows",
    "classify_pt_phase",
    "eigendecompose",
    "locate_exceptional_points",
    "locate_zero_energy_eps",
    "sweep_matrix_family",
    "sweep_spectrum",
    "DetangledChainPair",
    "ModeWeights",
    "RotationAngle",
    "SingularAngleError",
    "complex_rotation_angle",
    "detangle_transform",
    "diagonalize_by_rotation",
    "mode_weights",
    "open_chain_spectrum",
    "rotation_matrix",
    "DetangleTransportReport",
    "LeadSpec",
    "OutOfBandError",
    "ScatteringResult",
    "ScatteringSystem",
    "SingularSystemError",
    "TransmissionMap",
    "assemble_scattering_system",
    "detangled_transport_check",
    "find_trace_peaks",
    "lead_momentum",
    "solve_scattering",
    "transmission_map",
    "zero_energy_trace",
]
