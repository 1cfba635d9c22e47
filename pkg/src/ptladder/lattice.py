"""Two-leg tight-binding ladders with balanced gain and loss.

A lattice is a chain of N unit cells, each holding one site on the upper
leg (gain, on-site ``+delta/2 + i*gamma/2``) and one on the lower leg
(loss, on-site ``-delta/2 - i*gamma/2``).  Legs are coupled inside a cell
by the rung hopping ``-intra_hop`` and between neighbouring cells by the
leg hopping ``-inter_hop``.  Four boundary closures are supported: a
circular ring, a Moebius ring (the closing bond pair is crossed), an open
ladder, and an open ladder with one crossed bond pair in the middle.

All Hamiltonians produced here are complex symmetric (``M == M.T``
exactly) and, for ``delta == 0``, PT-symmetric with parity acting as the
leg swap in every cell and time reversal as complex conjugation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

__all__ = [
    "BoundaryTopology",
    "LatticeSpec",
    "UnitCellBlocks",
    "BlochPoint",
    "unit_cell_blocks",
    "bloch_point",
    "build_bloch_hamiltonian",
    "bloch_eigenvalues",
    "build_real_space_hamiltonian",
    "analytic_cll_spectrum",
    "analytic_mll_spectrum",
]


class BoundaryTopology(Enum):
    """Boundary closure of the ladder."""

    CIRCULAR = "circular"
    MOEBIUS = "moebius"
    OPEN = "open"
    TWISTED_OPEN = "twisted"

    @classmethod
    def from_name(cls, name: str) -> "BoundaryTopology":
        for member in cls:
            if member.value == name:
                return member
        known = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown topology {name!r} (expected one of: {known})")


_RING_TOPOLOGIES = (BoundaryTopology.CIRCULAR, BoundaryTopology.MOEBIUS)
_EVEN_N_TOPOLOGIES = (BoundaryTopology.MOEBIUS, BoundaryTopology.TWISTED_OPEN)


@dataclass(frozen=True)
class LatticeSpec:
    """Immutable description of one ladder lattice.

    Parameters
    ----------
    n_cells : int
        Number of unit cells N (two sites per cell).  Open ladders allow
        N >= 1, rings need N >= 2, and the Moebius and twisted
        topologies need an even N so the crossed bond pair sits at a
        well defined position.
    intra_hop : float
        Rung hopping amplitude d (matrix element is ``-d``).
    inter_hop : float
        Leg hopping amplitude t (matrix element is ``-t``).
    delta : float
        Real on-site detuning; upper leg gets ``+delta/2``.
    gamma : float
        Gain/loss rate; upper leg gets ``+i*gamma/2``, lower ``-i*gamma/2``.
    topology : BoundaryTopology
        Boundary closure.
    """

    n_cells: int
    intra_hop: float = 1.0
    inter_hop: float = 1.0
    delta: float = 0.0
    gamma: float = 0.0
    topology: BoundaryTopology = BoundaryTopology.CIRCULAR

    def __post_init__(self) -> None:
        floor = 1 if self.topology is BoundaryTopology.OPEN else 2
        if int(self.n_cells) != self.n_cells or self.n_cells < floor:
            raise ValueError(
                f"n_cells must be an integer >= {floor} for a "
                f"{self.topology.value} lattice, got {self.n_cells}"
            )
        if self.topology in _EVEN_N_TOPOLOGIES and self.n_cells % 2 != 0:
            raise ValueError(
                f"{self.topology.value} topology needs an even cell count, got {self.n_cells}"
            )

    @property
    def n_sites(self) -> int:
        return 2 * self.n_cells

    @property
    def onsite_upper(self) -> complex:
        return 0.5 * self.delta + 0.5j * self.gamma

    @property
    def onsite_lower(self) -> complex:
        return -0.5 * self.delta - 0.5j * self.gamma

    def with_gamma(self, gamma: float) -> "LatticeSpec":
        """Copy of this spec at a different gain/loss rate."""
        return replace(self, gamma=float(gamma))

    def with_topology(self, topology: BoundaryTopology) -> "LatticeSpec":
        return replace(self, topology=topology)


@dataclass(frozen=True)
class UnitCellBlocks:
    """2x2 blocks of the real-space Hamiltonian in the cell basis (a_n, b_n).

    ``h0`` is the on-cell block, ``h1`` the parallel inter-cell block and
    ``h1_twist`` the crossed inter-cell block used at Moebius closures and
    at the twisted bond.  All three are complex symmetric.
    """

    h0: np.ndarray
    h1: np.ndarray
    h1_twist: np.ndarray


def unit_cell_blocks(spec: LatticeSpec) -> UnitCellBlocks:
    d = spec.intra_hop
    t = spec.inter_hop
    h0 = np.array(
        [[spec.onsite_upper, -d], [-d, spec.onsite_lower]], dtype=complex
    )
    h1 = np.array([[-t, 0.0], [0.0, -t]], dtype=complex)
    h1_twist = np.array([[0.0, -t], [-t, 0.0]], dtype=complex)
    return UnitCellBlocks(h0=h0, h1=h1, h1_twist=h1_twist)


@dataclass(frozen=True)
class BlochPoint:
    """Momentum-space sample of the translation invariant (circular) ladder.

    ``h_vec`` holds the (sigma_x, sigma_z) components ``(-d, delta/2 + i*gamma/2)``
    and ``h0_scalar`` the identity component ``-2*t*cos(k)``.  The factor 2
    keeps the scalar part consistent with the dispersion produced by the
    real-space hopping, where each cell touches two neighbours.
    """

    k: float
    h_vec: tuple[complex, complex]
    h0_scalar: complex


def bloch_point(spec: LatticeSpec, k: float) -> BlochPoint:
    return BlochPoint(
        k=float(k),
        h_vec=(-spec.intra_hop, spec.onsite_upper),
        h0_scalar=-2.0 * spec.inter_hop * math.cos(k),
    )


def build_bloch_hamiltonian(spec: LatticeSpec, k: float) -> np.ndarray:
    """2x2 Bloch Hamiltonian of the circular ladder at momentum ``k``."""
    pt = bloch_point(spec, k)
    hx, hz = pt.h_vec
    return np.array(
        [[pt.h0_scalar + hz, hx], [hx, pt.h0_scalar - hz]], dtype=complex
    )


def bloch_eigenvalues(spec: LatticeSpec, k: float) -> tuple[complex, complex]:
    """Closed-form Bloch eigenvalue pair (plus branch first).

    Returns ``-2*t*cos(k) +/- sqrt(d**2 + ((delta + i*gamma)/2)**2)`` using
    the principal square root.
    """
    base = -2.0 * spec.inter_hop * math.cos(k)
    root = cmath.sqrt(
        spec.intra_hop**2 + (0.5 * (spec.delta + 1j * spec.gamma)) ** 2
    )
    return (base + root, base - root)


def build_real_space_hamiltonian(spec: LatticeSpec) -> np.ndarray:
    """Dense 2N x 2N Hamiltonian in the cell-major site basis.

    Site ordering is (a_1, b_1, a_2, b_2, ..., a_N, b_N).  Bond blocks are
    accumulated additively, so the N = 2 ring correctly carries a doubled
    inter-cell bond (the neighbour on the left is also the neighbour on
    the right).
    """
    blocks = unit_cell_blocks(spec)
    n = spec.n_cells
    ham = np.zeros((2 * n, 2 * n), dtype=complex)

    for c in range(n):
        ham[2 * c : 2 * c + 2, 2 * c : 2 * c + 2] = blocks.h0

    twist_bond = n // 2 - 1  # bond between cells N/2 and N/2 + 1 (0-based)
    for c in range(n - 1):
        hop = blocks.h1
        if spec.topology is BoundaryTopology.TWISTED_OPEN and c == twist_bond:
            hop = blocks.h1_twist
        ham[2 * c : 2 * c + 2, 2 * c + 2 : 2 * c + 4] += hop
        ham[2 * c + 2 : 2 * c + 4, 2 * c : 2 * c + 2] += hop.T

    if spec.topology in _RING_TOPOLOGIES:
        closing = (
            blocks.h1
            if spec.topology is BoundaryTopology.CIRCULAR
            else blocks.h1_twist
        )
        ham[2 * (n - 1) : 2 * n, 0:2] += closing
        ham[0:2, 2 * (n - 1) : 2 * n] += closing.T

    return ham


def analytic_cll_spectrum(spec: LatticeSpec) -> list[tuple[complex, str]]:
    """Closed-form circular-ladder spectrum with branch parity labels.

    Yields ``-2*t*cos(2*pi*n/N) +/- sqrt(d**2 + ((delta + i*gamma)/2)**2)``
    for n = 1..N.  The plus branch is labelled ``"odd"`` (leg-antisymmetric
    at gamma = delta = 0) and the minus branch ``"even"``.  The labels
    describe exact cell parity only in the Hermitian limit; away from it
    they tag the square-root branch.
    """
    if spec.topology is not BoundaryTopology.CIRCULAR:
        raise ValueError("closed-form circular spectrum needs circular topology")
    root = cmath.sqrt(
        spec.intra_hop**2 + (0.5 * (spec.delta + 1j * spec.gamma)) ** 2
    )
    out: list[tuple[complex, str]] = []
    for n in range(1, spec.n_cells + 1):
        base = -2.0 * spec.inter_hop * math.cos(2.0 * math.pi * n / spec.n_cells)
        out.append((base + root, "odd"))
        out.append((base - root, "even"))
    return out


def analytic_mll_spectrum(spec: LatticeSpec) -> list[tuple[complex, str]]:
    """Closed-form Moebius-ladder spectrum, valid only at gamma = delta = 0.

    Even-parity levels sit at ``-2*t*cos(2*pi*n/N) - d`` and odd-parity
    levels at ``-2*t*cos((2*n - 1)*pi/N) + d`` for n = 1..N; the crossed
    closure shifts the odd sector onto the half-integer momentum grid.
    """
    if spec.topology is not BoundaryTopology.MOEBIUS:
        raise ValueError("closed-form Moebius spectrum needs moebius topology")
    if spec.gamma != 0.0 or spec.delta != 0.0:
        raise ValueError(
            "closed-form Moebius spectrum is only valid at gamma = delta = 0"
        )
    d = spec.intra_hop
    t = spec.inter_hop
    n_cells = spec.n_cells
    out: list[tuple[complex, str]] = []
    for n in range(1, n_cells + 1):
        even = -2.0 * t * math.cos(2.0 * math.pi * n / n_cells) - d
        odd = -2.0 * t * math.cos((2.0 * n - 1.0) * math.pi / n_cells) + d
        out.append((complex(even), "even"))
        out.append((complex(odd), "odd"))
    return out
