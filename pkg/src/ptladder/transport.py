"""Two-terminal scattering through open PT ladders.

Semi-infinite one-band leads (hopping ``-v0/2``, so the band is
``|E| < v0``) contact the first and last unit cell on both legs.  For a
unit-amplitude wave incident from the left, eliminating the leads leaves
a bordered block-tridiagonal system of size 2N + 2 in the unknowns
``(r, psi_1, ..., psi_N, t)``:

    [ v0/2        G_in^T                                ] [r]    [-v0/2        ]
    [ e^{iq} G_in  H0-E   H1                            ] [psi1] [-e^{-iq} G_in]
    [              H1^T   H0-E  H1                      ] [... ] [0            ]
    [                     ...                           ]        [...          ]
    [                     H1^T  H0-E   e^{iq} G_out     ] [psiN] [0            ]
    [                           G_out^T  v0/2           ] [t]    [0            ]

with ``G = (-coupling_upper, -coupling_lower)^T`` and the lead momentum
``e^{+iq} = -E/v0 + i sqrt(1 - (E/v0)^2)``.  The twisted topology swaps
the bond between cells N/2 and N/2 + 1 for its crossed version.

The production solver is a 2x2 block Thomas elimination with the two
border unknowns folded into enlarged first and last blocks; a pivot
whose 1-norm condition estimate exceeds 1e12 triggers a dense
partial-pivoting fallback, and every solution is residual-checked.  A
lane-vectorised variant of the same elimination powers transmission
maps, re-solving flagged lanes through the scalar path.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .lattice import BoundaryTopology, LatticeSpec, unit_cell_blocks

__all__ = [
    "OutOfBandError",
    "SingularSystemError",
    "LeadSpec",
    "ScatteringSystem",
    "ScatteringResult",
    "TransmissionMap",
    "DetangleTransportReport",
    "lead_momentum",
    "assemble_scattering_system",
    "solve_scattering",
    "transmission_map",
    "zero_energy_trace",
    "find_trace_peaks",
    "detangled_transport_check",
]

COND_LIMIT = 1e12
RESIDUAL_TOL = 1e-9

_OPEN_TOPOLOGIES = (BoundaryTopology.OPEN, BoundaryTopology.TWISTED_OPEN)


class OutOfBandError(ValueError):
    """Requested energy lies outside the open lead band."""


class SingularSystemError(RuntimeError):
    """Scattering system could not be solved to the residual bound."""


@dataclass(frozen=True)
class LeadSpec:
    """Lead band and contact couplings.

    ``v0`` sets the lead half-bandwidth (lead hopping is ``-v0/2``).
    The four couplings attach (upper, lower) legs of the first cell to
    the input lead and of the last cell to the output lead.
    """

    v0: float = 10.0
    upper_in: float = 1.0
    lower_in: float = 1.0
    upper_out: float = 1.0
    lower_out: float = 1.0

    def __post_init__(self) -> None:
        if self.v0 <= 0:
            raise ValueError(f"v0 must be positive, got {self.v0}")

    @property
    def g_in(self) -> np.ndarray:
        return np.array([-self.upper_in, -self.lower_in], dtype=complex)

    @property
    def g_out(self) -> np.ndarray:
        return np.array([-self.upper_out, -self.lower_out], dtype=complex)

    @property
    def symmetric(self) -> bool:
        return self.upper_in == self.lower_in == self.upper_out == self.lower_out != 0.0

    def swapped(self) -> "LeadSpec":
        """Input and output contacts interchanged."""
        return LeadSpec(
            v0=self.v0,
            upper_in=self.upper_out,
            lower_in=self.lower_out,
            upper_out=self.upper_in,
            lower_out=self.lower_in,
        )


def lead_momentum(energy: float, v0: float) -> tuple[complex, complex]:
    """Propagating lead phases ``(e^{+iq}, e^{-iq})`` at energy ``energy``.

    Requires ``|energy| < v0``; the imaginary part of ``e^{+iq}`` is
    positive, selecting the right-moving wave.
    """
    if v0 <= 0:
        raise ValueError(f"v0 must be positive, got {v0}")
    x = energy / v0
    if abs(x) >= 1.0:
        raise OutOfBandError(
            f"energy {energy} outside the open lead band (|E| < {v0})"
        )
    s = math.sqrt(1.0 - x * x)
    return complex(-x, s), complex(-x, -s)


@dataclass
class ScatteringSystem:
    """Assembled bordered linear system for one (lattice, leads, E)."""

    matrix: np.ndarray
    rhs: np.ndarray
    energy: float
    momentum: complex  # e^{+iq}
    n_cells: int

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def _bond_blocks(spec: LatticeSpec) -> list[np.ndarray]:
    """Inter-cell hop block for each of the N - 1 bonds (all symmetric)."""
    blocks = unit_cell_blocks(spec)
    hops = [blocks.h1] * (spec.n_cells - 1)
    if spec.topology is BoundaryTopology.TWISTED_OPEN:
        hops[spec.n_cells // 2 - 1] = blocks.h1_twist
    return hops


def _check_transport_spec(spec: LatticeSpec) -> None:
    if spec.topology not in _OPEN_TOPOLOGIES:
        raise ValueError(
            f"transport needs an open or twisted topology, got {spec.topology.value}"
        )


def assemble_scattering_system(
    spec: LatticeSpec, leads: LeadSpec, energy: float
) -> ScatteringSystem:
    """Build the dense bordered system for one energy."""
    _check_transport_spec(spec)
    eiq, emiq = lead_momentum(energy, leads.v0)
    blocks = unit_cell_blocks(spec)
    hops = _bond_blocks(spec)
    n = spec.n_cells
    dim = 2 * n + 2
    h0e = blocks.h0 - energy * np.eye(2)

    a = np.zeros((dim, dim), dtype=complex)
    b = np.zeros(dim, dtype=complex)

    a[0, 0] = 0.5 * leads.v0
    a[0, 1:3] = leads.g_in
    b[0] = -0.5 * leads.v0

    for c in range(n):
        lo = 1 + 2 * c
        a[lo : lo + 2, lo : lo + 2] = h0e
        if c > 0:
            a[lo : lo + 2, lo - 2 : lo] = hops[c - 1].T
        if c < n - 1:
            a[lo : lo + 2, lo + 2 : lo + 4] = hops[c]

    a[1:3, 0] = eiq * leads.g_in
    b[1:3] = -emiq * leads.g_in
    a[2 * n - 1 : 2 * n + 1, dim - 1] = eiq * leads.g_out
    a[dim - 1, 2 * n - 1 : 2 * n + 1] = leads.g_out
    a[dim - 1, dim - 1] = 0.5 * leads.v0

    return ScatteringSystem(
        matrix=a, rhs=b, energy=float(energy), momentum=eiq, n_cells=n
    )


@dataclass
class ScatteringResult:
    """Solved amplitudes and probabilities for one scattering problem."""

    r: complex
    t: complex
    internal: np.ndarray
    reflection_prob: float
    transmission_prob: float
    flux_residual: float

    @classmethod
    def from_solution(cls, x: np.ndarray) -> "ScatteringResult":
        r = complex(x[0])
        t = complex(x[-1])
        rp = abs(r) ** 2
        tp = abs(t) ** 2
        return cls(
            r=r,
            t=t,
            internal=np.array(x[1:-1], dtype=complex),
            reflection_prob=rp,
            transmission_prob=tp,
            flux_residual=1.0 - rp - tp,
        )


class _IllConditionedPivot(Exception):
    def __init__(self, block_index: int, cond: float):
        self.block_index = block_index
        self.cond = cond
        super().__init__(f"pivot block {block_index} condition estimate {cond:.3e}")


def _norm1(m: np.ndarray) -> float:
    return float(np.abs(m).sum(axis=0).max())


def _block_sizes(n_cells: int) -> list[int]:
    if n_cells == 1:
        return [4]
    return [3] + [2] * (n_cells - 2) + [3]


def _split_system(system: ScatteringSystem):
    """View the bordered matrix as a block-tridiagonal chain.

    The reflection unknown is folded into the first block and the
    transmission unknown into the last, giving block sizes
    (3, 2, ..., 2, 3).
    """
    sizes = _block_sizes(system.n_cells)
    edges = np.concatenate(([0], np.cumsum(sizes)))
    a = system.matrix
    diag = [a[edges[i] : edges[i + 1], edges[i] : edges[i + 1]] for i in range(len(sizes))]
    sup = [
        a[edges[i] : edges[i + 1], edges[i + 1] : edges[i + 2]]
        for i in range(len(sizes) - 1)
    ]
    sub = [
        a[edges[i + 1] : edges[i + 2], edges[i] : edges[i + 1]]
        for i in range(len(sizes) - 1)
    ]
    rhs = [system.rhs[edges[i] : edges[i + 1]] for i in range(len(sizes))]
    return diag, sup, sub, rhs


def _solve_block_thomas(system: ScatteringSystem) -> np.ndarray:
    diag, sup, sub, rhs = _split_system(system)
    nb = len(diag)
    carried = diag[0]
    carried_rhs = rhs[0]
    t_blocks: list[np.ndarray] = []
    g_blocks: list[np.ndarray] = []
    for i in range(nb):
        inv = _checked_inverse(carried, i)
        if i == nb - 1:
            g_blocks.append(inv @ carried_rhs)
            break
        t_i = inv @ sup[i]
        g_i = inv @ carried_rhs
        t_blocks.append(t_i)
        g_blocks.append(g_i)
        carried = diag[i + 1] - sub[i] @ t_i
        carried_rhs = rhs[i + 1] - sub[i] @ g_i

    x_blocks = [None] * nb
    x_blocks[nb - 1] = g_blocks[nb - 1]
    for i in range(nb - 2, -1, -1):
        x_blocks[i] = g_blocks[i] - t_blocks[i] @ x_blocks[i + 1]
    return np.concatenate(x_blocks)


def _checked_inverse(block: np.ndarray, index: int) -> np.ndarray:
    try:
        inv = np.linalg.inv(block)
    except np.linalg.LinAlgError as exc:
        raise _IllConditionedPivot(index, math.inf) from exc
    cond = _norm1(block) * _norm1(inv)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise _IllConditionedPivot(index, cond)
    return inv


def _solve_dense(system: ScatteringSystem) -> np.ndarray:
    try:
        x = np.linalg.solve(system.matrix, system.rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(
            f"dense fallback failed at E = {system.energy:.9g}: {exc}"
        ) from exc
    return x


def _residual_ok(system: ScatteringSystem, x: np.ndarray) -> bool:
    resid = np.linalg.norm(system.matrix @ x - system.rhs)
    return resid <= RESIDUAL_TOL * np.linalg.norm(system.rhs)


def solve_scattering(system: ScatteringSystem, method: str = "auto") -> ScatteringResult:
    """Solve the bordered system.

    ``method`` is "auto" (block Thomas, dense on ill-conditioned pivot),
    "banded" (block Thomas, fail instead of falling back) or "dense".
    """
    if method not in ("auto", "banded", "dense"):
        raise ValueError(f"unknown method {method!r}")

    x = None
    pivot_note = ""
    if method in ("auto", "banded") and system.n_cells >= 2:
        try:
            x = _solve_block_thomas(system)
            if not _residual_ok(system, x):
                x = None
                pivot_note = "banded residual above bound"
        except _IllConditionedPivot as exc:
            if method == "banded":
                raise SingularSystemError(
                    f"banded elimination hit an ill-conditioned pivot "
                    f"(block {exc.block_index}, cond {exc.cond:.3e}) at "
                    f"E = {system.energy:.9g}"
                ) from exc
            x = None
            pivot_note = str(exc)
    if x is None:
        if method == "banded":
            raise SingularSystemError(
                f"banded solve failed ({pivot_note}) at E = {system.energy:.9g}"
            )
        x = _solve_dense(system)
        if not _residual_ok(system, x):
            raise SingularSystemError(
                f"residual above {RESIDUAL_TOL:.0e}*||b|| even after dense "
                f"fallback at E = {system.energy:.9g} ({pivot_note or 'direct dense'})"
            )
    return ScatteringResult.from_solution(x)


# ---------------------------------------------------------------------------
# Lane-vectorised elimination: one gamma column, many energies at once.


def _batch_norm1(blocks: np.ndarray) -> np.ndarray:
    return np.abs(blocks).sum(axis=1).max(axis=1)


def _batch_inverse(blocks: np.ndarray, bad: np.ndarray) -> np.ndarray:
    size = blocks.shape[-1]
    dets = np.linalg.det(blocks)
    singular = ~np.isfinite(dets) | (np.abs(dets) < 1e-300)
    bad |= singular
    safe = np.where(bad[:, None, None], np.eye(size, dtype=complex), blocks)
    inv = np.linalg.inv(safe)
    cond = _batch_norm1(blocks) * _batch_norm1(inv)
    bad |= ~np.isfinite(cond) | (cond > COND_LIMIT)
    return inv


def _batch_rt(
    spec: LatticeSpec, leads: LeadSpec, energies: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(r, t, bad_lane) for every energy at fixed gamma.

    Energies outside the lead band are flagged immediately; flagged
    lanes carry unusable values and must be recomputed (or marked NaN)
    by the caller.
    """
    _check_transport_spec(spec)
    energies = np.asarray(energies, dtype=float)
    lanes = energies.size
    blocks = unit_cell_blocks(spec)
    hops = _bond_blocks(spec)
    n = spec.n_cells
    v0 = leads.v0

    x = energies / v0
    inside = np.abs(x) < 1.0
    bad = ~inside
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    eiq = np.where(inside, -x + 1j * s, 1.0 + 0j)
    emiq = np.conj(eiq)

    eye2 = np.eye(2, dtype=complex)
    h0e = blocks.h0[None, :, :] - energies[:, None, None] * eye2[None, :, :]

    if n == 1:
        # Single 4x4 bordered block, solved densely lane by lane.
        r = np.zeros(lanes, dtype=complex)
        t = np.zeros(lanes, dtype=complex)
        for j, e in enumerate(energies):
            if bad[j]:
                continue
            try:
                res = solve_scattering(assemble_scattering_system(spec, leads, e))
                r[j], t[j] = res.r, res.t
            except (OutOfBandError, SingularSystemError):
                bad[j] = True
        return r, t, bad

    # First block: unknowns (r, a_1, b_1).
    d0 = np.zeros((lanes, 3, 3), dtype=complex)
    d0[:, 0, 0] = 0.5 * v0
    d0[:, 0, 1:3] = leads.g_in
    d0[:, 1:3, 0] = eiq[:, None] * leads.g_in
    d0[:, 1:3, 1:3] = h0e
    rhs0 = np.zeros((lanes, 3), dtype=complex)
    rhs0[:, 0] = -0.5 * v0
    rhs0[:, 1:3] = -emiq[:, None] * leads.g_in

    # Last block: unknowns (a_N, b_N, t).
    dlast = np.zeros((lanes, 3, 3), dtype=complex)
    dlast[:, 0:2, 0:2] = h0e
    dlast[:, 0:2, 2] = eiq[:, None] * leads.g_out
    dlast[:, 2, 0:2] = leads.g_out
    dlast[:, 2, 2] = 0.5 * v0

    def sup_block(i: int) -> np.ndarray:
        # Coupling of block i into block i + 1 (lane-independent).
        hop = hops[i]
        rows = 3 if i == 0 else 2
        cols = 3 if i == n - 2 else 2
        m = np.zeros((rows, cols), dtype=complex)
        m[rows - 2 :, :2] = hop
        return m

    def sub_block(i: int) -> np.ndarray:
        # Coupling of block i + 1 back into block i.
        hop = hops[i].T
        rows = 3 if i == n - 2 else 2
        cols = 3 if i == 0 else 2
        m = np.zeros((rows, cols), dtype=complex)
        m[:2, cols - 2 :] = hop
        return m

    carried = d0
    carried_rhs = rhs0
    t_list: list[np.ndarray] = []
    g_list: list[np.ndarray] = []
    for i in range(n - 1):
        inv = _batch_inverse(carried, bad)
        sup = sup_block(i)
        t_i = inv @ sup[None, :, :]
        g_i = (inv @ carried_rhs[:, :, None])[:, :, 0]
        t_list.append(t_i)
        g_list.append(g_i)
        nxt = dlast if i == n - 2 else h0e
        sub = sub_block(i)
        carried = nxt - sub[None, :, :] @ t_i
        # rhs blocks after the first are all zero.
        carried_rhs = -(sub[None, :, :] @ g_i[:, :, None])[:, :, 0]

    inv = _batch_inverse(carried, bad)
    x_last = (inv @ carried_rhs[:, :, None])[:, :, 0]
    x_next = x_last
    for i in range(n - 2, -1, -1):
        x_i = g_list[i] - (t_list[i] @ x_next[:, :, None])[:, :, 0]
        x_next = x_i
    x_first = x_next

    r = x_first[:, 0]
    t = x_last[:, 2]
    bad |= ~np.isfinite(r) | ~np.isfinite(t)
    return r, t, bad


@dataclass
class TransmissionMap:
    """Transmission and reflection probabilities on an (E, gamma) grid.

    ``t_values[i, j]`` is ``|t|^2`` at ``(e_grid[i], gamma_grid[j])``;
    failed cells are quiet NaN and counted in ``n_failed``.
    """

    e_grid: np.ndarray
    gamma_grid: np.ndarray
    t_values: np.ndarray
    r_values: np.ndarray
    n_failed: int = 0


def _map_column(args) -> tuple[int, np.ndarray, np.ndarray, int]:
    spec, leads, energies, j, gamma = args
    spec_g = spec.with_gamma(gamma)
    r, t, bad = _batch_rt(spec_g, leads, energies)
    t_col = np.abs(t) ** 2
    r_col = np.abs(r) ** 2
    failed = 0
    for lane in np.nonzero(bad)[0]:
        e = float(energies[lane])
        try:
            res = solve_scattering(assemble_scattering_system(spec_g, leads, e))
            t_col[lane] = res.transmission_prob
            r_col[lane] = res.reflection_prob
        except (OutOfBandError, SingularSystemError, ValueError):
            t_col[lane] = np.nan
            r_col[lane] = np.nan
            failed += 1
    return j, t_col, r_col, failed


def transmission_map(
    spec: LatticeSpec,
    leads: LeadSpec,
    e_grid,
    gamma_grid,
    *,
    workers: int = 1,
) -> TransmissionMap:
    """Probability maps over an energy/gamma grid.

    Per-point solver failures become NaN cells and are counted; they do
    not abort the map.  The result is deterministic and independent of
    ``workers``.
    """
    _check_transport_spec(spec)
    energies = np.asarray(list(e_grid), dtype=float)
    gammas = np.asarray(list(gamma_grid), dtype=float)
    if energies.size == 0 or gammas.size == 0:
        raise ValueError("transmission map needs non-empty energy and gamma grids")

    t_values = np.empty((energies.size, gammas.size))
    r_values = np.empty((energies.size, gammas.size))
    jobs = [(spec, leads, energies, j, g) for j, g in enumerate(gammas)]
    n_failed = 0
    if workers > 1 and gammas.size > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_map_column, jobs, chunksize=max(1, gammas.size // (8 * workers)))
            for j, t_col, r_col, failed in results:
                t_values[:, j] = t_col
                r_values[:, j] = r_col
                n_failed += failed
    else:
        for job in jobs:
            j, t_col, r_col, failed = _map_column(job)
            t_values[:, j] = t_col
            r_values[:, j] = r_col
            n_failed += failed
    return TransmissionMap(
        e_grid=energies,
        gamma_grid=gammas,
        t_values=t_values,
        r_values=r_values,
        n_failed=n_failed,
    )


def zero_energy_trace(
    spec: LatticeSpec, leads: LeadSpec, gamma_grid
) -> list[tuple[float, float]]:
    """Transmission probability at E = 0 along a gamma grid."""
    m = transmission_map(spec, leads, [0.0], gamma_grid)
    return [(float(g), float(t)) for g, t in zip(m.gamma_grid, m.t_values[0])]


def find_trace_peaks(
    trace: list[tuple[float, float]], min_height: float = 0.0
) -> list[tuple[float, float]]:
    """Strict local maxima of a (gamma, T) trace, at least ``min_height`` tall."""
    peaks = []
    for i in range(1, len(trace) - 1):
        g, t = trace[i]
        if not np.isfinite(t):
            continue
        if t > trace[i - 1][1] and t > trace[i + 1][1] and t >= min_height:
            peaks.append((g, t))
    return peaks


@dataclass
class DetangleTransportReport:
    """Alignment of transmission extrema with the detangled chain levels.

    ``dip_offsets[i]`` is the distance from the i-th in-window
    antisymmetric-chain (f) level to the nearest local transmission
    minimum and ``dip_depths[i]`` the transmission there;
    ``peak_offsets`` does the same for symmetric-chain (p) levels
    against local maxima.  ``antiresonance_present`` flags any matched
    dip deeper than T = 0.01.

    Measured behaviour of this geometry: symmetric contacts excite only
    the leg-symmetric combination, so the decoupled f chain is invisible
    (resonance peaks sit near p levels, no deep dips); switching the
    upper contacts off opens both chains and two-path interference
    carves deep Fano minima near (but not exactly at) chain levels.
    """

    e_grid: np.ndarray
    transmission: np.ndarray
    f_energies: np.ndarray
    p_energies: np.ndarray
    dip_offsets: np.ndarray
    dip_depths: np.ndarray
    peak_offsets: np.ndarray
    antiresonance_present: bool
    grid_step: float
    contact_pattern: str


def detangled_transport_check(
    spec: LatticeSpec, leads: LeadSpec, e_grid
) -> DetangleTransportReport:
    """Compare a gamma = 0 transmission scan against the detangled chains.

    Requires the plain open ladder at gamma = delta = 0 and either fully
    symmetric contacts or the upper-contact-off pattern
    (upper_in = upper_out = 0, lower couplings equal and non-zero).
    """
    from .rotation import open_chain_spectrum

    if spec.topology is not BoundaryTopology.OPEN:
        raise ValueError("detangled transport check needs the open ladder")
    if spec.gamma != 0.0 or spec.delta != 0.0:
        raise ValueError("detangled transport check is defined at gamma = delta = 0")
    if leads.symmetric:
        pattern = "symmetric"
    elif (
        leads.upper_in == leads.upper_out == 0.0
        and leads.lower_in == leads.lower_out != 0.0
    ):
        pattern = "upper-off"
    else:
        raise ValueError(
            "contacts must be fully symmetric or upper-off for the detangle check"
        )

    energies = np.asarray(list(e_grid), dtype=float)
    if energies.size < 16:
        raise ValueError("need a reasonably fine energy grid")
    step = float(np.diff(energies).max())

    m = transmission_map(spec, leads, energies, [spec.gamma])
    trans = m.t_values[:, 0]

    f_energies = np.sort(open_chain_spectrum(spec.n_cells, spec.intra_hop, spec.inter_hop).real)
    p_energies = np.sort(open_chain_spectrum(spec.n_cells, -spec.intra_hop, spec.inter_hop).real)

    minima = [
        i
        for i in range(1, energies.size - 1)
        if trans[i] <= trans[i - 1] and trans[i] <= trans[i + 1]
    ]
    maxima = [
        i
        for i in range(1, energies.size - 1)
        if trans[i] >= trans[i - 1] and trans[i] >= trans[i + 1]
    ]

    margin = 2.0 * step
    in_range = (f_energies > energies[0] + margin) & (f_energies < energies[-1] - margin)
    dip_offsets = []
    dip_depths = []
    for e_f in f_energies[in_range]:
        if minima:
            i = min(minima, key=lambda i: abs(energies[i] - e_f))
            dip_offsets.append(abs(energies[i] - e_f))
            dip_depths.append(trans[i])
        else:
            dip_offsets.append(math.inf)
            dip_depths.append(math.inf)

    in_range_p = (p_energies > energies[0] + margin) & (p_energies < energies[-1] - margin)
    peak_offsets = []
    for e_p in p_energies[in_range_p]:
        if maxima:
            i = min(maxima, key=lambda i: abs(energies[i] - e_p))
            peak_offsets.append(abs(energies[i] - e_p))
        else:
            peak_offsets.append(math.inf)

    dip_depths_arr = np.asarray(dip_depths)
    antiresonance = bool(dip_depths_arr.size) and bool(np.any(dip_depths_arr < 0.01))

    return DetangleTransportReport(
        e_grid=energies,
        transmission=trans,
        f_energies=f_energies,
        p_energies=p_energies,
        dip_offsets=np.asarray(dip_offsets),
        dip_depths=dip_depths_arr,
        peak_offsets=np.asarray(peak_offsets),
        antiresonance_present=antiresonance,
        grid_step=step,
        contact_pattern=pattern,
    )
