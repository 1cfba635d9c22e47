"""Command line driver: parameter sweeps written to CSV/JSON with a manifest.

Usage:

    ptladder <experiment|preset> [--config FILE] [--set key=value ...]
             [--out PATH] [--format csv|json] [--workers W]

Configuration is a flat ``key = value`` document; keys may be grouped
under ``[lattice]``, ``[leads]``, ``[grid]``, ``[output]`` and ``[run]``
sections or written at the top of the file, in which case each key is
resolved by its (unique) name.  Precedence: defaults, then preset, then
config file, then ``--set`` pairs, then explicit flags.

Exit codes: 0 success, 1 configuration error, 2 numerical failure,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import configparser
import dataclasses
import hashlib
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .lattice import (
    BoundaryTopology,
    LatticeSpec,
    build_real_space_hamiltonian,
)
from .rotation import SingularAngleError, complex_rotation_angle, mode_weights
from .spectral import (
    EigensolverError,
    eigendecompose,
    locate_exceptional_points,
    sweep_spectrum,
    _match_step,
)
from .transport import (
    LeadSpec,
    OutOfBandError,
    SingularSystemError,
    detangled_transport_check,
    transmission_map,
    zero_energy_trace,
)

__all__ = [
    "ConfigError",
    "GridSpec",
    "ExperimentConfig",
    "RunManifest",
    "EXPERIMENTS",
    "PRESETS",
    "parse_config",
    "config_to_text",
    "apply_overrides",
    "run_experiment",
    "emit_csv",
    "main",
]

EXPERIMENTS = (
    "spectrum_sweep",
    "ep_search",
    "transmission_map",
    "zero_energy_trace",
    "detangle_check",
)


class ConfigError(Exception):
    """Invalid configuration document or override."""


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int

    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)


@dataclass
class ExperimentConfig:
    lattice: LatticeSpec
    leads: LeadSpec
    experiment: str = "spectrum_sweep"
    gamma_grid: GridSpec = GridSpec(0.0, 3.0, 601)
    e_grid: GridSpec = GridSpec(-4.0, 4.0, 801)
    out_path: str | None = None
    out_format: str = "csv"
    with_weights: bool = False
    with_zero_trace: bool = False
    workers: int = 0  # 0 = use available parallelism
    coarse_steps: int = 400
    ep_tol: float = 1e-8

    def resolved_workers(self) -> int:
        if self.workers > 0:
            return self.workers
        return max(1, os.cpu_count() or 1)


def default_config() -> ExperimentConfig:
    return ExperimentConfig(lattice=LatticeSpec(n_cells=100), leads=LeadSpec())


# key -> (section, python type).  Booleans accept true/false/1/0/yes/no.
_KEY_TABLE: dict[str, tuple[str, type]] = {
    "n_cells": ("lattice", int),
    "intra_hop": ("lattice", float),
    "inter_hop": ("lattice", float),
    "delta": ("lattice", float),
    "gamma": ("lattice", float),
    "topology": ("lattice", str),
    "v0": ("leads", float),
    "coupling_upper_in": ("leads", float),
    "coupling_lower_in": ("leads", float),
    "coupling_upper_out": ("leads", float),
    "coupling_lower_out": ("leads", float),
    "gamma_min": ("grid", float),
    "gamma_max": ("grid", float),
    "gamma_count": ("grid", int),
    "e_min": ("grid", float),
    "e_max": ("grid", float),
    "e_count": ("grid", int),
    "path": ("output", str),
    "format": ("output", str),
    "with_weights": ("output", bool),
    "with_zero_trace": ("output", bool),
    "experiment": ("run", str),
    "workers": ("run", int),
    "coarse_steps": ("run", int),
    "ep_tol": ("run", float),
}

_SECTIONS = ("lattice", "leads", "grid", "output", "run")

PRESETS: dict[str, dict[str, str]] = {
    "fig2-cll": {
        "experiment": "spectrum_sweep",
        "topology": "circular",
        "n_cells": "100",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
    },
    "fig2-mll": {
        "experiment": "spectrum_sweep",
        "topology": "moebius",
        "n_cells": "100",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
    },
    "fig3": {
        "experiment": "spectrum_sweep",
        "topology": "circular",
        "n_cells": "100",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
        "with_weights": "true",
    },
    "fig4": {
        "experiment": "spectrum_sweep",
        "topology": "moebius",
        "n_cells": "100",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
        "with_weights": "true",
    },
    "fig6-ladder": {
        "experiment": "transmission_map",
        "topology": "open",
        "n_cells": "100",
        "e_min": "-4",
        "e_max": "4",
        "e_count": "801",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
        "with_zero_trace": "true",
    },
    "fig6-twisted": {
        "experiment": "transmission_map",
        "topology": "twisted",
        "n_cells": "100",
        "e_min": "-4",
        "e_max": "4",
        "e_count": "801",
        "gamma_min": "0",
        "gamma_max": "3",
        "gamma_count": "601",
        "with_zero_trace": "true",
    },
}


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _coerce(key: str, raw: str, where: str) -> object:
    _, typ = _KEY_TABLE[key]
    try:
        if typ is bool:
            return _parse_bool(raw)
        if typ is int:
            return int(raw.strip())
        if typ is float:
            return float(raw.strip())
        return raw.strip()
    except ValueError as exc:
        raise ConfigError(f"{where}: cannot parse {key} = {raw!r} as {typ.__name__} ({exc})")


def _scan_lines(text: str) -> dict[tuple[str, str], int]:
    """Map (section, key) to the 1-based line of first definition."""
    where: dict[tuple[str, str], int] = {}
    section = "run"
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(("#", ";")):
            continue
        if stripped.startswith("[") and stripped.endswith("]"):
            section = stripped[1:-1].strip().lower()
            continue
        for sep in ("=", ":"):
            if sep in stripped:
                key = stripped.split(sep, 1)[0].strip().lower()
                where.setdefault((section, key), lineno)
                break
    return where


def _apply_pairs(config: ExperimentConfig, pairs: list[tuple[str, str, str, str]]) -> ExperimentConfig:
    """Apply (section, key, raw value, diagnostic) tuples onto a config."""
    lattice = dataclasses.asdict(config.lattice)
    lattice["topology"] = config.lattice.topology.value
    leads = dataclasses.asdict(config.leads)
    grid = {
        "gamma_min": config.gamma_grid.lo,
        "gamma_max": config.gamma_grid.hi,
        "gamma_count": config.gamma_grid.count,
        "e_min": config.e_grid.lo,
        "e_max": config.e_grid.hi,
        "e_count": config.e_grid.count,
    }
    scalars = {
        "experiment": config.experiment,
        "workers": config.workers,
        "coarse_steps": config.coarse_steps,
        "ep_tol": config.ep_tol,
        "path": config.out_path,
        "format": config.out_format,
        "with_weights": config.with_weights,
        "with_zero_trace": config.with_zero_trace,
    }
    lead_key_map = {
        "v0": "v0",
        "coupling_upper_in": "upper_in",
        "coupling_lower_in": "lower_in",
        "coupling_upper_out": "upper_out",
        "coupling_lower_out": "lower_out",
    }

    for section, key, raw, where in pairs:
        if key not in _KEY_TABLE:
            raise ConfigError(f"{where}: unknown key {key!r}")
        home, _ = _KEY_TABLE[key]
        if section not in ("run", home):
            raise ConfigError(
                f"{where}: key {key!r} belongs to section [{home}], found in [{section}]"
            )
        value = _coerce(key, raw, where)
        if home == "lattice":
            lattice[key] = value
        elif home == "leads":
            leads[lead_key_map[key]] = value
        elif home == "grid":
            grid[key] = value
        else:
            scalars[key] = value

    try:
        topology = (
            lattice["topology"]
            if isinstance(lattice["topology"], BoundaryTopology)
            else BoundaryTopology.from_name(str(lattice["topology"]))
        )
        new_lattice = LatticeSpec(
            n_cells=int(lattice["n_cells"]),
            intra_hop=float(lattice["intra_hop"]),
            inter_hop=float(lattice["inter_hop"]),
            delta=float(lattice["delta"]),
            gamma=float(lattice["gamma"]),
            topology=topology,
        )
        new_leads = LeadSpec(**leads)
    except ValueError as exc:
        raise ConfigError(str(exc))

    return ExperimentConfig(
        lattice=new_lattice,
        leads=new_leads,
        experiment=str(scalars["experiment"]),
        gamma_grid=GridSpec(
            float(grid["gamma_min"]), float(grid["gamma_max"]), int(grid["gamma_count"])
        ),
        e_grid=GridSpec(float(grid["e_min"]), float(grid["e_max"]), int(grid["e_count"])),
        out_path=scalars["path"] if scalars["path"] else None,
        out_format=str(scalars["format"]),
        with_weights=bool(scalars["with_weights"]),
        with_zero_trace=bool(scalars["with_zero_trace"]),
        workers=int(scalars["workers"]),
        coarse_steps=int(scalars["coarse_steps"]),
        ep_tol=float(scalars["ep_tol"]),
    )


def validate_config(config: ExperimentConfig) -> ExperimentConfig:
    if config.experiment not in EXPERIMENTS:
        raise ConfigError(
            f"unknown experiment {config.experiment!r} (expected one of: "
            + ", ".join(EXPERIMENTS)
            + ")"
        )
    if config.out_format not in ("csv", "json"):
        raise ConfigError(f"unknown output format {config.out_format!r}")
    for name, grid in (("gamma", config.gamma_grid), ("e", config.e_grid)):
        if grid.count < 1:
            raise ConfigError(f"{name}_count must be >= 1, got {grid.count}")
        if grid.lo > grid.hi:
            raise ConfigError(f"{name}_min must be <= {name}_max")
        if grid.count == 1 and grid.lo != grid.hi:
            raise ConfigError(f"a single-point {name} grid needs {name}_min == {name}_max")
    if config.workers < 0:
        raise ConfigError("workers must be >= 0")
    if config.coarse_steps < 1:
        raise ConfigError("coarse_steps must be >= 1")
    if config.ep_tol <= 0:
        raise ConfigError("ep_tol must be positive")
    needs_leads = config.experiment in (
        "transmission_map",
        "zero_energy_trace",
        "detangle_check",
    )
    if needs_leads and config.lattice.topology not in (
        BoundaryTopology.OPEN,
        BoundaryTopology.TWISTED_OPEN,
    ):
        raise ConfigError(
            f"experiment {config.experiment} needs an open or twisted topology, "
            f"got {config.lattice.topology.value}"
        )
    if config.experiment == "detangle_check":
        if config.lattice.topology is not BoundaryTopology.OPEN:
            raise ConfigError("detangle_check needs topology = open")
        if config.lattice.gamma != 0.0 or config.lattice.delta != 0.0:
            raise ConfigError("detangle_check is defined at gamma = delta = 0")
        if config.e_grid.count < 16:
            raise ConfigError("detangle_check needs e_count >= 16")
    return config


def parse_config(text: str, base: ExperimentConfig | None = None) -> ExperimentConfig:
    """Parse a flat key = value document into a validated config."""
    base = base or default_config()
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string("[run]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}")
    lines = _scan_lines(text)

    pairs: list[tuple[str, str, str, str]] = []
    for section in parser.sections():
        lowered = section.lower()
        if lowered not in _SECTIONS:
            raise ConfigError(f"unknown section [{section}]")
        for key, raw in parser.items(section):
            lineno = lines.get((lowered, key.lower()))
            where = f"line {lineno}" if lineno else f"section [{lowered}]"
            pairs.append((lowered, key.lower(), raw, where))
    return validate_config(_apply_pairs(base, pairs))


def apply_overrides(config: ExperimentConfig, overrides: list[str]) -> ExperimentConfig:
    """Apply ``key=value`` strings (from --set) onto a config."""
    pairs = []
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"--set needs key=value, got {item!r}")
        key, raw = item.split("=", 1)
        pairs.append(("run", key.strip().lower(), raw.strip(), f"--set {item!r}"))
    return validate_config(_apply_pairs(config, pairs))


def config_to_text(config: ExperimentConfig) -> str:
    """Canonical flat document; parse_config round-trips it exactly."""
    lines = [
        f"experiment = {config.experiment}",
        f"workers = {config.workers}",
        f"coarse_steps = {config.coarse_steps}",
        f"ep_tol = {config.ep_tol!r}",
        "",
        "[lattice]",
        f"n_cells = {config.lattice.n_cells}",
        f"intra_hop = {config.lattice.intra_hop!r}",
        f"inter_hop = {config.lattice.inter_hop!r}",
        f"delta = {config.lattice.delta!r}",
        f"gamma = {config.lattice.gamma!r}",
        f"topology = {config.lattice.topology.value}",
        "",
        "[leads]",
        f"v0 = {config.leads.v0!r}",
        f"coupling_upper_in = {config.leads.upper_in!r}",
        f"coupling_lower_in = {config.leads.lower_in!r}",
        f"coupling_upper_out = {config.leads.upper_out!r}",
        f"coupling_lower_out = {config.leads.lower_out!r}",
        "",
        "[grid]",
        f"gamma_min = {config.gamma_grid.lo!r}",
        f"gamma_max = {config.gamma_grid.hi!r}",
        f"gamma_count = {config.gamma_grid.count}",
        f"e_min = {config.e_grid.lo!r}",
        f"e_max = {config.e_grid.hi!r}",
        f"e_count = {config.e_grid.count}",
        "",
        "[output]",
    ]
    if config.out_path:
        lines.append(f"path = {config.out_path}")
    lines += [
        f"format = {config.out_format}",
        f"with_weights = {str(config.with_weights).lower()}",
        f"with_zero_trace = {str(config.with_zero_trace).lower()}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Experiment execution and output.


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    v = float(value)
    if math.isnan(v):
        return "nan"
    return f"{v:.15g}"


def emit_csv(path: Path, columns: list[str], rows: list[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def emit_json(path: Path, schema: str, columns: list[str], rows: list[tuple]) -> None:
    def clean(v):
        if isinstance(v, (int, np.integer)):
            return int(v)
        if isinstance(v, str):
            return v
        v = float(v)
        return v if math.isfinite(v) else None

    payload = {
        "schema": schema,
        "columns": columns,
        "rows": [[clean(v) for v in row] for row in rows],
    }
    with open(path, "w", newline="") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


@dataclass
class RunManifest:
    experiment: str
    version: str
    created: str
    duration_s: float
    n_failed: int
    outputs: list[str]
    checksums: dict[str, str]
    config_text: str
    summary: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=1, sort_keys=True) + "\n"


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    h.update(path.read_bytes())
    return h.hexdigest()


def _sweep_rows(config: ExperimentConfig):
    spec = config.lattice
    grid = config.gamma_grid.points()
    workers = config.resolved_workers()
    sweep = sweep_spectrum(spec, grid, workers=workers)
    columns = ["gamma", "branch", "re_e", "im_e"]
    if config.with_weights:
        columns += ["alpha_sq", "alpha_theta_sq"]
    rows = []
    for j, g in enumerate(grid):
        weights = None
        if config.with_weights:
            weights = _weights_for_point(spec, float(g), sweep.branches[:, j])
        for b in range(sweep.n_branches):
            val = sweep.branches[b, j]
            row = [float(g), b, val.real, val.imag]
            if config.with_weights:
                row += list(weights[b])
            rows.append(tuple(row))
    summary = {
        "continuation_residual": sweep.continuation_residual,
        "ambiguous_steps": len(sweep.ambiguous_steps),
    }
    return columns, rows, summary, 0


def _weights_for_point(spec, gamma: float, branch_values: np.ndarray):
    spec_g = spec.with_gamma(gamma)
    spectrum = eigendecompose(build_real_space_hamiltonian(spec_g), want_vectors=True, gamma=gamma)
    perm, _, _ = _match_step(branch_values, spectrum.eigenvalues, 0.0)
    try:
        angle = complex_rotation_angle(spec.intra_hop, spec.delta, gamma)
    except (SingularAngleError, ValueError):
        return [(math.nan, math.nan)] * branch_values.size
    out = []
    for b in range(branch_values.size):
        state = spectrum.right_eigenvectors[:, perm[b]]
        w = mode_weights(state, spec_g, angle)
        out.append((w.alpha_sq, w.alpha_theta_sq))
    return out


def _ep_rows(config: ExperimentConfig):
    points = locate_exceptional_points(
        config.lattice,
        (config.gamma_grid.lo, config.gamma_grid.hi),
        coarse_steps=config.coarse_steps,
        ep_tol=config.ep_tol,
    )
    columns = ["gamma_star", "re_e", "im_e", "kind", "pair_lo", "pair_hi", "self_orth"]
    rows = [
        (
            p.gamma_star,
            p.energy_star.real,
            p.energy_star.imag,
            p.kind.value,
            p.branch_pair[0],
            p.branch_pair[1],
            p.self_orthogonality,
        )
        for p in points
    ]
    return columns, rows, {"n_points": len(points)}, 0


def _map_rows(config: ExperimentConfig):
    m = transmission_map(
        config.lattice,
        config.leads,
        config.e_grid.points(),
        config.gamma_grid.points(),
        workers=config.resolved_workers(),
    )
    columns = ["e", "gamma", "t", "r"]
    rows = []
    for i, e in enumerate(m.e_grid):
        for j, g in enumerate(m.gamma_grid):
            rows.append((float(e), float(g), float(m.t_values[i, j]), float(m.r_values[i, j])))
    total = m.t_values.size
    summary = {"n_failed": m.n_failed, "failure_rate": m.n_failed / total if total else 0.0}
    return columns, rows, summary, m.n_failed


def _trace_rows(config: ExperimentConfig):
    trace = zero_energy_trace(config.lattice, config.leads, config.gamma_grid.points())
    columns = ["gamma", "t"]
    rows = [(g, t) for g, t in trace]
    bad = sum(1 for _, t in trace if not math.isfinite(t))
    return columns, rows, {"n_failed": bad}, bad


def _detangle_rows(config: ExperimentConfig):
    report = detangled_transport_check(config.lattice, config.leads, config.e_grid.points())
    columns = ["e", "t"]
    rows = [(float(e), float(t)) for e, t in zip(report.e_grid, report.transmission)]
    summary = {
        "contact_pattern": report.contact_pattern,
        "antiresonance_present": report.antiresonance_present,
        "max_dip_offset": float(np.max(report.dip_offsets)) if report.dip_offsets.size else None,
        "grid_step": report.grid_step,
    }
    return columns, rows, summary, 0


_RUNNERS = {
    "spectrum_sweep": _sweep_rows,
    "ep_search": _ep_rows,
    "transmission_map": _map_rows,
    "zero_energy_trace": _trace_rows,
    "detangle_check": _detangle_rows,
}


def run_experiment(config: ExperimentConfig, preset: str | None = None) -> RunManifest:
    """Run the configured experiment and write data plus manifest files."""
    validate_config(config)
    started = time.time()
    columns, rows, summary, n_failed = _RUNNERS[config.experiment](config)

    ext = config.out_format
    out = Path(config.out_path or f"{preset or config.experiment}.{ext}")
    outputs = [out]
    if ext == "csv":
        emit_csv(out, columns, rows)
    else:
        emit_json(out, config.experiment, columns, rows)

    if config.experiment == "transmission_map" and config.with_zero_trace:
        trace_cols, trace_rows, trace_summary, trace_failed = _trace_rows(config)
        trace_path = out.with_name(out.stem + ".trace" + out.suffix)
        if ext == "csv":
            emit_csv(trace_path, trace_cols, trace_rows)
        else:
            emit_json(trace_path, "zero_energy_trace", trace_cols, trace_rows)
        outputs.append(trace_path)
        summary = dict(summary, zero_trace=trace_summary)
        n_failed += trace_failed

    manifest = RunManifest(
        experiment=config.experiment,
        version=__version__,
        created=time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        duration_s=round(time.time() - started, 6),
        n_failed=n_failed,
        outputs=[str(p) for p in outputs],
        checksums={str(p): _sha256(p) for p in outputs},
        config_text=config_to_text(config),
        summary=summary,
    )
    manifest_path = out.with_name(out.stem + ".manifest.json")
    manifest_path.write_text(manifest.to_json())
    return manifest


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ptladder",
        description="PT-symmetric ladder lattice sweeps: spectra, exceptional "
        "points, and two-terminal transport.",
    )
    parser.add_argument(
        "experiment",
        help="experiment name (%s) or preset (%s)"
        % (", ".join(EXPERIMENTS), ", ".join(sorted(PRESETS))),
    )
    parser.add_argument("--config", help="flat key = value config file")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one config key (repeatable)",
    )
    parser.add_argument("--out", help="output file path")
    parser.add_argument("--format", choices=("csv", "json"), help="output format")
    parser.add_argument("--workers", type=int, help="worker count (0 = auto)")
    args = parser.parse_args(argv)

    try:
        config = default_config()
        preset = None
        if args.experiment in PRESETS:
            preset = args.experiment
            pairs = [
                ("run", k, v, f"preset {preset}") for k, v in PRESETS[preset].items()
            ]
            config = _apply_pairs(config, pairs)
        elif args.experiment in EXPERIMENTS:
            config = dataclasses.replace(config, experiment=args.experiment)
        else:
            raise ConfigError(
                f"unknown experiment or preset {args.experiment!r}; known experiments: "
                + ", ".join(EXPERIMENTS)
                + "; presets: "
                + ", ".join(sorted(PRESETS))
            )
        if args.config:
            try:
                text = Path(args.config).read_text()
            except OSError as exc:
                print(f"ptladder: cannot read config: {exc}", file=sys.stderr)
                return 3
            config = parse_config(text, base=config)
        if args.overrides:
            config = apply_overrides(config, args.overrides)
        updates = {}
        if args.out:
            updates["out_path"] = args.out
        if args.format:
            updates["out_format"] = args.format
        if args.workers is not None:
            if args.workers < 0:
                raise ConfigError("workers must be >= 0")
            updates["workers"] = args.workers
        if updates:
            config = dataclasses.replace(config, **updates)
        validate_config(config)
    except ConfigError as exc:
        print(f"ptladder: config error: {exc}", file=sys.stderr)
        return 1

    try:
        manifest = run_experiment(config, preset=preset)
    except (
        EigensolverError,
        SingularSystemError,
        SingularAngleError,
        OutOfBandError,
        np.linalg.LinAlgError,
        FloatingPointError,
    ) as exc:
        print(f"ptladder: numerical failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ptladder: I/O failure: {exc}", file=sys.stderr)
        return 3

    for path in manifest.outputs:
        print(f"wrote {path}")
    print(
        f"experiment {manifest.experiment} finished in {manifest.duration_s:.3f}s "
        f"({manifest.n_failed} failed cells)"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
