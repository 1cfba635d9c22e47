"""Driver tests: config parsing, overrides, output files, exit codes."""

import hashlib
import json

import pytest

from ptladder import BoundaryTopology, OutOfBandError
from ptladder import cli
from ptladder.cli import (
    ConfigError,
    GridSpec,
    PRESETS,
    apply_overrides,
    config_to_text,
    default_config,
    emit_csv,
    emit_json,
    main,
    parse_config,
)


def test_empty_document_is_the_default_config():
    assert parse_config("") == default_config()


def test_top_level_keys_resolve_without_sections():
    config = parse_config("n_cells = 8\ngamma = 0.5\nexperiment = ep_search\n")
    assert config.lattice.n_cells == 8
    assert config.lattice.gamma == 0.5
    assert config.experiment == "ep_search"


def test_unknown_key_reports_the_line():
    text = "[lattice]\nn_cells = 12\nbogus = 3\n"
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert "line 3" in str(err.value)
    assert "bogus" in str(err.value)


def test_key_in_wrong_section_is_rejected():
    with pytest.raises(ConfigError) as err:
        parse_config("[lattice]\nv0 = 5.0\n")
    assert "[leads]" in str(err.value)
    assert "[lattice]" in str(err.value)


def test_unknown_section_is_rejected():
    with pytest.raises(ConfigError, match="unknown section"):
        parse_config("[contacts]\nv0 = 5.0\n")


def test_unparseable_value_reports_the_type():
    with pytest.raises(ConfigError, match="cannot parse"):
        parse_config("[grid]\ngamma_count = few\n")
    with pytest.raises(ConfigError, match="boolean"):
        parse_config("[output]\nwith_weights = maybe\n")


def test_moebius_needs_even_cell_count():
    with pytest.raises(ConfigError, match="even"):
        parse_config("topology = moebius\nn_cells = 5\n")


def test_grid_bounds_are_validated():
    with pytest.raises(ConfigError, match="single-point"):
        parse_config("gamma_count = 1\n")
    with pytest.raises(ConfigError, match="gamma_min must be <="):
        parse_config("gamma_min = 2\ngamma_max = 1\n")
    with pytest.raises(ConfigError, match="e_count"):
        parse_config("e_count = 0\n")


def test_transport_experiments_need_open_boundaries():
    with pytest.raises(ConfigError, match="open or twisted"):
        parse_config("experiment = transmission_map\n")


def test_detangle_check_preconditions():
    with pytest.raises(ConfigError, match="gamma = delta = 0"):
        parse_config("experiment = detangle_check\ntopology = open\ngamma = 0.5\n")
    with pytest.raises(ConfigError, match="topology = open"):
        parse_config("experiment = detangle_check\ntopology = twisted\n")
    with pytest.raises(ConfigError, match="e_count"):
        parse_config("experiment = detangle_check\ntopology = open\ne_count = 8\n")


def test_canonical_text_round_trips():
    text = "\n".join(
        [
            "experiment = transmission_map",
            "workers = 2",
            "[lattice]",
            "topology = twisted",
            "n_cells = 8",
            "gamma = 0.25",
            "[leads]",
            "v0 = 8.0",
            "coupling_upper_out = 0.5",
            "[grid]",
            "e_min = -1.5",
            "e_max = 1.5",
            "e_count = 21",
            "gamma_max = 1.0",
            "gamma_count = 11",
            "[output]",
            "format = json",
            "with_zero_trace = true",
        ]
    )
    config = parse_config(text)
    assert parse_config(config_to_text(config)) == config


def test_apply_overrides():
    config = apply_overrides(default_config(), ["gamma=1.5", "topology=open"])
    assert config.lattice.gamma == 1.5
    assert config.lattice.topology is BoundaryTopology.OPEN
    with pytest.raises(ConfigError, match="key=value"):
        apply_overrides(default_config(), ["gamma"])
    with pytest.raises(ConfigError, match="unknown key"):
        apply_overrides(default_config(), ["nope=1"])


def test_grid_spec_points():
    single = GridSpec(0.3, 0.3, 1).points()
    assert single.shape == (1,) and single[0] == 0.3
    assert GridSpec(0.0, 1.0, 5).points().tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_emitters_format_nan(tmp_path):
    rows = [(1.0, float("nan")), (2, 0.5)]
    path = tmp_path / "x.csv"
    emit_csv(path, ["a", "b"], rows)
    assert path.read_text().splitlines() == ["a,b", "1,nan", "2,0.5"]
    path = tmp_path / "x.json"
    emit_json(path, "demo", ["a", "b"], rows)
    payload = json.loads(path.read_text())
    assert payload["schema"] == "demo"
    assert payload["rows"] == [[1.0, None], [2, 0.5]]


def test_main_writes_data_and_manifest(tmp_path, capsys):
    out = tmp_path / "tiny.csv"
    code = main(
        [
            "transmission_map",
            "--set", "topology=open",
            "--set", "n_cells=6",
            "--set", "e_min=0.3", "--set", "e_max=0.3", "--set", "e_count=1",
            "--set", "gamma_min=0", "--set", "gamma_max=0", "--set", "gamma_count=1",
            "--out", str(out),
            "--workers", "1",
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "e,gamma,t,r"
    assert len(lines) == 2
    e, g, t, r = (float(v) for v in lines[1].split(","))
    assert (e, g) == (0.3, 0.0)
    assert abs(1.0 - t - r) < 1e-10  # hermitian point conserves flux

    manifest = json.loads((tmp_path / "tiny.manifest.json").read_text())
    assert manifest["experiment"] == "transmission_map"
    assert manifest["n_failed"] == 0
    assert manifest["checksums"][str(out)] == hashlib.sha256(out.read_bytes()).hexdigest()
    reparsed = parse_config(manifest["config_text"])
    assert reparsed.lattice.n_cells == 6
    assert reparsed.e_grid == GridSpec(0.3, 0.3, 1)
    assert f"wrote {out}" in capsys.readouterr().out


def test_main_output_is_identical_across_worker_counts(tmp_path):
    def run(name, workers):
        out = tmp_path / name
        code = main(
            [
                "transmission_map",
                "--set", "topology=twisted",
                "--set", "n_cells=4",
                "--set", "e_min=-1", "--set", "e_max=1", "--set", "e_count=7",
                "--set", "gamma_min=0", "--set", "gamma_max=1", "--set", "gamma_count=5",
                "--out", str(out),
                "--workers", str(workers),
            ]
        )
        assert code == 0
        return out.read_bytes()

    assert run("w1.csv", 1) == run("w2.csv", 2)


def test_main_config_errors_exit_1(tmp_path, capsys):
    assert main(["frobnicate"]) == 1
    assert "config error" in capsys.readouterr().err
    assert main(["spectrum_sweep", "--set", "nope=1"]) == 1
    assert main(["spectrum_sweep", "--workers", "-1"]) == 1
    capsys.readouterr()


def test_main_numerical_failures_exit_2(tmp_path, capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise OutOfBandError("synthetic failure")

    monkeypatch.setattr(cli, "sweep_spectrum", boom)
    code = main(
        [
            "spectrum_sweep",
            "--set", "n_cells=4",
            "--set", "gamma_max=1", "--set", "gamma_count=3",
            "--out", str(tmp_path / "x.csv"),
        ]
    )
    assert code == 2
    assert "numerical failure" in capsys.readouterr().err


def test_main_io_failures_exit_3(tmp_path, capsys):
    code = main(["spectrum_sweep", "--config", str(tmp_path / "missing.conf")])
    assert code == 3
    assert "cannot read config" in capsys.readouterr().err

    code = main(
        [
            "spectrum_sweep",
            "--set", "n_cells=4",
            "--set", "gamma_max=1", "--set", "gamma_count=2",
            "--out", str(tmp_path / "no_such_dir" / "x.csv"),
            "--workers", "1",
        ]
    )
    assert code == 3
    assert "I/O failure" in capsys.readouterr().err


def test_default_output_name_uses_experiment(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code = main(
        [
            "spectrum_sweep",
            "--set", "n_cells=4",
            "--set", "gamma_max=1", "--set", "gamma_count=2",
            "--workers", "1",
        ]
    )
    assert code == 0
    assert (tmp_path / "spectrum_sweep.csv").exists()
    assert (tmp_path / "spectrum_sweep.manifest.json").exists()


def test_main_flag_beats_config_file(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text(
        "[lattice]\nn_cells = 4\n"
        "[grid]\ngamma_max = 1.0\ngamma_count = 3\n"
        "[output]\nformat = json\n"
    )
    out = tmp_path / "sweep.csv"
    code = main(
        [
            "spectrum_sweep",
            "--config", str(conf),
            "--out", str(out),
            "--format", "csv",
            "--workers", "1",
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "gamma,branch,re_e,im_e"
    assert len(lines) == 1 + 3 * 8  # three gammas, eight branches of the 4-cell ring


def test_zero_energy_trace_json_output(tmp_path):
    out = tmp_path / "trace.json"
    code = main(
        [
            "zero_energy_trace",
            "--set", "topology=open",
            "--set", "n_cells=5",
            "--set", "gamma_min=0", "--set", "gamma_max=1", "--set", "gamma_count=5",
            "--out", str(out),
            "--format", "json",
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == "zero_energy_trace"
    assert payload["columns"] == ["gamma", "t"]
    assert len(payload["rows"]) == 5
    assert all(row[1] is not None for row in payload["rows"])


def test_ep_search_cli_finds_the_ring_merges(tmp_path):
    out = tmp_path / "eps.csv"
    code = main(
        [
            "ep_search",
            "--set", "n_cells=6",
            "--set", "gamma_min=1.5", "--set", "gamma_max=2.5",
            "--set", "coarse_steps=40",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "gamma_star,re_e,im_e,kind,pair_lo,pair_hi,self_orth"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 6
    assert all(row[3] == "MergePoint" for row in rows)
    assert all(abs(float(row[0]) - 2.0) < 1e-6 for row in rows)
    manifest = json.loads((tmp_path / "eps.manifest.json").read_text())
    assert manifest["summary"]["n_points"] == 6


TINY_PRESET_OVERRIDES = {
    "fig2-cll": ["n_cells=6", "gamma_count=5"],
    "fig2-mll": ["n_cells=6", "gamma_count=5"],
    "fig3": ["n_cells=6", "gamma_count=4"],
    "fig4": ["n_cells=6", "gamma_count=4"],
    "fig6-ladder": ["n_cells=4", "e_min=-1", "e_max=1", "e_count=5",
                    "gamma_max=1", "gamma_count=3"],
    "fig6-twisted": ["n_cells=4", "e_min=-1", "e_max=1", "e_count=5",
                     "gamma_max=1", "gamma_count=3"],
}


@pytest.mark.parametrize("preset", sorted(PRESETS))
def test_presets_run_end_to_end(preset, tmp_path):
    out = tmp_path / f"{preset}.csv"
    argv = [preset, "--out", str(out), "--workers", "1"]
    for item in TINY_PRESET_OVERRIDES[preset]:
        argv += ["--set", item]
    assert main(argv) == 0

    lines = out.read_text().splitlines()
    header = lines[0].split(",")
    if preset in ("fig2-cll", "fig2-mll"):
        assert header == ["gamma", "branch", "re_e", "im_e"]
        assert len(lines) == 1 + 5 * 12
    if preset in ("fig3", "fig4"):
        assert header[-2:] == ["alpha_sq", "alpha_theta_sq"]
        assert len(lines) == 1 + 4 * 12
    if preset.startswith("fig6"):
        assert header == ["e", "gamma", "t", "r"]
        assert len(lines) == 1 + 5 * 3
        trace = tmp_path / f"{preset}.trace.csv"
        assert trace.exists()
        assert len(trace.read_text().splitlines()) == 1 + 3
        manifest = json.loads((tmp_path / f"{preset}.manifest.json").read_text())
        assert [str(out), str(trace)] == manifest["outputs"]
