"""Configuration round-trip and CLI contract tests (exit codes, artifact
headers, subcommand outputs)."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cfgn import ExperimentConfig, DomainError, dump_config, load_config
from cfgn.cli import main

FAST = ["--reps", "150"]


def fast_config(tmp_path, **overrides):
    cfg = ExperimentConfig(M=150, freq_points=64, h_max=10,
                           spectrum_h_max=40, out_dir=str(tmp_path / "out"))
    for key, value in overrides.items():
        setattr(cfg, key, value)
    path = tmp_path / "cfg.toml"
    dump_config(cfg, path)
    return cfg, path


# ----------------------------------------------------------------- config

def test_config_toml_roundtrip(tmp_path):
    cfg = ExperimentConfig(H1=0.33, rho=-0.15, variant="wellbalanced",
                           M=77, statistics=("acvf",))
    path = tmp_path / "c.toml"
    dump_config(cfg, path)
    back = load_config(path)
    assert back == cfg


def test_config_hash_ignores_output_dir():
    a = ExperimentConfig(out_dir="x")
    b = ExperimentConfig(out_dir="y")
    assert a.config_hash() == b.config_hash()
    assert a.config_hash() != ExperimentConfig(seed=1).config_hash()


def test_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "c.toml"
    path.write_text("[process]\nbogus = 1\n")
    with pytest.raises(DomainError):
        load_config(path)


def test_config_validation():
    with pytest.raises(DomainError):
        ExperimentConfig(H1=1.5).validate()
    with pytest.raises(DomainError):
        ExperimentConfig(n_points=32, n_reference=20, h_max=20).validate()


# -------------------------------------------------------------------- CLI

def test_cli_bad_config_exits_2(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text("[process]\nH1 = 1.4\n")
    runner = CliRunner()
    result = runner.invoke(main, ["theory", "--config", str(path)])
    assert result.exit_code == 2
    err = json.loads(result.output.strip().splitlines()[-1])
    assert err["error"] == "DomainError"


def test_cli_singular_params_exit_2(tmp_path):
    cfg, path = fast_config(tmp_path, H1=0.3, H2=0.7, rho=0.2)
    runner = CliRunner()
    result = runner.invoke(main, ["theory", "--config", str(path)])
    assert result.exit_code == 2
    assert "SingularParameter" in result.output


def test_cli_simulate_headers(tmp_path):
    cfg, path = fast_config(tmp_path)
    runner = CliRunner()
    result = runner.invoke(main, ["simulate", "--config", str(path)])
    assert result.exit_code == 0, result.output
    dest = Path(cfg.out_dir) / "ensemble.csv"
    head = dest.read_text().splitlines()[:4]
    assert head[0] == f"# config_hash={cfg.config_hash()}"
    assert head[1] == f"# seed={cfg.seed}"
    assert head[2].startswith("# tool_version=")
    assert head[3] == "replication,n,value"


def test_cli_theory_tables(tmp_path):
    cfg, path = fast_config(tmp_path, statistics=("acvf", "caf"))
    runner = CliRunner()
    result = runner.invoke(main, ["theory", "--config", str(path)])
    assert result.exit_code == 0, result.output
    out = Path(cfg.out_dir)
    assert (out / "acvf_theory.csv").exists()
    assert (out / "caf_theory_alpha2lambda0.csv").exists()
    assert not (out / "spectrum_theory_alpha0.csv").exists()


def test_cli_compare_summary(tmp_path):
    cfg, path = fast_config(tmp_path, M=400)
    runner = CliRunner()
    result = runner.invoke(main, ["compare", "--config", str(path)])
    out = Path(cfg.out_dir)
    summary = json.loads((out / "compare_summary.json").read_text())
    assert set(summary["statistics"]) == {
        "acvf", "caf0", "caf2lambda0", "spectrum0", "spectrum2lambda0"}
    # exit code mirrors the pass flag
    assert result.exit_code == (0 if summary["passed"] else 1)
    assert (out / "compare_acvf.csv").exists()


def test_cli_seed_override_changes_ensemble(tmp_path):
    cfg, path = fast_config(tmp_path)
    runner = CliRunner()
    dest = Path(cfg.out_dir) / "ensemble.csv"
    runner.invoke(main, ["simulate", "--config", str(path), "--seed", "1"])
    first = dest.read_text()
    runner.invoke(main, ["simulate", "--config", str(path), "--seed", "2"])
    assert dest.read_text() != first
    runner.invoke(main, ["simulate", "--config", str(path), "--seed", "1"])
    assert dest.read_text() == first
