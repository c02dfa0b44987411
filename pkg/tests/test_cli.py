#!/usr/bin/env python
"""Pytest-based CLI tests for the walkreg commands."""

import json
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.walkreg.graph_core import catalog, encode_graph6, parse_graph6

from graph_fixtures import DATA_DIR

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
TWO_DIAMONDS = os.path.join(DATA_DIR, "two_diamonds.g6")


def run_cli_command(*args, env=None):
    """Run a walkreg command from the project root and return the completed process."""
    if env is None:
        env = os.environ.copy()
    env.pop("WALKREG_CONFIG", None)
    return subprocess.run(
        [sys.executable, "-m", "src.walkreg.interfaces.cli.main", "--no-log-file", *args],
        cwd=PROJECT_ROOT,
        check=False,
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture
def petersen_file(tmp_path):
    target = tmp_path / "petersen.g6"
    target.write_text(encode_graph6(catalog("petersen")) + "\n", encoding="utf-8")
    return target


def test_catalog_prints_graph6():
    result = run_cli_command("catalog", "petersen")
    assert result.returncode == 0
    assert result.stdout == encode_graph6(catalog("petersen")) + "\n"


def test_catalog_with_parameters_to_file(tmp_path):
    target = tmp_path / "gp.json"
    result = run_cli_command("catalog", "generalized_petersen", "8", "3", "--format", "json", "--out", str(target))
    assert result.returncode == 0
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["n"] == 16
    assert len(data["edges"]) == 24


def test_catalog_listing():
    result = run_cli_command("catalog", "--list")
    assert result.returncode == 0
    assert "petersen" in result.stdout


def test_catalog_unknown_family():
    result = run_cli_command("catalog", "heawood")
    assert result.returncode == 1
    assert "Error" in result.stderr


def test_analyze_to_stdout():
    result = run_cli_command("analyze", TWO_DIAMONDS, "--quiet")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["schema"] == "walkreg-report/1"
    assert report["walk"]["order"] is None
    assert report["walk"]["obstruction"]["distance"] == 0


def test_analyze_to_file(petersen_file, tmp_path):
    target = tmp_path / "report.json"
    result = run_cli_command("analyze", str(petersen_file), "--out", str(target))
    assert result.returncode == 0
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["walk"]["order"] == 2
    assert report["walk"]["distance_regular"] is True
    assert "Report written" in result.stdout


def test_analyze_vertex_limit(petersen_file):
    result = run_cli_command("analyze", str(petersen_file), "--max-n", "5")
    assert result.returncode == 1
    assert result.stdout == ""


def test_analyze_missing_file(tmp_path):
    result = run_cli_command("analyze", str(tmp_path / "missing.g6"))
    assert result.returncode == 1


def test_analyze_bad_graph6(tmp_path):
    target = tmp_path / "bad.g6"
    target.write_text("D?\n", encoding="utf-8")
    result = run_cli_command("analyze", str(target))
    assert result.returncode == 1


def test_invalid_config_file(tmp_path, petersen_file):
    config = tmp_path / "walkreg.yaml"
    config.write_text("analysis:\n  node_budget: -1\n", encoding="utf-8")
    result = run_cli_command("--config", str(config), "analyze", str(petersen_file))
    assert result.returncode == 1


def test_construct_line_graph(petersen_file):
    result = run_cli_command("construct", "line_graph", str(petersen_file))
    assert result.returncode == 0
    line = parse_graph6(result.stdout.strip())
    assert (line.n, line.valency()) == (15, 4)


def test_construct_parameters(petersen_file):
    result = run_cli_command("construct", "distance_k", str(petersen_file), "--param", "i=2")
    assert result.returncode == 0
    assert parse_graph6(result.stdout.strip()).valency() == 6

    result = run_cli_command("construct", "distance_k", str(petersen_file), "--param", "i")
    assert result.returncode == 1


def test_geometry(tmp_path):
    target = tmp_path / "rook3.g6"
    target.write_text(encode_graph6(catalog("rook", [3])) + "\n", encoding="utf-8")
    result = run_cli_command("geometry", str(target), "--lines")
    assert result.returncode == 0
    assert "geometric" in result.stdout


def test_geometry_budget(tmp_path):
    target = tmp_path / "rook3.g6"
    target.write_text(encode_graph6(catalog("rook", [3])) + "\n", encoding="utf-8")
    result = run_cli_command("geometry", str(target), "--node-budget", "2")
    assert result.returncode == 3


def test_geometry_needs_walk_regularity():
    result = run_cli_command("geometry", TWO_DIAMONDS)
    assert result.returncode == 1


def test_diagram(petersen_file):
    result = run_cli_command("diagram", str(petersen_file))
    assert result.returncode == 0
    assert result.stdout.startswith('digraph "')
    assert 'd1 -> d2 [label="2"];' in result.stdout


def test_construct_distance_two_of_bipartite_input(tmp_path):
    target = tmp_path / "cube.g6"
    target.write_text(encode_graph6(catalog("cube")) + "\n", encoding="utf-8")
    result = run_cli_command("construct", "distance_k", str(target), "--param", "i=2")
    assert result.returncode == 0
    assert parse_graph6(result.stdout.strip()).valency() == 3
