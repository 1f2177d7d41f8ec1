# tests/test_cli.py
import json

import pytest

from prismlab.main import cli

from .utils import TETRAHEDRON


def run(runner, *args):
    result = runner.invoke(cli, [str(a) for a in args])
    return result, (json.loads(result.stdout) if result.stdout.strip().startswith("{") else None)


def test_build(runner) -> None:
    result, payload = run(runner, "build", 3, 2)
    assert result.exit_code == 0
    assert payload["f_vector"] == [12, 24, 14]
    assert payload["closed_form_f_vector"] == [12, 24, 14]
    assert payload["euler_characteristic"] == 2


def test_build_lists_hexagon_edges(runner) -> None:
    result, payload = run(runner, "build", 2, 2, "--dim", 1)
    assert result.exit_code == 0
    assert payload["cells"] == [
        [[0], [1, 2]], [[0, 1], [2]], [[0, 2], [1]], [[1], [0, 2]], [[1, 2], [0]], [[2], [0, 1]],
    ]


def test_build_writes_cells_to_file(runner, tmp_path) -> None:
    out = tmp_path / "cells.json"
    result, payload = run(runner, "build", 3, 2, "--dim", 2, "--out", out)
    assert result.exit_code == 0
    assert payload["cells"] is None
    assert payload["out"] == str(out)
    assert len(json.loads(out.read_text())["cells"]) == 14


def test_build_rejects_impossible_spec(runner) -> None:
    result, payload = run(runner, "build", 1, 3)
    assert result.exit_code == 2
    assert payload["error"] == "InvalidSpecError"


def test_build_out_needs_dim(runner, tmp_path) -> None:
    out = tmp_path / "cells.json"
    result, payload = run(runner, "build", 3, 2, "--out", out)
    assert result.exit_code == 2
    assert payload is None
    assert not out.exists()


def test_build_rejects_out_of_range_dim(runner) -> None:
    result, payload = run(runner, "build", 3, 2, "--dim", 5)
    assert result.exit_code == 2
    assert payload["error"] == "EmptyDomainError"


@pytest.mark.parametrize("n, r", [(3, 2), (4, 3)])
def test_verify_passes(runner, n, r) -> None:
    result, payload = run(runner, "verify", n, r)
    assert result.exit_code == 0
    assert payload["passed"]
    assert [c["name"] for c in payload["checks"]] == [
        "boundary_squared_zero", "parent_count", "free_action", "o_orientation_coherent",
    ]


@pytest.mark.slow
def test_verify_larger_instance(runner) -> None:
    result, payload = run(runner, "verify", 6, 3)
    assert result.exit_code == 0
    assert payload["passed"]


def test_verify_rejects_degenerate_spec(runner) -> None:
    result, payload = run(runner, "verify", 1, 5)
    assert result.exit_code == 2
    assert payload["error"] == "DegenerateSpecError"
    assert "degenerate" in payload["message"]


def test_homology(runner) -> None:
    result, payload = run(runner, "homology", 3, 2)
    assert result.exit_code == 0
    assert payload["betti"] == [0, 0, 1]
    assert all(g["torsion"] == [] for g in payload["groups"])
    assert payload["connectivity_ok"]
    assert payload["euler_from_homology"] == payload["euler_characteristic"] == 2


def test_homology_unreduced(runner) -> None:
    result, payload = run(runner, "homology", 2, 2, "--unreduced")
    assert result.exit_code == 0
    assert payload["reduced"] is False
    assert payload["betti"] == [1, 1]
    assert payload["connectivity_ok"]


def test_quotient(runner) -> None:
    result, payload = run(runner, "quotient", 4, 3)
    assert result.exit_code == 0
    assert payload["quotient_f_vector"] == [10, 30, 25]
    assert payload["group"] == "S_3"
    assert payload["free_action"]["passed"]


def test_quotient_orbits_and_cyclic(runner) -> None:
    result, payload = run(runner, "quotient", 2, 2, "--orbits", 1, "--cyclic")
    assert result.exit_code == 0
    assert payload["group"] == "Z_2"
    assert payload["quotient_f_vector"] == [3, 3]
    assert [o["size"] for o in payload["orbit_report"]["orbits"]] == [2, 2, 2]
    assert payload["orbit_report"]["orbits"][0]["rep"]["parts"] == [[0], [1, 2]]


def test_quotient_signed_equivariance(runner) -> None:
    result, payload = run(runner, "quotient", 3, 2, "--signs")
    assert result.exit_code == 0
    assert set(payload["signed_equivariance"]) == {"[1 2]", "[2 1]"}


def test_tverberg_radon(runner, tmp_path) -> None:
    points = tmp_path / "radon4.txt"
    points.write_text("0 0\n1 0\n1 1\n0 1\n")
    result, payload = run(runner, "tverberg", "--dim", 2, "--parts", 2, "--points", points)
    assert result.exit_code == 0
    assert payload["found"]
    assert payload["verified"]
    assert payload["certificate"]["parts"] == [[0, 2], [1, 3]]
    assert payload["certificate"]["witness"] == ["1/2", "1/2"]
    assert not payload["theorem_violation"]


def test_tverberg_not_found_below_bound(runner, tmp_path) -> None:
    points = tmp_path / "triangle.txt"
    points.write_text("0 0\n1 0\n0 1\n")
    result, payload = run(runner, "tverberg", "--dim", 2, "--parts", 2, "--points", points)
    assert result.exit_code == 1
    assert not payload["found"]
    assert not payload["guarantee"]
    assert not payload["theorem_violation"]


def test_tverberg_ttt(runner, tmp_path) -> None:
    points = tmp_path / "centroid.txt"
    points.write_text("0 0\n3 0\n0 3\n1 1\n")
    result, payload = run(runner, "tverberg", "--dim", 2, "--parts", 2, "--points", points, "--ttt")
    assert result.exit_code == 0
    assert payload["ttt"] == {"n": 3, "top_cell": [[0, 1, 2], [3]], "face_dims": [2, 0]}


def test_tverberg_input_errors(runner, tmp_path) -> None:
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0 0\n")
    result, payload = run(runner, "tverberg", "--dim", 2, "--parts", 2, "--points", bad)
    assert result.exit_code == 2
    assert payload["error"] == "DimensionMismatchError"

    result, _ = run(runner, "tverberg", "--dim", 2, "--parts", 2, "--points", tmp_path / "missing.txt")
    assert result.exit_code == 2


def test_export_matrix(runner, tmp_path) -> None:
    out = tmp_path / "d1.txt"
    result, payload = run(runner, "export-matrix", 2, 2, 1, "--out", out)
    assert result.exit_code == 0
    assert (payload["rows"], payload["cols"], payload["nnz"]) == (6, 6, 12)
    assert out.read_text().splitlines()[0] == "6 6 12"


def test_export_matrix_text_format(runner) -> None:
    result = runner.invoke(cli, ["--format", "text", "export-matrix", "2", "2", "1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "6 6 12"


def test_cell_cap_from_environment(runner, monkeypatch) -> None:
    monkeypatch.setenv("PRISMLAB_MAX_CELLS", "10")
    result, payload = run(runner, "build", 3, 2)
    assert result.exit_code == 2
    assert payload["error"] == "CellCapExceededError"


def test_output_is_deterministic(runner) -> None:
    first = runner.invoke(cli, ["quotient", "3", "2", "--orbits", "2"]).stdout
    second = runner.invoke(cli, ["quotient", "3", "2", "--orbits", "2"]).stdout
    assert first == second
    assert first == json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n"


def test_text_format(runner) -> None:
    result = runner.invoke(cli, ["--format", "text", "verify", "3", "2"])
    assert result.exit_code == 0
    assert "ok   o_orientation_coherent" in result.stdout


def test_orient_generic_complex(runner, tmp_path) -> None:
    path = tmp_path / "tetrahedron.json"
    path.write_text(json.dumps(TETRAHEDRON))
    result, payload = run(runner, "orient", path)
    assert result.exit_code == 1
    assert payload["satisfiable"] is False
    assert payload["checked_assignments"] == 16

    result, payload = run(runner, "orient", path, "--mode", "classical")
    assert result.exit_code == 0
    assert payload["report"]["passed"]
    assert set(payload["witness"]) == {"012", "013", "023", "123"}


def test_orient_rejects_malformed_file(runner, tmp_path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{"top_cells": [{"id": "a", "factors": [1]}, {"id": "a", "factors": [1]}]}')
    result, payload = run(runner, "orient", path)
    assert result.exit_code == 2
    assert payload["error"] == "PrismParseError"


def test_boundary_prints_chain(runner) -> None:
    result, payload = run(runner, "boundary", 3, 2, '{"parts": [[0, 1], [2, 3]]}')
    assert result.exit_code == 0
    assert payload["boundary_squared_zero"]
    assert payload["cell"] == {"parts": [[0, 1], [2, 3]]}
    assert payload["boundary"]["dim"] == 1
    terms = {str(tuple(map(tuple, t["cell"]["parts"]))): t["coef"] for t in payload["boundary"]["terms"]}
    assert terms == {
        "((1,), (2, 3))": 1,
        "((0,), (2, 3))": -1,
        "((0, 1), (3,))": -1,
        "((0, 1), (2,))": 1,
    }


def test_boundary_of_a_vertex_is_empty(runner) -> None:
    result, payload = run(runner, "boundary", 2, 2, '{"parts": [[0], [1]]}')
    assert result.exit_code == 0
    assert payload["boundary"] == {"dim": -1, "terms": []}


@pytest.mark.parametrize("cell_json, error", [
    ('{"parts": [[0], [0, 1]]}', "PrismParseError"),
    ("not json", "PrismParseError"),
    ('{"parts": [[0], [1], [2]]}', "DimensionError"),
    ('{"parts": [[0], [1, 7]]}', "DimensionError"),
])
def test_boundary_rejects_bad_cells(runner, cell_json, error) -> None:
    result, payload = run(runner, "boundary", 3, 2, cell_json)
    assert result.exit_code == 2
    assert payload["error"] == error
