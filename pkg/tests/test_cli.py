import json

import pytest
from click.testing import CliRunner

from app import cli


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_tile_count(runner):
    result = runner.invoke(cli, ["tile", "count", "--m", "2", "--n", "2"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "84"


def test_tile_count_with_korn_pak_json(runner):
    record = _json(runner.invoke(cli, ["--json", "tile", "count", "--m", "1", "--n", "2", "--korn-pak"]))
    assert record["result"] == {"count": "6", "korn_pak": "6", "agree": True}
    assert record["input"] == {"m": 1, "n": 2, "pruning": "on"}
    assert record["provenance"]["budgets"]["max_tilings"] > 0


def test_zero_size_is_a_usage_error(runner):
    assert runner.invoke(cli, ["tile", "count", "--m", "0", "--n", "2"]).exit_code == 2


def test_unknown_command(runner):
    assert runner.invoke(cli, ["tiles"]).exit_code == 2


def test_verify_identity(runner):
    args = ["verify", "identity", "--m", "1", "--n", "2", "--q", "1", "--x", "uniform:1", "--mode", "exact", "--json"]
    record = _json(runner.invoke(cli, args))
    assert record["result"]["lhs"] == "24"
    assert record["result"]["rhs"] == "24"
    assert record["result"]["equal"] is True


def test_verify_identity_complex(runner):
    args = ["--json", "verify", "identity", "--m", "1", "--n", "1", "--q", "complex:0.6", "--mode", "complex"]
    record = _json(runner.invoke(cli, args))
    assert record["result"]["equal"] is True
    assert isinstance(record["result"]["lhs"], list)


def test_verify_identity_with_x_file(runner, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"x": ["2/3", "-1/2", "5", "1/7"]}), encoding="utf-8")
    args = ["--json", "verify", "identity", "--m", "2", "--n", "2", "--q", "81/16", "--x", str(path)]
    record = _json(runner.invoke(cli, args))
    assert record["result"]["equal"] is True
    assert record["result"]["lhs"] == record["result"]["rhs"]


def test_irrational_fourth_root_is_a_usage_error(runner):
    result = runner.invoke(cli, ["verify", "identity", "--m", "1", "--n", "1", "--q", "2"])
    assert result.exit_code == 2


def test_json_output_is_byte_identical(runner):
    args = ["--json", "cycles", "classes", "--m", "1", "--n", "2"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    classes = json.loads(first.stdout)["result"]["classes"]
    assert sum(int(c["size"]) for c in classes) == 6
    assert classes[0]["k"] == "2"


def test_enumerate_then_validate(runner, tmp_path):
    out = tmp_path / "tilings.jsonl"
    result = runner.invoke(cli, ["tile", "enumerate", "--m", "1", "--n", "2", "--out", str(out)])
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 6
    first = json.loads(lines[0])
    assert (first["m"], first["n"], len(first["tiles"])) == (1, 2, 8)
    assert runner.invoke(cli, ["tile", "validate", str(out)]).exit_code == 0


def test_validate_flags_broken_tiling(runner, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text(json.dumps({"m": 1, "n": 1, "tiles": [{"o": 1, "anchor": [1, 1]}]}) + "\n", encoding="utf-8")
    result = runner.invoke(cli, ["--json", "tile", "validate", str(path)])
    assert result.exit_code == 1
    row = json.loads(result.stdout)["result"]["tilings"][0]
    assert not row["valid"]
    assert "corner_on_white" in row["kinds"]


def test_enumerate_limit_to_stdout(runner):
    result = runner.invoke(cli, ["tile", "enumerate", "--m", "2", "--n", "2", "--limit", "3"])
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 3


def test_genfun_eval(runner, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"a": [], "b1": "2", "b2": "1/2"}), encoding="utf-8")
    record = _json(runner.invoke(cli, ["--json", "genfun", "eval", "--m", "1", "--n", "1", "--weights", str(path)]))
    assert record["result"]["F"] == "257/16"


def test_genfun_boundary_weight_is_a_usage_error(runner, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"a": [{"o": 1, "w": [2, 0], "value": "3"}]}), encoding="utf-8")
    result = runner.invoke(cli, ["genfun", "eval", "--m", "1", "--n", "1", "--weights", str(path)])
    assert result.exit_code == 2


def test_tutte_classical(runner):
    record = _json(runner.invoke(cli, ["--json", "tutte", "classical", "--grid", "2", "2", "--x", "3", "--y", "3"]))
    assert record["result"]["T"] == "42"


@pytest.mark.parametrize("engine", ["subset", "delcon", "transfer"])
def test_tutte_eval_grid(runner, engine):
    args = ["--json", "tutte", "eval", "--grid", "2", "2", "--v", "2", "--Q", "4", "--engine", engine]
    record = _json(runner.invoke(cli, args))
    assert record["result"]["Z"] == "1344"
    assert record["provenance"]["engine"] == engine


def test_tutte_eval_graph_file(runner, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"vertices": 2, "edges": [[0, 1, "1"], [0, 1, "1"]]}), encoding="utf-8")
    record = _json(runner.invoke(cli, ["--json", "tutte", "eval", "--graph", str(path), "--Q", "2"]))
    assert record["result"]["Z"] == "10"
    assert record["input"]["graph"] == {"vertices": 2, "edges": [[0, 1, "1"], [0, 1, "1"]]}


def test_tutte_transfer_needs_grid(runner, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"vertices": 1, "edges": []}), encoding="utf-8")
    result = runner.invoke(cli, ["tutte", "eval", "--graph", str(path), "--Q", "2", "--engine", "transfer"])
    assert result.exit_code == 2


def test_entropy_baxter(runner):
    record = _json(runner.invoke(cli, ["--json", "entropy", "baxter", "--Q", "4"]))
    assert record["result"]["regime"] == "critical"
    assert "printed_ratio" in record["result"]["alternatives"]
    record = _json(runner.invoke(cli, ["--json", "entropy", "baxter", "--Q", "2", "--tol", "1e-10"]))
    assert record["result"]["regime"] == "subcritical"
    assert record["input"]["tol"] == 1e-10


def test_entropy_domain_error(runner):
    assert runner.invoke(cli, ["entropy", "baxter", "--mu", "2"]).exit_code == 2
    assert runner.invoke(cli, ["entropy", "baxter"]).exit_code == 2


def test_entropy_finite_size(runner):
    record = _json(runner.invoke(cli, ["entropy", "finite-size", "--Q", "4", "--max-size", "3", "--json"]))
    estimates = record["result"]["estimates"]
    assert [e["size"] for e in estimates] == [1, 2, 3]
    assert estimates[0]["bulk_estimate"] is None
    assert record["result"]["target"]["regime"] == "critical"


def test_human_output(runner):
    result = runner.invoke(cli, ["verify", "korn-pak", "--m", "1", "--n", "1"])
    assert result.exit_code == 0
    assert "OK" in result.stdout


def test_bad_env_config(runner, monkeypatch):
    monkeypatch.setenv("TETRO_MAX_TILINGS", "0")
    assert runner.invoke(cli, ["tile", "count", "--m", "1", "--n", "1"]).exit_code == 2


def test_enumerate_count_only(runner):
    result = runner.invoke(cli, ["tile", "enumerate", "--m", "1", "--n", "2", "--emit", "count-only"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "6"


def test_counts_are_exact_strings(runner, tmp_path):
    out = tmp_path / "tilings.jsonl"
    record = _json(runner.invoke(cli, ["--json", "tile", "enumerate", "--m", "1", "--n", "1", "--out", str(out)]))
    assert record["result"]["written"] == "2"
    classes = tmp_path / "classes.jsonl"
    assert runner.invoke(cli, ["cycles", "classes", "--m", "1", "--n", "1", "--out", str(classes)]).exit_code == 0
    line = json.loads(classes.read_text(encoding="utf-8"))
    assert line == {"A": [], "k": "1", "loops": "1", "size": "2", "b_exponent_multiset": {"-4": "1", "4": "1"}}


def test_korn_pak_check_uses_strip_width_budget(runner, monkeypatch):
    monkeypatch.setenv("TETRO_MAX_STRIP_WIDTH", "1")
    assert runner.invoke(cli, ["tile", "count", "--m", "2", "--n", "1", "--korn-pak"]).exit_code == 2
    assert runner.invoke(cli, ["tile", "count", "--m", "2", "--n", "1"]).exit_code == 0
