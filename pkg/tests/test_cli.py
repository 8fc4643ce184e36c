import json

import pytest
from click.testing import CliRunner

from app.cli import cli
from app.src.extremal import BoundReport, bound_report
from app.src.graphs import from_graph6, from_json
from app.src.sequences import Sequence
from app.src.witness import sequential_sum
from tests.helpers import kappa, lam


@pytest.fixture
def runner():
    return CliRunner()


class TestBound:
    def test_text(self, runner):
        result = runner.invoke(cli, ["bound", "--kind", "kappa", "--n", "10", "--d", "3", "--level", "2"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "params kappa=2 n=10 d=3"
        assert "bound 24" in lines
        assert "sequence (1,4,4,1)" in lines

    def test_substitution_is_reported(self, runner):
        result = runner.invoke(cli, ["bound", "--kind", "kappa", "--n", "10", "--d", "4", "--level", "2"])
        assert result.exit_code == 0
        assert "bound 20" in result.stdout
        assert "DISAGREES" in result.stdout
        assert "substituted" in result.stdout

    def test_json(self, runner):
        result = runner.invoke(cli, ["bound", "--kind", "lambda", "--n", "14", "--d", "6", "--level", "3", "--json"])
        assert result.exit_code == 0
        assert BoundReport.model_validate_json(result.stdout) == bound_report(lam(3, 14, 6))

    @pytest.mark.parametrize(
        "args",
        [
            ["--kind", "kappa", "--n", "7", "--d", "4", "--level", "2"],
            ["--kind", "kappa", "--n", "3", "--d", "3", "--level", "2"],
            ["--kind", "lambda", "--n", "20", "--d", "6", "--level", "5"],
        ],
    )
    def test_domain_errors_exit_one(self, runner, args):
        result = runner.invoke(cli, ["bound", *args])
        assert result.exit_code == 1
        assert result.stdout == ""


class TestConstruct:
    def test_graph6(self, runner):
        result = runner.invoke(cli, ["construct", "--kind", "lambda", "--n", "14", "--d", "6", "--level", "3"])
        assert result.exit_code == 0
        assert from_graph6(result.stdout.strip()) == sequential_sum(Sequence((1, 3, 2, 2, 2, 3, 1)))

    def test_dot(self, runner):
        result = runner.invoke(cli, ["construct", "--kind", "kappa", "--n", "6", "--d", "3", "--level", "2", "--out", "dot"])
        assert result.exit_code == 0
        assert result.stdout.startswith("graph G {")
        assert result.stdout.count("--") == 8

    def test_json_to_file(self, runner, tmp_path):
        target = tmp_path / "witness.json"
        result = runner.invoke(
            cli,
            ["construct", "--kind", "kappa", "--n", "10", "--d", "3", "--level", "2", "--out", "json", "--output", str(target)],
        )
        assert result.exit_code == 0
        assert result.stdout == ""
        g = from_json(target.read_text())
        assert (g.order, g.size) == (10, 24)

    def test_perturb_is_seeded(self, runner):
        args = ["construct", "--kind", "kappa", "--n", "10", "--d", "4", "--level", "2", "--perturb", "--seed", "3"]
        first, second = runner.invoke(cli, args), runner.invoke(cli, args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert from_graph6(first.stdout.strip()).size <= 20


class TestVerify:
    def test_constructed_witness_passes(self, runner, tmp_path):
        target = tmp_path / "witness.g6"
        runner.invoke(cli, ["construct", "--kind", "kappa", "--n", "10", "--d", "3", "--level", "2", "--output", str(target)])
        result = runner.invoke(cli, ["verify", "--in", str(target), "--kind", "kappa", "--level", "2", "--d", "3", "--json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["measured"]["size"] == 24
        assert report["size_ok"] is True

    def test_wrong_diameter_fails(self, runner, tmp_path):
        target = tmp_path / "cycle.json"
        target.write_text(json.dumps({"order": 6, "edges": [[i, (i + 1) % 6] for i in range(6)]}))
        result = runner.invoke(cli, ["verify", "--in", str(target), "--kind", "kappa", "--level", "2", "--d", "4"])
        assert result.exit_code == 1
        assert "diameter_ok false" in result.stdout
        assert "connectivity_ok true" in result.stdout

    def test_shortfall_is_reported(self, runner, tmp_path):
        target = tmp_path / "witness.json"
        runner.invoke(
            cli,
            ["construct", "--kind", "kappa", "--n", "6", "--d", "3", "--level", "2", "--out", "json", "--output", str(target)],
        )
        result = runner.invoke(cli, ["verify", "--in", str(target), "--kind", "kappa", "--level", "3", "--d", "3"])
        assert result.exit_code == 1
        assert "connectivity_ok false" in result.stdout


class TestOracle:
    def test_text(self, runner):
        result = runner.invoke(cli, ["oracle", "--kind", "kappa", "--n", "6", "--d", "3", "--level", "2", "--no-cache"])
        assert result.exit_code == 0
        assert "max_size 8" in result.stdout
        assert "witness_count 1" in result.stdout

    def test_json_uses_cache_file(self, runner, tmp_cache_path):
        args = ["oracle", "--kind", "kappa", "--n", "7", "--d", "3", "--level", "2", "--cache", str(tmp_cache_path), "--json"]
        first = runner.invoke(cli, args)
        assert first.exit_code == 0
        assert json.loads(first.stdout)["max_size"] == 11
        assert "elapsed" not in json.loads(first.stdout)
        assert tmp_cache_path.exists()
        assert runner.invoke(cli, args).stdout == first.stdout

    def test_empty_class_exits_one(self, runner):
        result = runner.invoke(cli, ["oracle", "--kind", "kappa", "--n", "7", "--d", "4", "--level", "2", "--no-cache"])
        assert result.exit_code == 1
        assert "feasible false" in result.stdout

    def test_ceiling(self, runner):
        result = runner.invoke(cli, ["oracle", "--kind", "kappa", "--n", "11", "--d", "3", "--level", "2", "--no-cache"])
        assert result.exit_code == 1


class TestCompare:
    def test_flags_exit_two(self, runner, tmp_path):
        target = tmp_path / "table.csv"
        result = runner.invoke(
            cli,
            ["compare", "--kind", "kappa", "--level", "2", "--n-range", "8..10", "--d-range", "4..4",
             "--no-cache", "--csv", str(target)],
        )
        assert result.exit_code == 2
        assert "substituted" in result.stdout
        rows = target.read_text().splitlines()
        assert len(rows) == 4
        assert rows[3].startswith("10,4,2,kappa,True,20,21,False,True,20")

    def test_clean_range_exits_zero(self, runner):
        result = runner.invoke(
            cli,
            ["compare", "--kind", "kappa", "--level", "2", "--n-range", "6..9", "--d-range", "3..3", "--no-cache", "--json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)["rows"]
        assert [row["n"] for row in rows] == [6, 7, 8, 9]
        assert all(row["oracle"] == row["bound"] for row in rows)

    def test_bad_range(self, runner):
        result = runner.invoke(
            cli, ["compare", "--kind", "kappa", "--level", "2", "--n-range", "9..6", "--d-range", "3..3", "--no-oracle"]
        )
        assert result.exit_code == 1
        assert "empty range" in result.stderr

    def test_disagreement_alone_exits_two(self, runner):
        result = runner.invoke(
            cli, ["compare", "--kind", "kappa", "--level", "2", "--n-range", "10..10", "--d-range", "4..4", "--no-oracle"]
        )
        assert result.exit_code == 2


class TestUsageErrors:
    def test_unknown_flag(self, runner):
        result = runner.invoke(cli, ["bound", "--kind", "kappa", "--n", "10", "--d", "3", "--level", "2", "--bogus"])
        assert result.exit_code == 1
        assert result.stdout == ""

    def test_unknown_command(self, runner):
        assert runner.invoke(cli, ["bogus"]).exit_code == 1

    def test_missing_input_file(self, runner, tmp_path):
        missing = tmp_path / "missing.g6"
        result = runner.invoke(cli, ["verify", "--in", str(missing), "--kind", "kappa", "--level", "2", "--d", "3"])
        assert result.exit_code == 1

    def test_help_still_exits_zero(self, runner):
        result = runner.invoke(cli, ["bound", "--help"])
        assert result.exit_code == 0
        assert "--kind" in result.stdout


def test_reports_match_library(runner):
    result = runner.invoke(cli, ["bound", "--kind", "kappa", "--n", "12", "--d", "6", "--level", "2", "--json"])
    assert json.loads(result.stdout)["bound"] == bound_report(kappa(2, 12, 6)).bound == 20
