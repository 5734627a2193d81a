"""Command-line interface tests: commands, exit codes, JSON determinism."""

import json

import pytest
from click.testing import CliRunner

from paramat.cli import main
from paramat.matrix import builtin, matrix_to_document


@pytest.fixture
def runner():
    return CliRunner()


class TestEntails:
    def test_holds(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "l3", "p|q, ~p", "q"])
        assert result.exit_code == 0
        assert "holds" in result.output

    def test_para_fails(self, runner):
        result = runner.invoke(
            main, ["entails", "--logic", "l3", "--para", "1", "p, ~p", "q"]
        )
        assert result.exit_code == 1
        assert "fails" in result.output

    def test_k3_countermodel(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "k3", "", "p -> p"])
        assert result.exit_code == 1
        assert "countermodel: p=1/2" in result.output

    def test_para_witness_shown(self, runner):
        result = runner.invoke(
            main, ["entails", "--logic", "l3", "--para", "1", "p, ~p", "p | q"]
        )
        assert result.exit_code == 0
        assert "witness: {p}" in result.output

    def test_depth2(self, runner):
        result = runner.invoke(
            main, ["entails", "--logic", "l3", "--para", "2", "p, ~p", "q"]
        )
        assert result.exit_code == 1

    def test_json(self, runner):
        result = runner.invoke(
            main,
            ["entails", "--logic", "l3", "--format", "json", "p|q, ~p", "q"],
        )
        doc = json.loads(result.output)
        assert doc["holds"] is True
        assert doc["logic"] == "L3"
        assert doc["gamma"] == ["p | q", "~p"]

    def test_parse_error_exit_3(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "l3", "p |", "q"])
        assert result.exit_code == 3

    def test_unknown_logic_exit_2(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "zzz", "p", "q"])
        assert result.exit_code == 2


class TestOtherQueries:
    def test_classify(self, runner):
        result = runner.invoke(main, ["classify", "--logic", "g3", "p & ~p"])
        assert result.exit_code == 0
        assert result.output.strip() == "contradiction"

    def test_consistent(self, runner):
        result = runner.invoke(main, ["consistent", "--logic", "l3", "p, ~p"])
        assert result.exit_code == 1
        assert result.output.strip() == "inconsistent"

    def test_para_consistent(self, runner):
        result = runner.invoke(
            main, ["consistent", "--logic", "l3", "--para", "1", "p, ~p"]
        )
        assert result.exit_code == 0
        assert result.output.strip() == "consistent"

    def test_mss(self, runner):
        result = runner.invoke(main, ["mss", "--logic", "l3", "p, ~p"])
        assert result.exit_code == 0
        assert result.output.strip() == "{p}; {~p}"


class TestSelectors:
    def test_parametric(self, runner):
        result = runner.invoke(main, ["matrix", "show", "gn:4"])
        assert result.exit_code == 0
        assert "G4" in result.output
        assert "extension" in result.output

    def test_parametric_bad_arity(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "ln:1", "p", "p"])
        assert result.exit_code == 2

    def test_parametric_bad_number(self, runner):
        result = runner.invoke(main, ["entails", "--logic", "ln:x", "p", "p"])
        assert result.exit_code == 2

    def test_file_selector(self, runner, tmp_path):
        path = tmp_path / "m.matrix"
        path.write_text(json.dumps(matrix_to_document(builtin("g3"))))
        result = runner.invoke(main, ["classify", "--logic", f"file:{path}", "p & ~p"])
        assert result.output.strip() == "contradiction"

    def test_file_selector_missing(self, runner, tmp_path):
        result = runner.invoke(
            main, ["classify", "--logic", f"file:{tmp_path}/no.matrix", "p"]
        )
        assert result.exit_code == 3

    def test_matrix_path_env(self, runner, tmp_path, monkeypatch):
        (tmp_path / "mine.matrix").write_text(
            json.dumps(matrix_to_document(builtin("k3")))
        )
        monkeypatch.setenv("PARAMAT_MATRIX_PATH", str(tmp_path))
        result = runner.invoke(main, ["entails", "--logic", "mine", "", "p -> p"])
        assert result.exit_code == 1


class TestMatrixCommands:
    def test_show_l3(self, runner):
        result = runner.invoke(main, ["matrix", "show", "l3"])
        assert result.exit_code == 0
        # descending rows: 1, 1/2, 0
        lines = [line for line in result.output.splitlines() if line.strip()]
        assert "L3" in lines[0]
        assert lines[-3].strip().startswith("1 ")
        assert lines[-1].strip().startswith("0 ")

    def test_show_json_round_trips(self, runner):
        result = runner.invoke(main, ["matrix", "show", "l3", "--format", "json"])
        doc = json.loads(result.output)
        assert doc == matrix_to_document(builtin("l3"))

    def test_list(self, runner):
        result = runner.invoke(main, ["matrix", "list"])
        for name in ("l3", "g3", "k3", "cl2", "ln:<n>", "gn:<n>"):
            assert name in result.output

    def test_validate_ok(self, runner, tmp_path):
        path = tmp_path / "ok.matrix"
        path.write_text(json.dumps(matrix_to_document(builtin("l3"))))
        result = runner.invoke(main, ["matrix", "validate", str(path)])
        assert result.exit_code == 0
        assert "ok" in result.output

    def test_validate_partial_table(self, runner, tmp_path):
        doc = matrix_to_document(builtin("l3"))
        del doc["imp"]["1|1"]
        path = tmp_path / "bad.matrix"
        path.write_text(json.dumps(doc))
        result = runner.invoke(main, ["matrix", "validate", str(path)])
        assert result.exit_code == 3
        assert "table not total" in result.output


class TestAudit:
    def test_bad_budget_exit_2(self, runner):
        result = runner.invoke(main, ["audit", "--samples", "0"])
        assert result.exit_code == 2

    def test_audit_exit_0_with_known_discrepancies(self, runner):
        result = runner.invoke(main, ["audit", "--samples", "25"])
        assert result.exit_code == 0
        assert result.output.count("[known]") == 4
        assert "UNEXPLAINED" not in result.output

    def test_table_text_grid(self, runner):
        result = runner.invoke(main, ["table", "--samples", "25"])
        assert result.exit_code == 0
        assert "Summary of results" in result.output
        assert "✓" in result.output

    def test_json_byte_identical(self, runner):
        args = ["audit", "--format", "json", "--samples", "25", "--seed", "3"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.output == second.output
        json.loads(first.output)
