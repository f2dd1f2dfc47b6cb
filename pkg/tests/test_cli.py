"""
Tests for the command line: payloads, renderers, seed files and exit codes.
"""

import json
import logging
from fractions import Fraction

import pytest

from degseidel import __main__ as degseidel_main
from degseidel import cli
from degseidel.algebra import BiPoly
from degseidel.cli import main, matrix_from_json, matrix_to_json, parse_seed_lines, table_from_json, table_to_json
from degseidel.errors import InputError, SeedFileError

ONE = '[{"x_deg": 0, "lambda_deg": 0, "num": "1", "den": "1"}]'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def fast_suite(monkeypatch):
    monkeypatch.setenv("DEGSEIDEL_RANDOM_SEQUENCES", "3")


class TestTable:
    def test_bernoulli_numbers_json(self, capsys):
        code, out, _ = run(capsys, "table", "bernoulli", "--n", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "bernoulli"
        assert payload["quantity"] == "numbers"
        assert payload["lambda"] is None
        assert [entry["n"] for entry in payload["entries"]] == [0, 1, 2]
        assert payload["entries"][1]["poly"] == [
            {"x_deg": 0, "lambda_deg": 1, "num": "1", "den": "2"},
            {"x_deg": 0, "lambda_deg": 0, "num": "-1", "den": "2"},
        ]

    def test_genocchi_at_lambda_zero_markdown(self, capsys):
        code, out, _ = run(capsys, "table", "genocchi", "--n", "5", "--lambda", "0", "--format", "markdown")
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("| ") and line[2].isdigit()]
        assert rows == [
            "| 0 | `0` |",
            "| 1 | `1` |",
            "| 2 | `-1` |",
            "| 3 | `0` |",
            "| 4 | `1` |",
            "| 5 | `0` |",
        ]
        assert "*λ = 0*" in out

    def test_limit_matches_lambda_zero(self, capsys):
        _, limit_out, _ = run(capsys, "limit", "euler", "--n", "6", "--format", "csv")
        _, table_out, _ = run(capsys, "table", "euler", "--n", "6", "--lambda", "0", "--format", "csv")
        assert limit_out == table_out
        assert limit_out.splitlines()[:3] == ["n,value", "0,1", "1,-1/2"]

    def test_single_entry(self, capsys):
        code, out, _ = run(capsys, "table", "euler", "--n", "0")
        assert code == 0
        assert json.loads(out)["entries"] == [
            {"n": 0, "poly": [{"x_deg": 0, "lambda_deg": 0, "num": "1", "den": "1"}]}
        ]

    def test_series_route_gives_same_values(self, capsys):
        _, recurrence, _ = run(capsys, "table", "genocchi", "--n", "6", "--polynomials", "--format", "csv")
        _, series, _ = run(capsys, "table", "genocchi", "--n", "6", "--polynomials", "--route", "series",
                           "--format", "csv")
        assert recurrence == series

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "table", "bernoulli", "--n", "1", "--format", "latex")
        assert code == 0
        assert out.startswith("\\begin{align*}")
        assert "\\frac{1}{2}\\lambda - \\frac{1}{2}" in out

    def test_default_format_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("DEGSEIDEL_DEFAULT_FORMAT", "csv")
        _, out, _ = run(capsys, "table", "bernoulli", "--n", "1")
        assert out == "n,value\n0,1\n1,(1/2)λ - 1/2\n"

    def test_process_entry_point_loads_dotenv_and_logging(self, capsys, monkeypatch, tmp_path):
        (tmp_path / ".env").write_text("DEGSEIDEL_DEFAULT_FORMAT=csv\n", encoding="utf-8")
        monkeypatch.chdir(tmp_path)
        # registered so teardown removes what load_dotenv sets
        monkeypatch.setenv("DEGSEIDEL_DEFAULT_FORMAT", "json")
        monkeypatch.delenv("DEGSEIDEL_DEFAULT_FORMAT")
        code = cli.run(["table", "bernoulli", "--n", "1"])
        assert code == 0
        assert capsys.readouterr().out == "n,value\n0,1\n1,(1/2)λ - 1/2\n"
        package = logging.getLogger("degseidel")
        assert len(package.handlers) == 1
        assert package.propagate is False

    def test_module_entry_point_uses_process_bootstrap(self):
        assert degseidel_main.run is cli.run

    @pytest.mark.parametrize("argv", [
        ["table", "catalan"],
        ["table", "euler", "--format", "yaml"],
        ["table", "euler", "--lambda", "1.5"],
        ["table", "euler", "--lambda", "1/0"],
        ["table", "euler", "--n", "-1"],
        ["table", "euler", "--n", "three"],
        [],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err


class TestMatrix:
    def test_genocchi_records(self, capsys):
        code, out, _ = run(capsys, "matrix", "genocchi")
        assert code == 0
        payload = json.loads(out)
        assert payload["n_max"] == 3
        assert payload["mode"] == "degenerate"
        assert len(payload["entries"]) == 10
        entry = next(e for e in payload["entries"] if (e["k"], e["n"]) == (2, 0))
        assert [(t["x_deg"], t["lambda_deg"], t["num"]) for t in entry["poly"]] == [
            (1, 0, "2"),
            (0, 1, "-2"),
            (0, 0, "1"),
        ]

    def test_euler_csv(self, capsys):
        code, out, _ = run(capsys, "matrix", "euler", "--N", "2", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k,n,value"
        assert "1,0,x - λ + 1/2" in lines
        assert len(lines) == 7

    def test_size_zero(self, capsys):
        code, out, _ = run(capsys, "matrix", "bernoulli", "--N", "0")
        assert code == 0
        assert json.loads(out)["entries"] == [
            {"k": 0, "n": 0, "poly": [{"x_deg": 0, "lambda_deg": 0, "num": "1", "den": "1"}]}
        ]

    def test_lambda_evaluation(self, capsys):
        _, out, _ = run(capsys, "matrix", "euler", "--N", "1", "--lambda", "1/2", "--format", "csv")
        assert out.splitlines()[-1] == "1,0,x"

    def test_classical_seed_file(self, capsys, tmp_path):
        path = tmp_path / "ones.jsonl"
        path.write_text("# all ones\n" + "\n".join([ONE] * 5) + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "matrix", "--seed-file", str(path), "--classical")
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "custom"
        assert payload["mode"] == "classical"
        assert payload["n_max"] == 4
        for entry in payload["entries"]:
            assert entry["poly"] == [{"x_deg": 0, "lambda_deg": 0, "num": str(2 ** entry["k"]), "den": "1"}]

    def test_malformed_seed_file(self, capsys, tmp_path):
        bad = '[{"x_deg": 0, "lambda_deg": 0, "num": "1"}, {"x_deg": 0, "lambda_deg": 0, "num": "1", "den": "0"}]'
        path = tmp_path / "bad.jsonl"
        path.write_text(f"{ONE}\n\n{bad}\n", encoding="utf-8")
        code, out, err = run(capsys, "matrix", "--seed-file", str(path))
        assert code == 2
        assert out == ""
        assert "line 3, term 2" in err
        assert err.splitlines()[0] == "error (input): Malformed seed file"
        assert "  hint: Each term record needs x_deg, lambda_deg and num; den defaults to 1" in err

    def test_seed_file_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "latin.jsonl"
        path.write_bytes(b'\xff\xfe[{"x_deg": 0}]\n')
        code, out, err = run(capsys, "matrix", "--seed-file", str(path))
        assert code == 2
        assert out == ""
        assert "line 1" in err
        assert "not valid UTF-8" in err

    def test_seed_file_with_byte_order_mark(self, capsys, tmp_path):
        path = tmp_path / "bom.jsonl"
        path.write_bytes(b"\xef\xbb\xbf" + "\n".join([ONE] * 2).encode("utf-8") + b"\n")
        code, out, _ = run(capsys, "matrix", "--seed-file", str(path))
        assert code == 0
        assert json.loads(out)["n_max"] == 1

    def test_seed_lines_from_text(self):
        assert parse_seed_lines(f"# header\n{ONE}\n") == [BiPoly.one()]
        with pytest.raises(SeedFileError) as info:
            parse_seed_lines(f'{ONE}\n[{{"x_deg": -1, "lambda_deg": 0, "num": "1"}}]\n')
        assert (info.value.line, info.value.term) == (2, 1)
        assert str(info.value).startswith("line 2, term 1: x_deg: ")

    def test_seed_too_short(self, capsys, tmp_path):
        path = tmp_path / "short.jsonl"
        path.write_text(f"{ONE}\n{ONE}\n", encoding="utf-8")
        code, _, err = run(capsys, "matrix", "--seed-file", str(path), "--N", "3")
        assert code == 2
        assert "too short" in err

    def test_missing_seed_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "matrix", "--seed-file", str(tmp_path / "absent.jsonl"))
        assert code == 2
        assert "cannot read seed file" in err

    @pytest.mark.parametrize("argv", [
        ["matrix"],
        ["matrix", "euler", "--seed-file", "seeds.jsonl"],
        ["matrix", "euler", "--classical", "--lambda", "1/2"],
        ["matrix", "euler", "--N", "-2"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 2
        assert out == ""


class TestVerify:
    def test_passes(self, capsys, fast_suite):
        code, out, err = run(capsys, "verify", "--n", "6")
        assert code == 0
        assert json.loads(out)["all_pass"] is True
        assert "all 28 checks passed" in err

    def test_printed_tables_fail(self, capsys, fast_suite):
        code, out, err = run(capsys, "verify", "--n", "7", "--include-paper-tables")
        assert code == 1
        failed = [c["check_id"] for c in json.loads(out)["checks"] if c["status"] == "fail"]
        assert failed == ["printed.table.bernoulli", "printed.table.euler", "printed.table.genocchi"]
        assert err.startswith("3 of 28 checks failed")

    def test_printed_matrices_fail(self, capsys, fast_suite):
        code, out, _ = run(capsys, "verify", "--n", "3", "--include-paper-matrices", "--format", "csv")
        assert code == 1
        failed = [line.split(",")[0] for line in out.splitlines()[1:] if ",fail," in line]
        assert failed == ["printed.matrix.bernoulli", "printed.matrix.euler"]

    def test_output_is_deterministic(self, capsys, fast_suite):
        _, first, _ = run(capsys, "verify", "--n", "4", "--format", "markdown")
        _, second, _ = run(capsys, "verify", "--n", "4", "--format", "markdown")
        assert first == second


class TestRoundTrip:
    def test_table_payload(self, capsys):
        _, out, _ = run(capsys, "table", "bernoulli", "--n", "6", "--polynomials", "--lambda", "-2/3")
        view = table_from_json(out)
        assert view.lambda_value == Fraction(-2, 3)
        assert table_to_json(view) == out

    def test_matrix_payload(self, capsys):
        _, out, _ = run(capsys, "matrix", "genocchi", "--N", "4")
        assert matrix_to_json(matrix_from_json(out)) == out

    def test_table_payload_rejects_gaps(self, capsys):
        _, out, _ = run(capsys, "table", "euler", "--n", "2")
        payload = json.loads(out)
        del payload["entries"][1]
        with pytest.raises(InputError):
            table_from_json(json.dumps(payload))
