import json
from fractions import Fraction

import pytest

from divsum.cli import Record, Table, emit, run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


class TestEmit:
    def test_empty_table_is_header_only(self):
        table = Table(["n", "B_n"], [])
        assert emit("csv", table) == "n,B_n"
        assert emit("plain", table) == "n\tB_n"
        assert json.loads(emit("json", table)) == []

    def test_json_keys_sorted(self):
        record = Record({"b": 1, "a": 2}, plain="x")
        assert emit("json", record) == '{"a": 2, "b": 1}'

    def test_csv_flattens_nested_records(self):
        record = Record({"sum": "1/4", "numeric": {"pass": True}}, plain="1/4")
        lines = emit("csv", record).splitlines()
        assert lines[0] == "numeric.pass,sum"


class TestBernoulliCommand:
    def test_plain_value(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "4")
        assert (code, out) == (0, "-1/30")

    @pytest.mark.parametrize("method", ["recurrence", "series", "garabedian"])
    def test_methods(self, capsys, method):
        code, out, _ = run(capsys, "bernoulli", "8", "--method", method)
        assert (code, out) == (0, "-1/30")

    def test_csv_table(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "2", "--table", "--format", "csv")
        assert code == 0
        assert out == "n,B_n\n0,1\n1,-1/2\n2,1/6"

    def test_json_table_parses_back(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "6", "--table", "--format", "json")
        rows = json.loads(out)
        assert Fraction(rows[6]["B_n"]) == Fraction(1, 42)

    def test_plain_table_has_header(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "2", "--table")
        assert out.splitlines()[0] == "n\tB_n"


class TestEulerCommand:
    def test_plain_value(self, capsys):
        code, out, _ = run(capsys, "euler", "6")
        assert (code, out) == (0, "61")

    def test_series_method(self, capsys):
        code, out, _ = run(capsys, "euler", "10", "--method", "series")
        assert (code, out) == (0, "50521")

    def test_garabedian_not_offered(self, capsys):
        code, out, err = run(capsys, "euler", "4", "--method", "garabedian")
        assert code == 2


class TestSigmaCommand:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "sigma", "1")
        assert (code, out) == (0, "1/4")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "sigma", "3", "--format", "json")
        assert json.loads(out) == {"sum": "-1/8"}

    def test_numeric_passes(self, capsys):
        code, out, _ = run(capsys, "sigma", "1", "--numeric")
        assert code == 0
        assert "pass" in out

    def test_numeric_json_schema(self, capsys):
        code, out, _ = run(capsys, "sigma", "2", "--numeric", "--format", "json")
        payload = json.loads(out)
        assert payload["sum"] == "0"
        assert payload["numeric"]["pass"] is True
        assert payload["numeric"]["nodes"] == 10

    def test_grid_levels_flag(self, capsys):
        code, out, _ = run(
            capsys, "sigma", "1", "--numeric", "--grid-levels", "6", "--format", "json"
        )
        assert json.loads(out)["numeric"]["nodes"] == 6


class TestSumCommand:
    def test_fibonacci_json(self, capsys):
        code, out, _ = run(
            capsys, "sum", "rec a(n)=a(n-1)+a(n-2); init 1,1", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"sum": "-1"}

    def test_geometric_plain(self, capsys):
        code, out, _ = run(capsys, "sum", "poly 1 ratio 1/2")
        assert (code, out) == (0, "2")

    def test_not_summable_exit_code(self, capsys):
        code, out, _ = run(capsys, "sum", "poly 1 ratio 1")
        assert code == 1
        assert out == "not summable: pole of order 1 at x=1"

    def test_not_summable_json(self, capsys):
        code, out, _ = run(capsys, "sum", "poly n+1 ratio 1", "--format", "json")
        assert code == 1
        assert json.loads(out) == {"not_summable": {"pole_order": 2}}

    def test_numeric_fibonacci(self, capsys):
        code, out, _ = run(
            capsys, "sum", "rec a(n)=a(n-1)+a(n-2); init 1,1", "--numeric",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["numeric"]["pass"] is True
        assert abs(payload["numeric"]["estimate"] - (-1.0)) < 1e-6

    def test_parse_error_exit_code(self, capsys):
        code, out, err = run(capsys, "sum", "poly ratio 1")
        assert code == 2
        assert "syntax error" in err

    def test_arity_error_exit_code(self, capsys):
        code, out, err = run(capsys, "sum", "rec a(n)=a(n-2); init 1")
        assert code == 2


class TestVerifyCommand:
    def test_eq7_holds(self, capsys):
        code, out, _ = run(capsys, "verify", "eq7", "--k", "3")
        assert (code, out) == (0, "holds")

    def test_eq4_json_schema(self, capsys):
        code, out, _ = run(capsys, "verify", "eq4", "--k", "5", "--format", "json")
        payload = json.loads(out)
        assert payload["holds"] is True
        assert payload["identity"] == "eq4"
        assert Fraction(payload["lhs"]) == Fraction(payload["rhs"])

    def test_prop2_with_a(self, capsys):
        code, out, _ = run(capsys, "verify", "prop2", "--k", "6", "--a", "3")
        assert (code, out) == (0, "holds")

    def test_prop2_requires_integer_a(self, capsys):
        code, out, err = run(capsys, "verify", "prop2", "--k", "3", "--a", "1/2")
        assert code == 2

    def test_mixed_with_rational_parameters(self, capsys):
        code, out, _ = run(
            capsys, "verify", "mixed", "--k", "4", "--a", "3", "--q", "1/2"
        )
        assert (code, out) == (0, "holds")

    def test_unknown_identity(self, capsys):
        code, out, err = run(capsys, "verify", "eq9", "--k", "2")
        assert code == 2


class TestUsage:
    def test_missing_subcommand(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate", "1")
        assert code == 2

    def test_csv_record_output(self, capsys):
        code, out, _ = run(capsys, "sigma", "1", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "sum"
        assert lines[1] == "1/4"

    def test_json_round_trips_rationals(self, capsys):
        for argv in (
            ["bernoulli", "12", "--format", "json"],
            ["sigma", "7", "--format", "json"],
            ["verify", "eq6", "--k", "9", "--format", "json"],
        ):
            code = run_command(argv)
            out = capsys.readouterr().out
            payload = json.loads(out)
            assert payload is not None
            assert code == 0
