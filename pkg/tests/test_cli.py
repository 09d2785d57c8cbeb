"""Command-line interface: subcommands, formats, exit codes."""

import json

import pytest

from overpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


class TestPoly:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "poly", "--n", "1")
        assert code == 0 and out == "x + y"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "poly", "--n", "2", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["arity"] == 3 and len(obj["terms"]) == 4

    def test_custom_var_names(self, capsys):
        code, out, _ = run(capsys, "poly", "--n", "1", "--vars", "a,b,c")
        assert code == 0 and out == "a + b"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "p.txt"
        code, out, _ = run(capsys, "poly", "--n", "1", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "x + y\n"


class TestQR:
    def test_eval_all_ones(self, capsys):
        code, out, _ = run(capsys, "qr", "--kind", "Q", "--n", "2",
                           "--eval-all-ones")
        assert code == 0 and out == "13"
        code, out, _ = run(capsys, "qr", "--kind", "R", "--n", "2",
                           "--eval-all-ones")
        assert code == 0 and out == "5"

    def test_polynomial_output(self, capsys):
        code, out, _ = run(capsys, "qr", "--kind", "R", "--n", "1")
        assert code == 0 and out == "x + y"


class TestSpecial:
    def test_qx(self, capsys):
        code, out, _ = run(capsys, "special", "--family", "qx", "--n", "2")
        assert code == 0 and out == "3*z^2 + 7*z + 3"

    def test_q1_factor(self, capsys):
        code, out, _ = run(capsys, "special", "--family", "q1", "--n", "3",
                           "--alpha", "1", "--beta", "1", "--factor")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 2

    def test_factor_unsupported_pair(self, capsys):
        code, _out, err = run(capsys, "special", "--family", "q1", "--n", "3",
                              "--alpha", "2", "--beta", "3", "--factor")
        assert code == 2 and "available" in err

    def test_invalid_argument_value(self, capsys):
        code, _out, err = run(capsys, "special", "--family", "q1", "--n", "2",
                              "--alpha", "0", "--beta", "0")
        assert code == 1 and "error:" in err


class TestEnum:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "enum", "--n", "4", "--count")
        assert code == 0 and out == "8"

    def test_listing(self, capsys):
        code, out, _ = run(capsys, "enum", "--n", "3")
        assert code == 0
        assert sorted(out.splitlines()) == sorted(
            ["(~2,~1)", "(~2,1)", "(2,~1)", "(2,1)", "(~1,1,1)"])

    def test_other_base(self, capsys):
        code, out, _ = run(capsys, "enum", "--b", "3", "--lambda", "3",
                           "--n", "2", "--count")
        assert code == 0 and out == "2"


class TestZeros:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "zeros", "--family", "qtilde", "--n", "2")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "re,im,residual"
        assert len(lines) == 3
        assert all(line.startswith("-2,") for line in lines[1:])

    def test_json(self, capsys):
        code, out, _ = run(capsys, "zeros", "--family", "zz", "--n", "3",
                           "--format", "json")
        assert code == 0
        pts = json.loads(out)
        assert len(pts) == 3
        assert {"re", "im", "residual"} <= set(pts[0])

    def test_degenerate_family(self, capsys):
        code, out, _ = run(capsys, "zeros", "--family", "rtilde", "--n", "1")
        assert code == 0 and out.splitlines() == ["re,im,residual"]


class TestCurve:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "curve", "--alpha", "1", "--beta", "0",
                           "--format", "text")
        assert code == 0 and out == "x + 1"

    def test_json_default(self, capsys):
        code, out, _ = run(capsys, "curve", "--alpha", "1", "--beta", "1")
        assert code == 0
        obj = json.loads(out)
        assert obj["arity"] == 2

    def test_samples_csv(self, capsys):
        code, out, _ = run(capsys, "curve", "--alpha", "1", "--beta", "2",
                           "--samples", "8")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "x,y" and len(lines) >= 2

    def test_catalogue_check(self, capsys):
        code, out, _ = run(capsys, "curve", "--check-catalog")
        assert code == 0 and out == "PASS curve catalogue"

    def test_missing_required_pair(self, capsys):
        code, _out, err = run(capsys, "curve")
        assert code == 2 and "requires" in err


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "recursion")
        assert code == 0 and out == "PASS digit-recursion table"

    def test_reduced_scale_multi(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "counting",
                           "--nmax", "6")
        assert code == 0 and out == "PASS counting closed forms"


class TestArgErrors:
    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["poly", "--n", "1", "--format", "yaml"])
        assert exc.value.code == 2

    def test_missing_required_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["poly"])
        assert exc.value.code == 2

    def test_runtime_error_exits_1(self, capsys):
        code, _out, err = run(capsys, "poly", "--n", "-3")
        assert code == 1 and "error:" in err
