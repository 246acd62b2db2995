"""
unit.test_main.py
~~~~~~~~~~~~~~~~~

This module contains the unit tests for the `mzv` command line interface.
"""

import json
from unittest import mock

import pytest

from mzvsum import main
from mzvsum.models import CheckRecord
from mzvsum.models import Report


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_harmonic_text(self, capsys):
        code, out, _ = run(capsys, "expand", "--n", "2", "--k", "2", "--kind", "harmonic")
        assert code == 0
        assert out == "2*z2 z2 + 1*z4\n"

    def test_star_single(self, capsys):
        code, out, _ = run(capsys, "expand", "--n", "2", "--k", "1", "--kind", "star")
        assert code == 0
        assert out.strip() == "1*z2"

    def test_json(self, capsys, expansion_fixtures):
        code, out, _ = run(
            capsys, "expand", "--n", "2", "--k", "3", "--kind", "star", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["command"] == "expand"
        assert data["inputs"] == {"n": 2, "k": 3, "kind": "star"}
        assert [int(t["coeff"]["num"]) for t in data["terms"]] == [6, -3, -3, 1]
        expected = next(
            c for c in expansion_fixtures if (c["n"], c["k"], c["kind"]) == (2, 3, "star")
        )
        assert data["terms"] == expected["terms"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["expand", "--n", "0", "--k", "2"],
            ["expand", "--n", "2", "--k", "x"],
            ["expand", "--n", "2"],
            ["expand", "--n", "2", "--k", "2", "--kind", "shuffle"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert "--" in err

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "expand", "--n", "3", "--k", "5", "--format", "json")
        _, second, _ = run(capsys, "expand", "--n", "3", "--k", "5", "--format", "json")
        assert first == second


class TestVerify:
    def test_theorem3(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem3", "--k", "10", "--ell", "4")
        assert code == 0
        assert out.startswith("verify theorem3: pass")
        assert "lhs=102247563 rhs=102247563" in out

    def test_theorem3_json_all_splits(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem3", "--k", "6", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["status"] == "pass"
        assert len(data["details"]) == 5
        assert Report.model_validate(data).status.value == "pass"

    def test_theorem3_bad_split(self, capsys):
        code, out, err = run(capsys, "verify", "theorem3", "--k", "4", "--ell", "4")
        assert code == 2
        assert "ell" in err

    def test_theorem3_needs_a_split(self, capsys):
        code, out, err = run(capsys, "verify", "theorem3", "--k", "1", "--format", "json")
        assert code == 2
        assert out == ""
        assert "k >= 2" in err

    def test_empty_report_fails(self, capsys):
        report = Report(command="verify corollary")
        with mock.patch.object(main, "_run_verification", return_value=report):
            code, out, err = run(capsys, "verify", "corollary", "--format", "json")
        assert code == 1
        assert json.loads(out)["status"] == "fail"
        assert "no checks were run" in err

    def test_main(self, capsys):
        code, out, _ = run(
            capsys, "verify", "main", "--n", "2", "--k", "2", "--trunc", "100000", "--tol", "1e-4"
        )
        assert code == 0
        assert "difference=" in out

    def test_proposition(self, capsys):
        code, out, _ = run(
            capsys, "verify", "proposition", "--n", "3", "--k", "4", "--kind", "star"
        )
        assert code == 0
        assert "star n=3 k=4" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "lemma", "--n", "3", "--samples", "20"],
            ["verify", "corollary", "--k", "4"],
            ["verify", "hurwitz", "--x", "0.5", "--trunc", "5000"],
            ["verify", "tvalues", "--trunc", "5000"],
            ["verify", "sumformula", "--k", "4", "--depth", "2", "--trunc", "20000"],
        ],
    )
    def test_other_targets(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert ": pass" in out.splitlines()[0]

    def test_parallel(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "main",
            "--k",
            "3",
            "--trunc",
            "2000",
            "--parallel",
            "--format",
            "json",
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_inadmissible(self, capsys):
        code, _, err = run(capsys, "verify", "main", "--n", "1", "--k", "2")
        assert code == 2
        assert "last part is >= 2" in err

    def test_failure_reports_worst(self, capsys):
        report = Report(command="verify main")
        report.details.extend(
            [
                CheckRecord.numeric("near", 1.0, 1.01, 1e-3),
                CheckRecord.numeric("far", 1.0, 2.0, 1e-3),
            ]
        )
        with mock.patch.object(main, "_run_verification", return_value=report):
            code, out, err = run(capsys, "verify", "main")
        assert code == 1
        assert out.startswith("verify main: fail")
        assert "worst check far" in err

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "everything")
        assert code == 2
        assert "target" in err


class TestEval:
    def test_zeta(self, capsys, pi):
        code, out, _ = run(capsys, "eval", "zeta", "2", "--trunc", "1000000")
        assert code == 0
        lines = dict(line.split(" = ") for line in out.splitlines())
        assert abs(float(lines["value"]) - pi**2 / 6) <= 2e-6
        assert float(lines["tail_bound"]) == pytest.approx(2e-6)

    def test_t(self, capsys, pi):
        code, out, _ = run(capsys, "eval", "t", "2", "--trunc", "1000000", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["inputs"] == {"kind": "t", "alpha": [2], "trunc": 1000000}
        assert abs(float(data["value"]) - pi**2 / 8) <= 1e-6

    def test_hurwitz_echoes_shift(self, capsys):
        code, out, _ = run(
            capsys, "eval", "hurwitzstar", "2,3", "--x", "1.5", "--trunc", "100", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["inputs"]["x"] == 1.5

    def test_inadmissible(self, capsys):
        code, out, err = run(capsys, "eval", "zeta", "1,1")
        assert code == 2
        assert out == ""
        assert "last part is >= 2" in err

    def test_invalid_part_is_one_line(self, capsys):
        code, out, err = run(capsys, "eval", "zeta", "2,0")
        assert code == 2
        assert out == ""
        assert err == "mzv eval: error: Invalid composition: '2,0'\n"

    @pytest.mark.parametrize(
        "argv",
        [
            ["eval", "zeta", "2,x"],
            ["eval", "zeta", "2", "--trunc", "0"],
            ["eval", "hurwitz", "2", "--x", "-1"],
            ["eval", "gamma", "2"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 2


class TestCount:
    def test_k2(self, capsys):
        code, out, _ = run(capsys, "count", "--k", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[1:3] == ["1\t1", "2\t2"]
        assert lines[-1] == "total F(2) = 3"

    def test_k3_json(self, capsys):
        code, out, _ = run(capsys, "count", "--k", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["total"] == "13"
        assert data["layers"] == [
            {"r": 1, "count": "1"},
            {"r": 2, "count": "6"},
            {"r": 3, "count": "6"},
        ]
        assert data["decomposition"] is None

    def test_split(self, capsys):
        code, out, _ = run(capsys, "count", "--k", "4", "--ell", "2")
        assert code == 0
        assert "lhs = 75" in out
        assert "rhs = 75" in out

    def test_split_json(self, capsys):
        code, out, _ = run(capsys, "count", "--k", "4", "--ell", "2", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["lhs"] == data["rhs"] == "75"
        assert len(data["decomposition"]) == 4
        assert sum(row["contribution"] for row in data["decomposition"]) == 75

    def test_split_out_of_range(self, capsys):
        code, _, err = run(capsys, "count", "--k", "4", "--ell", "5")
        assert code == 2
        assert "ell" in err


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "expand" in out
