"""CLI surface: subcommand outputs, formats, exit codes, determinism."""

import json

from fibquat.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_narayana_text(self, capsys):
        code, out, _ = invoke(capsys, "seq", "--kind", "narayana", "--from", "0", "--to", "8")
        assert code == 0
        assert out.strip() == "0 1 1 1 2 3 4 6 9"

    def test_fib_json(self, capsys):
        code, out, _ = invoke(
            capsys, "seq", "--kind", "fib", "--from", "-4", "--to", "4",
            "--format", "json",
        )
        assert code == 0
        document = json.loads(out)
        assert document["values"] == [-3, 2, -1, 1, 0, 1, 1, 2, 3]

    def test_genfib_needs_seeds(self, capsys):
        code, _, err = invoke(capsys, "seq", "--kind", "genfib", "--from", "0", "--to", "5")
        assert code == 2
        assert "requires --p and --q" in err

    def test_genfib_csv(self, capsys):
        code, out, _ = invoke(
            capsys, "seq", "--kind", "genfib", "--from", "0", "--to", "5",
            "--p", "2", "--q", "1", "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,value"
        assert lines[1] == "0,2"
        assert lines[-1] == "5,11"

    def test_bad_range(self, capsys):
        code, _, err = invoke(capsys, "seq", "--kind", "fib", "--from", "5", "--to", "1")
        assert code == 2


class TestQuat:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, "quat", "--kind", "narayana", "--n", "2")
        assert code == 0
        assert out.strip() == "1 + 1*e2 + 2*e3 + 3*e4  [H(1, 1)]"

    def test_json_rational_params(self, capsys):
        code, out, _ = invoke(
            capsys, "quat", "--kind", "fib", "--n", "0",
            "--beta1=-1", "--beta2=-1/3", "--format", "json",
        )
        assert code == 0
        document = json.loads(out)
        assert document["coefficients"] == ["0", "1", "1", "2"]
        assert document["beta2"] == "-1/3"

    def test_bare_negative_integer_flag(self, capsys):
        # plain negative integers work without the = form
        code, out, _ = invoke(
            capsys, "quat", "--kind", "fib", "--n", "-4", "--beta1", "-1",
            "--format", "json",
        )
        assert code == 0
        document = json.loads(out)
        assert document["beta1"] == "-1"
        assert document["coefficients"] == ["-3", "2", "-1", "1"]


class TestNorm:
    def test_direct_default(self, capsys):
        code, out, _ = invoke(capsys, "norm", "--kind", "fib", "--n", "0")
        assert code == 0
        assert out.strip() == "6"

    def test_formula_method(self, capsys):
        code, out, _ = invoke(
            capsys, "norm", "--kind", "fib", "--n", "0", "--method", "formula",
            "--beta1", "2", "--beta2", "3",
        )
        assert code == 0
        assert out.strip() == "29"

    def test_check_match(self, capsys):
        code, out, _ = invoke(
            capsys, "norm", "--kind", "genfib", "--n", "3", "--p", "2", "--q", "1",
            "--check", "--format", "json",
        )
        assert code == 0
        document = json.loads(out)
        assert document["direct"] == "510"
        assert document["formula"] == "510"
        assert document["match"] is True

    def test_zero_norm_is_reportable(self, capsys):
        code, out, _ = invoke(
            capsys, "norm", "--kind", "fib", "--n", "0",
            "--beta1=-1", "--beta2=-1/3",
        )
        assert code == 0
        assert out.strip() == "0"

    def test_bad_rational_flag(self, capsys):
        code, _, err = invoke(
            capsys, "norm", "--kind", "fib", "--n", "0", "--beta1", "x/y"
        )
        assert code == 2
        assert "bad rational literal" in err


class TestAudit:
    def test_single_pass(self, capsys):
        code, out, _ = invoke(capsys, "audit", "--id", "EQ_1_2", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["failures"] == 0
        assert document["id"] == "EQ_1_2"

    def test_swamy_failure_report(self, capsys):
        code, out, _ = invoke(
            capsys, "audit", "--id", "SWAMY_AS_STATED", "--format", "json"
        )
        assert code == 1
        document = json.loads(out)
        assert set(document) == {
            "id", "paper_ref", "mode", "provenance", "seed",
            "instances_run", "passes", "failures", "first_counterexample",
            "elapsed_ms",
        }
        cex = document["first_counterexample"]
        assert cex["inputs"] == {"p": "0", "q": "1", "n": "0"}
        assert cex["lhs"] == "2"
        assert cex["rhs"] == "6"

    def test_no_timing_byte_determinism(self, capsys):
        args = ("audit", "--id", "THM_2_4", "--n-max", "8", "--format", "json",
                "--no-timing")
        code1, out1, _ = invoke(capsys, *args)
        code2, out2, _ = invoke(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "elapsed_ms" not in out1

    def test_all_json(self, capsys):
        code, out, _ = invoke(
            capsys, "audit", "--all", "--n-max", "5", "--format", "json",
            "--no-timing",
        )
        assert code == 0
        document = json.loads(out)
        assert document["ok"] is True
        assert document["seed"] == 1729
        assert len(document["reports"]) >= 28
        assert document["verdicts"]["SWAMY_AS_STATED"] == "transcription-issue"

    def test_all_byte_determinism(self, capsys):
        args = ("audit", "--all", "--n-max", "5", "--format", "json", "--no-timing")
        _, out1, _ = invoke(capsys, *args)
        _, out2, _ = invoke(capsys, *args)
        assert out1 == out2

    def test_all_csv_header(self, capsys):
        code, out, _ = invoke(
            capsys, "audit", "--all", "--n-max", "5", "--format", "csv",
            "--no-timing",
        )
        assert code == 0
        header = out.splitlines()[0]
        assert header == (
            "id,paper_ref,mode,provenance,seed,instances_run,passes,failures,"
            "first_counterexample"
        )

    def test_all_csv_byte_determinism(self, capsys):
        args = ("audit", "--all", "--n-max", "5", "--format", "csv", "--no-timing")
        _, out1, _ = invoke(capsys, *args)
        _, out2, _ = invoke(capsys, *args)
        assert out1 == out2

    def test_list(self, capsys):
        code, out, _ = invoke(capsys, "audit", "--list")
        assert code == 0
        assert "SWAMY_AS_STATED" in out
        assert "corrected-variant" in out

    def test_provenance_filter(self, capsys):
        code, out, _ = invoke(
            capsys, "audit", "--all", "--provenance", "corrected-variant",
            "--n-max", "5", "--format", "json", "--no-timing",
        )
        assert code == 0
        document = json.loads(out)
        assert all(r["provenance"] == "corrected-variant" for r in document["reports"])
        assert all(r["failures"] == 0 for r in document["reports"])

    def test_unknown_id(self, capsys):
        code, _, err = invoke(capsys, "audit", "--id", "NOPE")
        assert code == 2
        assert "NOPE" in err

    def test_custom_seed_embedded(self, capsys):
        code, out, _ = invoke(
            capsys, "audit", "--id", "THM_2_4", "--seed", "7", "--n-max", "5",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["seed"] == 7


class TestThreshold:
    def test_division_algebra(self, capsys):
        code, out, _ = invoke(capsys, "threshold", "--n-max", "50", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["sign_of_E"] == 1
        assert document["empirical_n0"] == 0
        assert document["zero_norm_indices"] == []

    def test_split_algebra(self, capsys):
        code, out, _ = invoke(
            capsys, "threshold", "--beta1=-1", "--beta2=-1/3",
            "--n-max", "50", "--format", "json",
        )
        assert code == 0
        document = json.loads(out)
        assert document["empirical_n0"] == 1
        assert document["zero_norm_indices"] == [0]

    def test_degenerate_seeds(self, capsys):
        code, _, err = invoke(capsys, "threshold", "--p", "0", "--q", "0")
        assert code == 1
        assert "vanishes" in err

    def test_exhausted_scan(self, capsys):
        code, _, err = invoke(
            capsys, "threshold", "--beta1=-1", "--beta2", "0", "--n-max", "1"
        )
        assert code == 1


class TestCows:
    def test_twenty_years(self, capsys):
        code, out, _ = invoke(capsys, "cows", "--years", "20")
        assert code == 0
        assert out.strip() == "2745"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "cows", "--years", "7", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"years": 7, "herd": 19}

    def test_rejects_non_positive(self, capsys):
        code, _, _ = invoke(capsys, "cows", "--years", "0")
        assert code == 2


class TestGf:
    def test_default_degree(self, capsys):
        code, out, _ = invoke(capsys, "gf", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document == {
            "degree_checked": 300,
            "max_abs_residual_coefficient": [0, 0, 0, 0],
            "ok": True,
        }

    def test_degree_too_small(self, capsys):
        code, _, err = invoke(capsys, "gf", "--degree", "1")
        assert code == 2


class TestBinet:
    def test_narayana_scalar(self, capsys):
        code, out, _ = invoke(capsys, "binet", "--n", "10", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["exact"] == 19
        assert abs(document["value"] - 19) < 1e-9

    def test_fib(self, capsys):
        code, out, _ = invoke(
            capsys, "binet", "--kind", "fib", "--n", "10", "--format", "json"
        )
        assert code == 0
        document = json.loads(out)
        assert document["exact"] == 55

    def test_quat(self, capsys):
        code, out, _ = invoke(capsys, "binet", "--n", "2", "--quat", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["exact"] == [1, 1, 2, 3]

    def test_quat_needs_narayana(self, capsys):
        code, _, _ = invoke(capsys, "binet", "--kind", "fib", "--n", "2", "--quat")
        assert code == 2

    def test_guard_exit(self, capsys):
        code, _, err = invoke(capsys, "binet", "--kind", "fib", "--n", "100")
        assert code == 2
        assert "|n| <= 70" in err


class TestUsage:
    def test_unknown_flag(self, capsys):
        code, _, _ = invoke(capsys, "cows", "--bogus")
        assert code == 2

    def test_missing_subcommand(self, capsys):
        code, _, _ = invoke(capsys)
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, out, _ = invoke(capsys, "--help")
        assert code == 0
        assert "seq" in out and "audit" in out and "cows" in out
