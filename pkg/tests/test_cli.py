import csv
import io
import json

from qcongruence.cli import main
from qcongruence.report import Report, ReportItem


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_holding_instance_exits_zero(self, capsys):
        code, out, err = run(capsys, "verify", "--n", "5", "--d", "3", "--r", "1")
        assert code == 0 and err == ""
        assert "pass" in out

    def test_failing_instance_exits_one(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--d", "3", "--r", "1")
        assert code == 1
        assert "FAIL" in out

    def test_precondition_error_exits_two(self, capsys):
        code, out, err = run(capsys, "verify", "--n", "6", "--d", "3", "--r", "1")
        assert code == 2 and out == ""
        assert "error:" in err

    def test_missing_argument_exits_two(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "5", "--d", "3")
        assert code == 2

    def test_json_fields(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "5", "--d", "3", "--r", "1",
                           "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"] == {"total": 1, "passed": 1, "failed": 0,
                                  "skipped": 0}
        item = obj["items"][0]
        assert (item["n"], item["d"], item["r"]) == (5, 3, 1)
        assert (item["a"], item["e"], item["sign"]) == (3, -8, -1)
        assert item["checks"] == {"theorem": True}


class TestSteps:
    def test_steps_flag_and_subcommand_agree(self, capsys):
        code1, out1, _ = run(capsys, "verify", "--n", "5", "--d", "3",
                             "--r", "1", "--steps", "--format", "json")
        code2, out2, _ = run(capsys, "steps", "--n", "5", "--d", "3",
                             "--r", "1", "--format", "json")
        assert code1 == code2 == 0

        def strip_ms(s):
            obj = json.loads(s)
            for it in obj["items"]:
                it["ms"] = 0
            return obj

        assert strip_ms(out1) == strip_ms(out2)

    def test_all_step_checks_present(self, capsys):
        _, out, _ = run(capsys, "steps", "--n", "5", "--d", "3", "--r", "1",
                        "--format", "json")
        checks = json.loads(out)["items"][0]["checks"]
        assert set(checks) == {"theorem", "equivalent_form", "binom_shift",
                               "final2", "final3_final4", "harmonic_full",
                               "harmonic_twisted", "expansion"}
        assert all(checks.values())

    def test_failing_instance_localizes_to_expansion(self, capsys):
        code, out, _ = run(capsys, "steps", "--n", "4", "--d", "3", "--r", "1",
                           "--format", "json")
        assert code == 1
        checks = json.loads(out)["items"][0]["checks"]
        failed = {k for k, v in checks.items() if not v}
        assert failed == {"theorem", "expansion"}


class TestSweep:
    def test_small_grid(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n-max", "5", "--d-max", "4",
                           "--r-max", "3", "--format", "json")
        obj = json.loads(out)
        assert obj["summary"]["total"] > 0
        # failures are exactly the even-n instances with odd (a d + r)/n
        failed = [(it["n"], it["d"], it["r"]) for it in obj["items"]
                  if not it["checks"]["theorem"]]
        expected = [(it["n"], it["d"], it["r"]) for it in obj["items"]
                    if it["n"] % 2 == 0
                    and ((it["a"] * it["d"] + it["r"]) // it["n"]) % 2 == 1]
        assert failed == expected and failed
        assert code == 1

    def test_degenerate_flagging(self, capsys):
        code, out, _ = run(capsys, "sweep", "--n-max", "2", "--d-max", "3",
                           "--r-max", "3", "--include-degenerate",
                           "--format", "json")
        assert code == 1  # (2, 3, 3) is the known degenerate failure
        items = json.loads(out)["items"]
        flagged = [it for it in items if "degenerate" in it["flags"]]
        assert [(it["n"], it["d"], it["r"]) for it in flagged] == [(2, 3, 3)]

    def test_bad_bounds_exit_two(self, capsys):
        code, _, err = run(capsys, "sweep", "--n-max", "1", "--d-max", "4",
                           "--r-max", "3")
        assert code == 2 and "error:" in err


class TestClassical:
    def test_comma_list_and_skips(self, capsys):
        code, out, _ = run(capsys, "classical", "--alpha", "1/2,1/5",
                           "--p-max", "13", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"]["failed"] == 0
        skipped = [it for it in obj["items"] if "skipped" in it["flags"]]
        # p = 5 divides the denominator of 1/5
        assert [(it["alpha"], it["p"]) for it in skipped] == [("1/5", 5)]

    def test_repeatable_alpha(self, capsys):
        code, out, _ = run(capsys, "classical", "--alpha", "1/2", "--alpha",
                           "3/4", "--p-max", "7", "--format", "json")
        assert code == 0
        alphas = {it["alpha"] for it in json.loads(out)["items"]}
        assert alphas == {"1/2", "3/4"}


class TestSpecial:
    def test_each_case(self, capsys):
        for case in ("qmor2", "qmor3", "qmor4", "qmor6"):
            code, out, _ = run(capsys, "special", "--case", case,
                               "--p-max", "13", "--format", "json")
            assert code == 0, case
            assert json.loads(out)["summary"]["failed"] == 0, case

    def test_qmor2_includes_three(self, capsys):
        _, out, _ = run(capsys, "special", "--case", "qmor2", "--p-max", "13",
                        "--format", "json")
        assert [it["p"] for it in json.loads(out)["items"]] == [3, 5, 7, 11, 13]


class TestCyclotomic:
    def test_phi_six(self, capsys):
        code, out, _ = run(capsys, "cyclotomic", "--n", "6", "--format", "json")
        assert code == 0
        item = json.loads(out)["items"][0]
        assert item["degree"] == 2
        assert item["coefficients"] == "[1 -1 1]"

    def test_phi_105_has_coefficient_minus_two(self, capsys):
        _, out, _ = run(capsys, "cyclotomic", "--n", "105", "--format", "json")
        coeffs = json.loads(out)["items"][0]["coefficients"]
        assert " -2 " in coeffs


class TestSelftest:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run(capsys, "selftest", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"]["failed"] == 0
        assert obj["summary"]["total"] == 6


class TestDeterminism:
    def test_json_byte_identical_modulo_timing(self, capsys):
        argv = ("sweep", "--n-max", "5", "--d-max", "3", "--r-max", "2",
                "--format", "json")
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)

        def normalize(s):
            obj = json.loads(s)
            for it in obj["items"]:
                it["ms"] = 0
            return json.dumps(obj, indent=2)

        assert normalize(out1) == normalize(out2)


class TestRenderings:
    def test_csv_parses_with_header(self, capsys):
        _, out, _ = run(capsys, "verify", "--n", "5", "--d", "3", "--r", "1",
                        "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "d", "r", "a", "e", "sign", "flags", "checks",
                           "ms", "status"]
        assert rows[1][:6] == ["5", "3", "1", "3", "-8", "-1"]
        assert rows[1][-1] == "pass"

    def test_text_has_summary_line(self, capsys):
        _, out, _ = run(capsys, "verify", "--n", "5", "--d", "3", "--r", "1")
        assert out.splitlines()[-1] == \
            "total 1  passed 1  failed 0  skipped 0"


class TestReportObjects:
    def test_skipped_item_counts(self):
        rep = Report(["x"])
        rep.items.append(ReportItem({"x": 1}, {"c": True}))
        rep.items.append(ReportItem({"x": 2}, {}, skipped=True))
        rep.items.append(ReportItem({"x": 3}, {"c": False}))
        assert rep.summary == {"total": 3, "passed": 1, "failed": 1,
                               "skipped": 1}
        assert rep.failed == 1

    def test_unknown_format_rejected(self):
        import pytest
        with pytest.raises(ValueError):
            Report(["x"]).render("yaml")
