import json

import pytest

from diracsym.cli import main
from diracsym.report import emit, report_from_obj, report_to_obj, run_suite


def test_run_suite_all_passes():
    report = run_suite("all", seed=11)
    assert report.failed == 0
    assert report.all_passed
    assert len(report.checks) > 25


def test_reports_are_deterministic():
    # the full-suite byte-identity requirement is exercised in the acceptance tests
    for suite in ("solutions", "symmetries", "lorentz"):
        a = emit(run_suite(suite, seed=5), "json")
        b = emit(run_suite(suite, seed=5), "json")
        assert a == b


def test_different_seed_changes_nothing_about_status():
    r = run_suite("solutions", seed=99)
    assert r.all_passed


def test_json_round_trip():
    report = run_suite("lorentz", seed=3)
    obj = json.loads(emit(report, "json"))
    assert report_from_obj(obj) == report
    assert report_to_obj(report_from_obj(obj)) == obj


def test_every_check_has_anchor():
    report = run_suite("all", seed=1)
    for c in report.checks:
        assert c.anchor
        assert c.status in ("pass", "fail")


def test_markdown_has_one_row_per_check():
    report = run_suite("symmetries", seed=4)
    text = emit(report, "md")
    rows = [l for l in text.splitlines() if l.startswith("| symmetries")]
    assert len(rows) == len(report.checks)


def test_empty_report_is_a_valid_document():
    from diracsym.report import SuiteReport

    empty = SuiteReport(suite="all", seed=0, representation="dirac", version="0.1.0", checks=())
    obj = json.loads(emit(empty, "json"))
    assert obj["summary"] == {"total": 0, "passed": 0, "failed": 0}
    assert report_from_obj(obj) == empty
    assert emit(empty, "md").startswith("# verification report")


def test_unknown_suite_and_format():
    with pytest.raises(ValueError):
        run_suite("bogus")
    with pytest.raises(ValueError):
        emit(run_suite("lorentz", seed=0), "yaml")


def test_majorana_and_weyl_suites_pass():
    for rep in ("majorana", "weyl"):
        r = run_suite("symmetries", seed=2, rep=rep)
        assert r.all_passed
        r = run_suite("clifford", seed=2, rep=rep)
        assert r.all_passed


# ------------------------------------------------------------------- CLI


def test_cli_canon(capsys):
    assert main(["canon", "g2*g1"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "-1 g1*g2"


def test_cli_canon_nonzero_order(capsys):
    assert main(["canon", "g0*g1 + g1*g0 + g3 + 2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["2 1", "1 g3"]


def test_cli_canon_zero(capsys):
    assert main(["canon", "g5*g0 + g0*g5"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_canon_error_exit_code(capsys):
    assert main(["canon", "g9"]) == 2
    assert "unknown identifier" in capsys.readouterr().err


def test_cli_state_json(capsys):
    assert main(["state", "--family", "psi1+", "--p", "0,0,3/4", "--m", "1", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["E"] == {"exact": "5/4"}
    assert obj["bispinor"][2] == {"re": "1/3", "im": "0"}


def test_cli_state_human(capsys):
    assert main(["state", "--family", "chi2+", "--p", "0,0,3/4", "--m", "1"]) == 0
    out = capsys.readouterr().out
    assert "chi2+" in out and "exponent sign: -1" in out


def test_cli_state_bad_momentum(capsys):
    assert main(["state", "--family", "psi1+", "--p", "0,0", "--m", "1"]) == 2


def test_cli_classify_state_lines(capsys):
    assert main(["classify-state", "--family", "chi1+", "--p", "0,0,3/4", "--m", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    objs = [json.loads(l) for l in lines]
    assert {o["equation"] for o in objs} == {"gamma.p-m", "gamma.p+m"}
    assert {o["reading"] for o in objs} == {
        "feynman-stueckelberg",
        "negative-mass-energy",
    }
    assert all(o["satisfied"] and o["residual_norm"] == 0 for o in objs)


def test_cli_verify_exit_zero_and_byte_identical(capsys):
    assert main(["verify", "symmetries", "--seed", "8"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "symmetries", "--seed", "8"]) == 0
    second = capsys.readouterr().out
    assert first == second
    obj = json.loads(first)
    assert obj["summary"]["failed"] == 0


def test_cli_verify_reference_momentum(capsys):
    assert main(["verify", "symmetries", "--p", "0,5/12,0", "--m", "1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["summary"]["failed"] == 0
    assert any("momenta=23" in c["detail"] for c in obj["checks"])


def test_cli_verify_reference_requires_both_flags(capsys):
    assert main(["verify", "symmetries", "--p", "0,0,3/4"]) == 2


def test_cli_verify_markdown_format(capsys):
    assert main(["verify", "lorentz", "--seed", "2", "--format", "md"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# verification report: lorentz")


def test_cli_verify_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("DIRACSYM_FORMAT", "md")
    assert main(["verify", "lorentz", "--seed", "2"]) == 0
    assert capsys.readouterr().out.startswith("# verification report")


def test_cli_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["verify", "clifford", "--seed", "1", "--out", str(target)]) == 0
    capsys.readouterr()
    obj = json.loads(target.read_text())
    assert obj["suite"] == "clifford"


def test_cli_classify_lorentz(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps([1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1]))
    assert main(["classify-lorentz", "--matrix", str(f)]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"label": "L-up", "det_sign": -1, "time_sign": 1}


def test_cli_classify_lorentz_rejects_non_lorentz(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps([2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]))
    assert main(["classify-lorentz", "--matrix", str(f)]) == 1


def test_cli_group_scan(capsys):
    assert main(["group-scan"]) == 0
    out = capsys.readouterr().out
    assert "5 of 15" in out
    assert out.count("| yes |") == 5
    assert out.count("| no |") == 10


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus-suite"])
    assert exc.value.code == 2
