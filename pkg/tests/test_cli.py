import json

import pytest
from typer.testing import CliRunner

from honda_verify import __version__
from honda_verify.cli.main import app

try:
    runner = CliRunner(mix_stderr=False)
except TypeError:
    runner = CliRunner()

RAMIFIED_CURVE = "0,s,0,1,1 over Q(sqrt(3))"
X015 = "1,1,1,-10,-10 over Q"


@pytest.fixture(autouse=True)
def _isolated_config(patched_config_paths):
    return patched_config_paths


def _report(result):
    return json.loads(result.stdout)


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_honda_default_scheme():
    result = runner.invoke(app, ["honda"])
    assert result.exit_code == 0, result.stdout
    report = _report(result)
    assert report["status"] == "pass"
    system = report["data"]["honda_system"]
    assert system["L_basis"] == ["e2"]
    assert system["operators"]["V(e2)"] == "-e1"
    assert "runtime_ms" not in report


def test_honda_bad_delta_is_a_usage_error():
    result = runner.invoke(app, ["honda", "--delta", "p,x"])
    assert result.exit_code == 64
    assert "BadParameter" in result.stderr


def test_honda_invalid_prime():
    result = runner.invoke(app, ["honda", "--p", "4", "--r", "1", "--delta", "p"])
    assert result.exit_code == 1
    assert "InvalidSchemeError" in result.stderr


def test_ext_over_gf9():
    result = runner.invoke(app, ["ext", "--k-deg", "2"])
    assert result.exit_code == 0
    report = _report(result)
    assert report["data"]["formula"] == 4
    assert report["data"]["classes"] == 81


def test_ext_enumeration_limit_from_global_option():
    result = runner.invoke(app, ["--enumeration-limit", "2", "ext"])
    assert result.exit_code == 1
    assert "EnumerationBoundExceeded" in result.stderr


def test_maprime():
    ok = runner.invoke(app, ["maprime", "--p", "5", "--e", "4"])
    assert ok.exit_code == 0
    assert _report(ok)["inputs"] == {"p": 5, "e": 4, "k_degree": 1}
    out_of_range = runner.invoke(app, ["maprime", "--p", "3", "--e", "3"])
    assert out_of_range.exit_code == 1
    assert "DegreeOutOfRange" in out_of_range.stderr


def test_x015_requires_assumptions():
    result = runner.invoke(app, ["x015", "--d", "2"])
    assert result.exit_code == 1
    assert "MissingAssumption" in result.stderr


def test_x015_with_inline_and_file_assumptions(tmp_path):
    inline = runner.invoke(
        app,
        [
            "x015",
            "--d",
            "2",
            "--set",
            "rank.X015.Q=0",
            "--set",
            "rank.960G3.Q=0",
            "--set",
            "label.twist.d2=960G3",
        ],
    )
    assert inline.exit_code == 0, inline.stderr
    assert _report(inline)["data"]["torsion_bound"] == 8

    facts = tmp_path / "cremona.txt"
    facts.write_text("rank.X015.Q=0\nrank.4335D3.Q=0\nlabel.twist.d17=4335D3\n")
    from_file = runner.invoke(app, ["x015", "--d", "17", "--assume", str(facts), "--source", "tables"])
    assert from_file.exit_code == 0
    assumptions = _report(from_file)["assumptions"]
    assert {a["source"] for a in assumptions} == {"tables"}


def test_classno_quadratic_and_biquadratic():
    imaginary = runner.invoke(app, ["classno", "Q(sqrt(-6))"])
    assert imaginary.exit_code == 0
    assert _report(imaginary)["data"]["class_number"] == 2

    biquadratic = runner.invoke(app, ["classno", "Q(sqrt(2),sqrt(-3))"])
    assert biquadratic.exit_code == 0
    assert _report(biquadratic)["data"]["discriminant"] == 576


def test_classno_unfinished_search_is_inconclusive():
    result = runner.invoke(app, ["--search-height", "5", "classno", "Q(sqrt(10))"])
    assert result.exit_code == 2
    assert "SearchInconclusive" in result.stderr


def test_sylow2_text_output():
    result = runner.invoke(app, ["--text", "sylow2"])
    assert result.exit_code == 0
    assert "sylow2" in result.stdout
    assert "group_order" in result.stdout


def test_curve_invariants_and_count():
    inv = runner.invoke(app, ["curve", "invariants", "0,0,0,1,0 over Q"])
    assert inv.exit_code == 0
    assert _report(inv)["data"]["j"] == "1728"

    count = runner.invoke(app, ["curve", "count", "0,0,0,1,0 over Q", "-q", "7"])
    assert count.exit_code == 0
    assert _report(count)["data"]["points"] == 8


def test_curve_reduction_and_supersingular():
    red = runner.invoke(app, ["curve", "reduction", X015, "--prime", "5"])
    assert red.exit_code == 0
    assert _report(red)["data"]["type"] == "multiplicative"

    ss = runner.invoke(app, ["curve", "supersingular", RAMIFIED_CURVE, "-q", "3"])
    assert ss.exit_code == 0
    assert _report(ss)["data"]["supersingular"] is True

    bad = runner.invoke(app, ["curve", "supersingular", X015, "-q", "3"])
    assert bad.exit_code == 1
    assert "BadReduction" in bad.stderr


def test_curve_newton():
    result = runner.invoke(app, ["curve", "newton", RAMIFIED_CURVE, "-q", "3"])
    assert result.exit_code == 0
    data = _report(result)["data"]
    assert data["type"] == "Level1Pair"
    assert [3, 1] in data["hull"]


def test_curve_torsion():
    result = runner.invoke(app, ["curve", "torsion", "1,1,1,-10,-10 over Q(sqrt(17))", "--primes", "13,43"])
    assert result.exit_code == 0
    data = _report(result)["data"]
    assert data["torsion_bound"] == 8
    assert data["point_counts"] == {"F13": 16, "F43": 40}

    bad = runner.invoke(app, ["curve", "torsion", X015, "--primes", "a,b"])
    assert bad.exit_code == 64


def test_curve_spec_errors_are_usage_errors():
    result = runner.invoke(app, ["curve", "invariants", "0,0,0,1,0"])
    assert result.exit_code == 64
    assert "CurveSpecError" in result.stderr


def test_verify_all_selected_checks():
    result = runner.invoke(
        app, ["--timings", "verify-all", "-c", "sylow2", "-c", "curve-j1728", "-w", "2"]
    )
    assert result.exit_code == 0
    aggregate = _report(result)
    assert aggregate["counts"] == {"pass": 2, "fail": 0, "inconclusive": 0}
    assert [r["check_id"] for r in aggregate["reports"]] == ["sylow2", "curve-j1728"]
    assert all("runtime_ms" in r for r in aggregate["reports"])


def test_verify_all_unknown_check():
    result = runner.invoke(app, ["verify-all", "-c", "nope"])
    assert result.exit_code == 64
    assert "unknown check" in result.stderr


def test_list_checks():
    result = runner.invoke(app, ["list-checks"])
    assert result.exit_code == 0
    for cid in ("witt-identity", "honda-omega2", "ramified-curve", "classno"):
        assert cid in result.stdout
