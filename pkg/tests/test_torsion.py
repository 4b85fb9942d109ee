import pytest

from honda_verify.checks.builtin import CREMONA_ASSUMPTIONS
from honda_verify.curves import (
    LocalPrime,
    QuadraticField,
    count_points,
    parse_assumptions,
    rational_points,
    torsion_bound,
    x015_model,
    x015_report,
    x0_cusp_count,
)
from honda_verify.curves.sylow2 import C, TAU, generated_group, order, sylow2_check
from honda_verify.exceptions import (
    BadReductionPrime,
    CurveError,
    MissingAssumption,
    NoBoundPrimes,
    PrimeNotSplit,
)
from honda_verify.reports import Status


def test_point_counts_over_split_primes():
    E2 = x015_model(QuadraticField(2))
    assert count_points(E2, LocalPrime(E2.base, 7)) == 8
    E17 = x015_model(QuadraticField(17))
    assert count_points(E17, LocalPrime(E17.base, 13)) == 16
    assert count_points(E17, LocalPrime(E17.base, 43)) == 40
    assert torsion_bound(E17, [13, 43]) == 8


def test_torsion_bound_errors():
    E = x015_model(QuadraticField(2))
    with pytest.raises(NoBoundPrimes):
        torsion_bound(E, [])
    with pytest.raises(PrimeNotSplit):
        torsion_bound(E, [5])
    with pytest.raises(BadReductionPrime):
        torsion_bound(x015_model(), [3])


def test_rational_points_and_cusps():
    E = x015_model()
    points = rational_points(E, 50)
    assert len(points) == 8
    assert None in points
    assert all(P is None or E.contains(*P) for P in points)
    assert x0_cusp_count(15) == 4


@pytest.mark.parametrize("d", [2, 17])
def test_x015_report_passes_with_cremona_data(d):
    report = x015_report(d, CREMONA_ASSUMPTIONS[d])
    assert report.status is Status.PASS
    assert {a.key for a in report.assumptions} == set(CREMONA_ASSUMPTIONS[d])
    assert len(report.data["points"]) == 8


def test_x015_report_without_assumptions():
    with pytest.raises(MissingAssumption):
        x015_report(2, {"rank.X015.Q": "0"})
    with pytest.raises(CurveError):
        x015_report(3, {})


def test_positive_rank_changes_the_conclusion():
    facts = dict(CREMONA_ASSUMPTIONS[2], **{"rank.960G3.Q": "1"})
    report = x015_report(2, facts)
    assert report.status is Status.FAIL
    failing = {c.name for c in report.checks if c.status is Status.FAIL}
    assert failing == {"ranks_zero", "conclusion"}


def test_parse_assumptions(tmp_path):
    path = tmp_path / "cremona.txt"
    path.write_text("# ranks\nrank.X015.Q = 0\n\nlabel.twist.d2=960G3  # twist\n")
    assert parse_assumptions(path) == {"rank.X015.Q": "0", "label.twist.d2": "960G3"}
    assert parse_assumptions({"rank.X015.Q": 0}) == {"rank.X015.Q": "0"}
    assert parse_assumptions(None) == {}
    with pytest.raises(MissingAssumption):
        parse_assumptions(tmp_path / "missing.txt")
    bad = tmp_path / "bad.txt"
    bad.write_text("rank.X015.Q\n")
    with pytest.raises(MissingAssumption):
        parse_assumptions(bad)


def test_sylow2_subgroup():
    assert order(TAU) == 8
    assert order(C) == 2
    assert len(generated_group([C, TAU])) == 16
    report = sylow2_check()
    assert report.status is Status.PASS
    assert len(report.checks) == 10
