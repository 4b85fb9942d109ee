import json

from honda_verify.reports import (
    AggregateReport,
    Provenance,
    Status,
    VerificationReport,
    exit_code_for,
)


def _report(**kwargs):
    return VerificationReport(check_id="demo", claim="a demo claim", **kwargs)


def test_status_follows_checks():
    report = _report()
    assert report.status is Status.PASS
    report.add_check("same", 3, 3)
    assert report.status is Status.PASS
    report.add_inconclusive("search", "ran out of height")
    assert report.status is Status.INCONCLUSIVE
    report.add_check("different", 2, 3, Provenance.REFERENCE)
    assert report.status is Status.FAIL


def test_error_means_fail():
    assert _report(error="AlgebraError: boom").status is Status.FAIL


def test_merge_prefixes_names_and_keeps_assumptions():
    outer, inner = _report(), _report()
    inner.add_check("x", 1, 1)
    inner.assume("rank.X015.Q", "0", "tables")
    outer.merge(inner, "sub")
    outer.merge(inner, "again")
    assert [c.name for c in outer.checks] == ["sub.x", "again.x"]
    assert len(outer.assumptions) == 1


def test_json_is_deterministic_and_hides_timings():
    report = _report(inputs={"pair": (3, 1), "set": {2, 1}})
    report.add_check("pair", (1, 2), (1, 2))
    report.runtime_ms = 1.5
    payload = json.loads(report.to_json())
    assert payload["status"] == "pass"
    assert payload["inputs"] == {"pair": [3, 1], "set": [1, 2]}
    assert "runtime_ms" not in payload
    assert "error" not in payload
    assert json.loads(report.to_json(include_timings=True))["runtime_ms"] == 1.5
    assert report.to_json() == report.to_json()


def test_aggregate_counts_and_exit_codes():
    ok, bad = _report(), _report(error="x")
    maybe = _report()
    maybe.add_inconclusive("search", "height")
    aggregate = AggregateReport(reports=[ok, maybe])
    assert aggregate.status is Status.INCONCLUSIVE
    assert exit_code_for(aggregate.status) == 2
    aggregate.reports.append(bad)
    assert aggregate.counts == {"pass": 1, "fail": 1, "inconclusive": 1}
    assert exit_code_for(aggregate.status) == 1
    assert exit_code_for(Status.PASS) == 0
