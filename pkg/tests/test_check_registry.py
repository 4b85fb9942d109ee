import pytest

from honda_verify.checks import registry
from honda_verify.checks.registry import (
    available_checks,
    get_check,
    get_check_metadata,
    register_check,
    run_all,
    run_check,
)
from honda_verify.exceptions import AlgebraError, ConfigurationError, SearchInconclusive
from honda_verify.reports import Status, VerificationReport
from honda_verify.run_config import RunConfig


@pytest.fixture
def scratch_checks():
    added = []

    def add(id, fn):
        register_check(id, fn, claim=f"claim of {id}", group="test", order=1000 + len(added))
        added.append(id)

    yield add
    for id in added:
        registry._CHECK_REGISTRY.pop(id, None)
        registry._CHECK_INFO.pop(id, None)


def test_builtin_checks_are_registered_in_order():
    ids = available_checks()
    assert ids[:3] == ["witt-identity", "truncation-congruence", "hom-condition"]
    for cid in ("honda-omega2", "ext1", "maprime", "ramified-curve", "x015", "classno", "sylow2"):
        assert cid in ids
    assert get_check_metadata("curve-j1728")["group"] == "supplement"
    assert get_check_metadata("missing") is None


def test_unknown_check():
    with pytest.raises(ConfigurationError):
        get_check("missing")


def test_errors_become_reports(scratch_checks, run_config):
    def broken(cfg):
        raise AlgebraError("boom")

    def unfinished(cfg):
        raise SearchInconclusive("height exhausted")

    scratch_checks("broken", broken)
    scratch_checks("unfinished", unfinished)

    failed = run_check("broken", run_config)
    assert failed.status is Status.FAIL
    assert failed.error == "AlgebraError: boom"
    assert failed.claim == "claim of broken"

    open_ended = run_check("unfinished", run_config)
    assert open_ended.status is Status.INCONCLUSIVE
    assert open_ended.runtime_ms is not None


def test_run_all_keeps_requested_order(scratch_checks):
    def make(id):
        def check(cfg):
            report = VerificationReport(check_id=id, claim=id)
            report.add_check("workers", cfg.workers, cfg.workers)
            return report

        return check

    scratch_checks("first", make("first"))
    scratch_checks("second", make("second"))
    for workers in (1, 2):
        aggregate = run_all(RunConfig(workers=workers), ["second", "first"])
        assert [r.check_id for r in aggregate.reports] == ["second", "first"]
        assert aggregate.status is Status.PASS


@pytest.mark.parametrize(
    "cid",
    ["honda-omega2", "ext1", "maprime", "ramified-curve", "sylow2", "curve-j1728", "field-embeddings"],
)
def test_builtin_check_passes(cid, run_config):
    report = run_check(cid, run_config)
    assert report.status is Status.PASS, [c.name for c in report.checks if c.status is not Status.PASS]
