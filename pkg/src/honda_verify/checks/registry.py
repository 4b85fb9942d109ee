"""Registry of named verification checks run by ``verify-all``."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from tqdm import tqdm

from ..exceptions import ConfigurationError, HondaVerifyError, SearchInconclusive
from ..logging_utils import timed
from ..reports import AggregateReport, VerificationReport
from ..run_config import RunConfig

CheckFn = Callable[[RunConfig], VerificationReport]


@dataclass(frozen=True)
class CheckInfo:
    claim: str
    group: str
    order: int


_CHECK_REGISTRY: Dict[str, CheckFn] = {}
_CHECK_INFO: Dict[str, CheckInfo] = {}


def _ensure_builtin_loaded() -> None:
    from . import builtin  # noqa: F401


def register_check(
    id: str,
    fn: CheckFn,
    *,
    claim: str,
    group: str = "acceptance",
    order: Optional[int] = None,
) -> None:
    """Register ``fn`` under ``id``; later registrations replace earlier ones."""
    if id in _CHECK_INFO:
        logging.debug("check %s re-registered", id)
    _CHECK_REGISTRY[id] = fn
    _CHECK_INFO[id] = CheckInfo(claim, group, len(_CHECK_INFO) if order is None else order)


def get_check(id: str) -> CheckFn:
    _ensure_builtin_loaded()
    try:
        return _CHECK_REGISTRY[id]
    except KeyError:
        raise ConfigurationError(
            f"unknown check '{id}'; available: {', '.join(available_checks())}"
        ) from None


def available_checks() -> List[str]:
    """Check ids in run order."""
    _ensure_builtin_loaded()
    return sorted(_CHECK_REGISTRY, key=lambda k: (_CHECK_INFO[k].order, k))


def get_check_metadata(id: str) -> Optional[Dict[str, object]]:
    _ensure_builtin_loaded()
    info = _CHECK_INFO.get(id)
    if info is None:
        return None
    return {"check_id": id, "claim": info.claim, "group": info.group, "order": info.order}


def run_check(id: str, cfg: RunConfig) -> VerificationReport:
    """Run one check; library errors become a failed report instead of propagating."""
    fn = get_check(id)
    with timed(f"check {id}") as t:
        try:
            report = fn(cfg)
        except SearchInconclusive as exc:
            logging.warning("check %s inconclusive: %s", id, exc)
            report = VerificationReport(check_id=id, claim=_CHECK_INFO[id].claim)
            report.add_inconclusive("search", str(exc))
        except HondaVerifyError as exc:
            logging.warning("check %s raised %s: %s", id, type(exc).__name__, exc)
            report = VerificationReport(
                check_id=id,
                claim=_CHECK_INFO[id].claim,
                error=f"{type(exc).__name__}: {exc}",
            )
    report.runtime_ms = round(t["ms"], 3)
    logging.info("check %s: %s", id, report.status.value)
    return report


def run_all(
    cfg: RunConfig, ids: Optional[List[str]] = None, progress: bool = False
) -> AggregateReport:
    """Run checks (all by default) and collect them in registration order."""
    ids = available_checks() if ids is None else ids
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(run_check, i, cfg) for i in ids]
            reports = [f.result() for f in tqdm(futures, desc="checks", disable=not progress)]
    else:
        reports = [run_check(i, cfg) for i in tqdm(ids, desc="checks", disable=not progress)]
    return AggregateReport(reports=reports)


__all__ = [
    "CheckInfo",
    "available_checks",
    "get_check",
    "get_check_metadata",
    "register_check",
    "run_all",
    "run_check",
]
