"""Structured verification reports and their deterministic JSON form."""

from __future__ import annotations

import json
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class Provenance(str, Enum):
    REFERENCE = "reference"  # value stated in the source literature
    DERIVED = "derived"  # value recomputed independently
    TRIVIAL = "trivial"  # identity or degenerate case


class CheckItem(BaseModel):
    name: str
    computed: Any = None
    expected: Any = None
    provenance: Provenance = Provenance.DERIVED
    status: Status = Status.PASS
    detail: Optional[str] = None


class Assumption(BaseModel):
    key: str
    value: Any
    source: str


def _jsonable(value: Any) -> Any:
    """Turn tuples, sets and sympy numbers into plain JSON values."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((_jsonable(v) for v in value), key=repr)
    if isinstance(value, Enum):
        return value.value
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class VerificationReport(BaseModel):
    check_id: str
    claim: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckItem] = Field(default_factory=list)
    assumptions: List[Assumption] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    runtime_ms: Optional[float] = None
    error: Optional[str] = None

    def add_check(
        self,
        name: str,
        computed: Any,
        expected: Any,
        provenance: Provenance = Provenance.DERIVED,
        detail: Optional[str] = None,
    ) -> CheckItem:
        """Record an exact comparison; the item passes iff ``computed == expected``."""
        item = CheckItem(
            name=name,
            computed=_jsonable(computed),
            expected=_jsonable(expected),
            provenance=provenance,
            status=Status.PASS if computed == expected else Status.FAIL,
            detail=detail,
        )
        self.checks.append(item)
        return item

    def add_inconclusive(self, name: str, detail: str, computed: Any = None) -> CheckItem:
        item = CheckItem(
            name=name,
            computed=_jsonable(computed),
            status=Status.INCONCLUSIVE,
            detail=detail,
        )
        self.checks.append(item)
        return item

    def merge(self, other: "VerificationReport", prefix: Optional[str] = None) -> None:
        """Fold the items and assumptions of ``other`` into this report."""
        for item in other.checks:
            name = f"{prefix}.{item.name}" if prefix else item.name
            self.checks.append(item.model_copy(update={"name": name}))
        for a in other.assumptions:
            self.assume(a.key, a.value, a.source)
        if other.error and self.error is None:
            self.error = other.error

    def assume(self, key: str, value: Any, source: str) -> None:
        if any(a.key == key for a in self.assumptions):
            return
        self.assumptions.append(Assumption(key=key, value=_jsonable(value), source=source))

    @property
    def status(self) -> Status:
        if self.error is not None:
            return Status.FAIL
        statuses = {c.status for c in self.checks}
        if Status.FAIL in statuses:
            return Status.FAIL
        if Status.INCONCLUSIVE in statuses:
            return Status.INCONCLUSIVE
        return Status.PASS

    def to_dict(self, include_timings: bool = False) -> Dict[str, Any]:
        payload = self.model_dump(mode="json")
        payload["status"] = self.status.value
        payload["inputs"] = _jsonable(self.inputs)
        payload["data"] = _jsonable(self.data)
        if not include_timings:
            payload.pop("runtime_ms", None)
        if self.error is None:
            payload.pop("error", None)
        return payload

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(
            self.to_dict(include_timings), sort_keys=True, indent=2, ensure_ascii=False
        )


class AggregateReport(BaseModel):
    reports: List[VerificationReport] = Field(default_factory=list)

    @property
    def counts(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    @property
    def status(self) -> Status:
        counts = self.counts
        if counts[Status.FAIL.value]:
            return Status.FAIL
        if counts[Status.INCONCLUSIVE.value]:
            return Status.INCONCLUSIVE
        return Status.PASS

    def to_dict(self, include_timings: bool = False) -> Dict[str, Any]:
        return {
            "counts": self.counts,
            "status": self.status.value,
            "reports": [r.to_dict(include_timings) for r in self.reports],
        }

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(
            self.to_dict(include_timings), sort_keys=True, indent=2, ensure_ascii=False
        )


def exit_code_for(status: Status) -> int:
    return {Status.PASS: 0, Status.FAIL: 1, Status.INCONCLUSIVE: 2}[status]


__all__ = [
    "Status",
    "Provenance",
    "CheckItem",
    "Assumption",
    "VerificationReport",
    "AggregateReport",
    "exit_code_for",
]
