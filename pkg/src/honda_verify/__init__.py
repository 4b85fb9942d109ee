"""honda-verify: exact arithmetic checks with lazy loading of submodules."""

from __future__ import annotations

import importlib
from typing import Any

__all__ = [
    "RunConfig",
    "VerificationReport",
    "AggregateReport",
    "RaynaudScheme",
    "verify_honda",
    "verify_ext1",
    "CurveModel",
    "BiquadraticField",
    "available_checks",
    "run_check",
    "run_all",
]

_lazy_map = {
    "RunConfig": "honda_verify.run_config",
    "VerificationReport": "honda_verify.reports",
    "AggregateReport": "honda_verify.reports",
    "RaynaudScheme": "honda_verify.raynaud.scheme",
    "verify_honda": "honda_verify.raynaud.honda",
    "verify_ext1": "honda_verify.ext_deform.extensions",
    "CurveModel": "honda_verify.curves.weierstrass",
    "BiquadraticField": "honda_verify.numberfields.biquadratic",
    "available_checks": "honda_verify.checks.registry",
    "run_check": "honda_verify.checks.registry",
    "run_all": "honda_verify.checks.registry",
}


def __getattr__(name: str) -> Any:  # pragma: no cover - simple passthrough
    if name in _lazy_map:
        module = importlib.import_module(_lazy_map[name])
        value = getattr(module, name)
        globals()[name] = value
        return value
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__() -> list[str]:  # pragma: no cover - for completeness
    return sorted(list(globals().keys()) + list(_lazy_map.keys()))


__version__ = "0.1.0"
