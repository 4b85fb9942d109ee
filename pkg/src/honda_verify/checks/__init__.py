"""Named verification checks run by ``honda-verify verify-all``."""

from .registry import (
    available_checks,
    get_check,
    get_check_metadata,
    register_check,
    run_all,
    run_check,
)

__all__ = [
    "available_checks",
    "get_check",
    "get_check_metadata",
    "register_check",
    "run_all",
    "run_check",
]
