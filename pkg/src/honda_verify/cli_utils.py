from typing import Dict, List, Optional

import typer


def parse_assumption_options(params: Optional[List[str]]) -> Dict[str, str]:
    """
    Parses repeated ``--set key=value`` options into a dictionary.
    Values are kept verbatim; the first '=' separates key from value.
    """
    parsed: Dict[str, str] = {}
    if not params:
        return parsed

    for item in params:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise typer.BadParameter(
                f"Invalid assumption '{item}'. Expected 'key=value', e.g. rank.X015.Q=0."
            )
        parsed[key] = value.strip()

    return parsed


def parse_delta(spec: str, r: Optional[int] = None) -> List[str]:
    """Parse a ``--delta`` list such as ``"p,1"`` into ``["p", "1"]``."""
    entries = [part.strip().lower() for part in spec.split(",") if part.strip()]
    if not entries or any(e not in {"p", "1"} for e in entries):
        raise typer.BadParameter(
            f"Invalid delta '{spec}'. Expected a comma list of 'p' and '1'."
        )
    if r is not None and len(entries) != r:
        raise typer.BadParameter(f"delta has {len(entries)} entries but r={r}.")
    return entries


def parse_prime_list(text: str) -> List[int]:
    """Parse ``"13,43"`` into ``[13, 43]``."""
    try:
        primes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise typer.BadParameter(f"Invalid prime list '{text}'.") from None
    if not primes:
        raise typer.BadParameter("Expected at least one prime.")
    return primes


__all__ = ["parse_assumption_options", "parse_delta", "parse_prime_list"]
