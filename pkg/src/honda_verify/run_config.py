from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .config import Config
from .exceptions import ConfigurationError


class RunConfig(BaseModel):
    """
    Settings handed to every operation and registered check.

    Zero for ``truncation_depth`` or ``formal_precision`` means "use the
    per-instance default" (``2r + 2`` and ``p^2 + 2`` respectively).
    """

    model_config = ConfigDict(validate_assignment=True, extra="forbid")

    truncation_depth: int = Field(
        default=0, ge=0, description="Covector comparison window; 0 means 2r+2."
    )
    search_height: int = Field(
        default=50, ge=1, description="Coefficient height for generator searches."
    )
    formal_precision: int = Field(
        default=0, ge=0, description="Formal group precision N; 0 means p^2+2."
    )
    enumeration_limit: int = Field(
        default=81, ge=1, description="Largest |k (x) F| accepted by brute force."
    )
    workers: int = Field(default=1, ge=1, description="Threads used by verify-all.")
    include_timings: bool = Field(
        default=False, description="Emit runtime_ms in serialized reports."
    )

    def depth_for(self, r: int) -> int:
        return self.truncation_depth or 2 * r + 2

    def precision_for(self, p: int) -> int:
        return self.formal_precision or p * p + 2

    @classmethod
    def from_config(cls, config: Optional[Config] = None, **overrides: Any) -> "RunConfig":
        """Build from a layered :class:`Config`; ``None`` overrides are ignored.

        Raises :class:`ConfigurationError` naming the offending setting.
        """
        config = config or Config()
        values = {
            name: config.get(name, field.default)
            for name, field in cls.model_fields.items()
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**values)
        except ValidationError as exc:
            first = exc.errors()[0]
            key = ".".join(str(part) for part in first["loc"])
            raise ConfigurationError(f"invalid setting '{key}': {first['msg']}") from None


__all__ = ["RunConfig"]
