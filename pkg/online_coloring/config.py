"""Oracle size limits, read from the environment (and a local .env via the CLI)."""

import os
from dataclasses import dataclass

ORACLE_LIMIT_ENV = "OCL_ORACLE_LIMIT"
ENUMERATION_LIMIT_ENV = "OCL_ENUMERATION_LIMIT"

DEFAULT_CHROMATIC_LIMIT = 20
DEFAULT_ENUMERATION_LIMIT = 14
# injective assignments are brute forced only up to this many classes
DEFAULT_ASSIGNMENT_CHI = 8


def _read_int(name: str) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


@dataclass(frozen=True, kw_only=True)
class OracleLimits:
    chromatic: int = DEFAULT_CHROMATIC_LIMIT
    enumeration: int = DEFAULT_ENUMERATION_LIMIT
    assignment_chi: int = DEFAULT_ASSIGNMENT_CHI

    def __post_init__(self):
        # enumeration needs chi first, so it can never go further than the chromatic search
        if self.enumeration > self.chromatic:
            object.__setattr__(self, "enumeration", self.chromatic)

    @classmethod
    def from_env(cls, override: int | None = None) -> "OracleLimits":
        """Limits from OCL_ORACLE_LIMIT / OCL_ENUMERATION_LIMIT; `override` (the CLI flag) wins."""
        chromatic = override if override is not None else _read_int(ORACLE_LIMIT_ENV)
        enumeration = _read_int(ENUMERATION_LIMIT_ENV)
        return cls(
            chromatic=DEFAULT_CHROMATIC_LIMIT if chromatic is None else chromatic,
            enumeration=DEFAULT_ENUMERATION_LIMIT if enumeration is None else enumeration,
        )
