"""
Configuration settings for the epigen toolkit.
Centralized configuration management.
"""

import logging
import os
from typing import Dict

from pydantic import BaseModel, ConfigDict, Field, ValidationError

logger = logging.getLogger(__name__)

# Closure Configuration
DEFAULT_MAX_N = 8
MAX_N_ENV_VAR = "EPIGEN_MAX_N"

# Exit Codes
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INVALID = 2
EXIT_NOT_A_MEMBER = 3
EXIT_SELF_CHECK = 4

STATUS_EXIT_CODES: Dict[str, int] = {
    "ok": EXIT_OK,
    "refuted": EXIT_REFUTED,
    "invalid": EXIT_INVALID,
    "not_a_member": EXIT_NOT_A_MEMBER,
    "self_check_failed": EXIT_SELF_CHECK,
}

# Diagnostic Messages
MESSAGES = {
    "not_singular": "input must be singular",
    "size_mismatch": "domain sizes differ ({} vs {})",
    "rank_mismatch": "rank of base ({}) must equal rank of input ({})",
    "max_n": "n={} exceeds the closure limit {} (raise with --max-n or EPIGEN_MAX_N)",
    "wrong_n": "expected {} points, got {}",
    "self_check": "internal self-check failed: {}",
    "not_a_member": "{} is not a member of the semigroup generated by {} and the symmetric group",
    "verified": "product verified",
    "bad_setting": "invalid {} {!r} (set by a flag or EPIGEN_MAX_N): {}",
    "positive_n": "n must be at least 1, got {}",
    "positive_trials": "trials must be at least 1, got {}",
}


def _max_n_from_env() -> str | int:
    raw = os.environ.get(MAX_N_ENV_VAR, "").strip()
    return raw or DEFAULT_MAX_N


class Settings(BaseModel):
    # Defaults are validated too, so a malformed EPIGEN_MAX_N is rejected by pydantic
    model_config = ConfigDict(validate_default=True)

    max_n: int = Field(default_factory=_max_n_from_env, ge=1)
    random_seed: int = 0
    # Exhaustive two-sided ideal check is skipped above this many products
    ideal_check_limit: int = Field(default=200_000, gt=0)
    ideal_check_samples: int = Field(default=2_000, gt=0)
    log_level: str = "WARNING"

    @classmethod
    def load(cls, **overrides) -> "Settings":
        """
        Settings from the environment with the non-None overrides applied.

        Raises:
            ValueError: One-line diagnostic naming the first rejected setting
        """
        update = {key: value for key, value in overrides.items() if value is not None}
        try:
            return cls.model_validate(update)
        except ValidationError as exc:
            error = exc.errors()[0]
            name = ".".join(str(part) for part in error["loc"])
            raise ValueError(MESSAGES["bad_setting"].format(name, error["input"], error["msg"])) from exc

    def with_overrides(self, **overrides) -> "Settings":
        """Return a validated copy with the non-None overrides applied."""
        update = {key: value for key, value in overrides.items() if value is not None}
        return Settings.load(**{**self.model_dump(), **update})


def _default_settings() -> Settings:
    try:
        return Settings.load()
    except ValueError as exc:
        logger.warning("%s; using max_n=%d", exc, DEFAULT_MAX_N)
        return Settings(max_n=DEFAULT_MAX_N)


settings = _default_settings()
