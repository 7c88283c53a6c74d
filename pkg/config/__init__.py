"""
Configuration package for the epigen toolkit.

Import the runtime instance as ``from config.settings import settings``.
"""

from .settings import (
    DEFAULT_MAX_N,
    MAX_N_ENV_VAR,
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_INVALID,
    EXIT_NOT_A_MEMBER,
    EXIT_SELF_CHECK,
    STATUS_EXIT_CODES,
    MESSAGES,
    Settings,
)

__all__ = [
    "DEFAULT_MAX_N",
    "MAX_N_ENV_VAR",
    "EXIT_OK",
    "EXIT_REFUTED",
    "EXIT_INVALID",
    "EXIT_NOT_A_MEMBER",
    "EXIT_SELF_CHECK",
    "STATUS_EXIT_CODES",
    "MESSAGES",
    "Settings",
]
