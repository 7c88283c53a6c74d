"""
Exception hierarchy shared by every layer.
"""


class EpigenError(Exception):
    """Base class for all toolkit errors."""

    status = "invalid"


class InvalidInputError(EpigenError, ValueError):
    """Malformed value or violated precondition."""

    status = "invalid"


class ClosureLimitError(InvalidInputError):
    """Domain size exceeds the configured closure limit."""


class NotAMemberError(EpigenError):
    """Witness search exhausted without reaching the target."""

    status = "not_a_member"


class SelfCheckError(EpigenError):
    """A computed result failed its own re-verification."""

    status = "self_check_failed"
