"""
Utility for validating operation preconditions.
Single responsibility: combining constraints and raising one-line diagnostics.
"""

from typing import Iterable, Optional, Tuple

from config.settings import MESSAGES
from core.errors import ClosureLimitError, InvalidInputError
from core.interfaces import ConstraintInterface
from core.transformation import Transformation
from shared.constraints.domain_size_constraint import DomainSizeConstraint
from shared.constraints.rank_match_constraint import RankMatchConstraint
from shared.constraints.singular_constraint import SingularConstraint


class ConstraintValidator:
    """Utility class for validating preconditions."""

    @staticmethod
    def check(subject: Transformation,
              constraints: Iterable[ConstraintInterface]) -> Tuple[bool, str]:
        """
        Validate a value against every constraint, stopping at the first failure.

        Returns:
            Tuple of (is_valid, error_message)
        """
        for constraint in constraints:
            is_valid, message = constraint.validate(subject)
            if not is_valid:
                return False, message
        return True, ""

    @staticmethod
    def require(subject: Transformation, constraints: Iterable[ConstraintInterface]) -> None:
        """
        Raise if any constraint rejects the value.

        Raises:
            InvalidInputError: With the first failing constraint's message
        """
        is_valid, message = ConstraintValidator.check(subject, constraints)
        if not is_valid:
            raise InvalidInputError(message)

    @staticmethod
    def require_singular(t: Transformation) -> None:
        ConstraintValidator.require(t, [SingularConstraint()])

    @staticmethod
    def require_same_rank(t: Transformation, base: Transformation) -> None:
        ConstraintValidator.require(t, [RankMatchConstraint(base)])

    @staticmethod
    def require_same_n(*values: Transformation) -> None:
        sizes = {value.n for value in values}
        if len(sizes) > 1:
            first, *_ = sorted(sizes)
            raise InvalidInputError(MESSAGES["size_mismatch"].format(first, max(sizes)))

    @staticmethod
    def require_within_limit(n: int, max_n: Optional[int]) -> None:
        """
        Enforce the closure size guard.

        Raises:
            ClosureLimitError: If n exceeds ``max_n``
        """
        if max_n is not None and n > max_n:
            raise ClosureLimitError(MESSAGES["max_n"].format(n, max_n))

    @staticmethod
    def require_positive(value: int, message_key: str = "positive_n") -> None:
        """
        Reject sizes and counts below 1.

        Raises:
            InvalidInputError: If ``value`` < 1
        """
        if value < 1:
            raise InvalidInputError(MESSAGES[message_key].format(value))

    @staticmethod
    def require_n(t: Transformation, n: int) -> None:
        ConstraintValidator.require(t, [DomainSizeConstraint(expected_n=n)])
