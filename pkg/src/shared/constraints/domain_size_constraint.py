"""
Domain size constraint implementation.
Pins the number of points a value must act on.
"""

from config.settings import MESSAGES
from core.interfaces import ConstraintInterface
from core.transformation import Transformation


class DomainSizeConstraint(ConstraintInterface):
    """Constraint requiring exactly ``expected_n`` points."""

    def __init__(self, expected_n: int):
        """
        Initialize with the size requirement.

        Args:
            expected_n: Required number of points
        """
        self.expected_n = expected_n

    def validate(self, subject: Transformation) -> tuple[bool, str]:
        if subject.n != self.expected_n:
            return False, MESSAGES["wrong_n"].format(self.expected_n, subject.n)
        return True, ""
