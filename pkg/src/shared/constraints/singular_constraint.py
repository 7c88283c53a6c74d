"""
Singularity constraint implementation.
Rejects permutations where an element of I_n is required.
"""

from config.settings import MESSAGES
from core.interfaces import ConstraintInterface
from core.transformation import Transformation


class SingularConstraint(ConstraintInterface):
    """Constraint requiring rank < n."""

    def validate(self, subject: Transformation) -> tuple[bool, str]:
        """
        Validate that the map is not a permutation.

        Returns:
            Tuple of (is_valid, error_message)
        """
        if subject.rank >= subject.n:
            return False, MESSAGES["not_singular"]
        return True, ""
