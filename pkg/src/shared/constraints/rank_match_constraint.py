"""
Rank match constraint implementation.
Conjugate factorizations need a base of the same rank as the input.
"""

from config.settings import MESSAGES
from core.interfaces import ConstraintInterface
from core.transformation import Transformation


class RankMatchConstraint(ConstraintInterface):
    """Constraint requiring rank(subject) == rank(base) on the same domain."""

    def __init__(self, base: Transformation):
        self.base = base

    def validate(self, subject: Transformation) -> tuple[bool, str]:
        if subject.n != self.base.n:
            return False, MESSAGES["size_mismatch"].format(subject.n, self.base.n)
        if subject.rank != self.base.rank:
            return False, MESSAGES["rank_mismatch"].format(self.base.rank, subject.rank)
        return True, ""
