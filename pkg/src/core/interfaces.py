"""
Abstract interfaces shared across the toolkit.
Pure interfaces that decouple algorithms from their collaborators.
"""

from abc import ABC, abstractmethod
from typing import List, Sequence, Tuple

from core.factorization import FactorKind, FactorRecord
from core.idempotent import IdempotentPattern
from core.transformation import Transformation


class SemigroupGraphInterface(ABC):
    """Implicit graph whose edges are right multiplications by generators."""

    @property
    @abstractmethod
    def generators(self) -> Sequence[Transformation]:
        """Generators in their fixed (edge-label) order."""
        pass

    @abstractmethod
    def get_neighbors(self, element: Transformation) -> List[Tuple[int, Transformation]]:
        """Return ``(generator_index, element * generator)`` pairs in label order."""
        pass


class ConstraintInterface(ABC):
    """Abstract interface for operation preconditions."""

    @abstractmethod
    def validate(self, subject: Transformation) -> tuple[bool, str]:
        """
        Validate a value against this constraint.

        Returns:
            Tuple of (is_valid, error_message)
        """
        pass


class PatternRealizerInterface(ABC):
    """Chooses a concrete idempotent from a bracket pattern."""

    @abstractmethod
    def realize(self, pattern: IdempotentPattern, kind: FactorKind) -> FactorRecord:
        """Return a factor whose value matches ``pattern``."""
        pass


class MessageHandlerInterface(ABC):
    """Abstract interface for handling messages and output."""

    @abstractmethod
    def handle_error(self, message: str) -> None:
        """Handle error messages."""
        pass

    @abstractmethod
    def handle_info(self, message: str) -> None:
        """Handle informational messages."""
        pass

    @abstractmethod
    def handle_success(self, message: str) -> None:
        """Handle success messages."""
        pass
