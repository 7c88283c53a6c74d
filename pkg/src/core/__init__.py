"""
Core values and interfaces for the factorization toolkit.

This package contains the transformation, permutation and idempotent value
types, the factorization records and the abstract interfaces that the
algorithms depend on.
"""

from .errors import (
    EpigenError, InvalidInputError, ClosureLimitError, NotAMemberError, SelfCheckError
)
from .transformation import KernelPartition, Transformation, compose, compose_all
from .permutation import Permutation
from .idempotent import Idempotent, IdempotentPattern, PatternEntry
from .factorization import ConjugateFactor, FactorKind, FactorRecord, Factorization
from .word import Word
from .element_set import ElementSet
from .interfaces import (
    SemigroupGraphInterface, ConstraintInterface, PatternRealizerInterface,
    MessageHandlerInterface
)

__all__ = [
    # Errors
    "EpigenError", "InvalidInputError", "ClosureLimitError", "NotAMemberError",
    "SelfCheckError",

    # Values
    "KernelPartition", "Transformation", "compose", "compose_all", "Permutation",
    "Idempotent", "IdempotentPattern", "PatternEntry", "Word", "ElementSet",

    # Factorizations
    "ConjugateFactor", "FactorKind", "FactorRecord", "Factorization",

    # Interfaces
    "SemigroupGraphInterface", "ConstraintInterface", "PatternRealizerInterface",
    "MessageHandlerInterface",
]
