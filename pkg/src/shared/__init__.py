"""
Shared components for the factorization toolkit.

This module contains the precondition constraints, their validator and the
text codec used by the command line and HTTP surfaces.
"""

# Constraints
from .constraints.singular_constraint import SingularConstraint
from .constraints.domain_size_constraint import DomainSizeConstraint
from .constraints.rank_match_constraint import RankMatchConstraint

# Utils
from .utils.constraint_validator import ConstraintValidator

__all__ = [
    # Constraints
    "SingularConstraint", "DomainSizeConstraint", "RankMatchConstraint",

    # Utils
    "ConstraintValidator",
]
