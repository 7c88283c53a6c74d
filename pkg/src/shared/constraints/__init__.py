from .singular_constraint import SingularConstraint
from .domain_size_constraint import DomainSizeConstraint
from .rank_match_constraint import RankMatchConstraint

__all__ = ["SingularConstraint", "DomainSizeConstraint", "RankMatchConstraint"]
