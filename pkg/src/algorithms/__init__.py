"""
Factorization and search algorithms.

This module contains the constructive idempotent and conjugate factorizations
and the breadth-first closure used as a brute-force oracle.
"""

from .bfs import BFSClosureAlgorithm, RightCayleyGraph
from .factor import factor_idempotents, verify_factorization
from .conjugacy import factor_conjugates, factor_word, theorem5_leading_idempotent

__all__ = [
    "BFSClosureAlgorithm",
    "RightCayleyGraph",
    "factor_idempotents",
    "verify_factorization",
    "factor_conjugates",
    "factor_word",
    "theorem5_leading_idempotent",
]
