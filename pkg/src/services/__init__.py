"""
Services package for business logic.

Services run the algorithms, re-verify their output and report results as
dictionaries.
"""

from .factorization_service import FactorizationService
from .oracle_service import OracleService

__all__ = [
    "FactorizationService",
    "OracleService"
]
