"""
Oracle service.
Exposes enumeration, witness search and theorem verification as result dictionaries.
"""

import logging
from typing import Any, Dict, Optional

from algorithms import oracle
from config.settings import Settings, settings as default_settings
from core.errors import InvalidInputError
from core.interfaces import MessageHandlerInterface
from core.transformation import Transformation
from services.base_service import BaseService
from shared.utils.constraint_validator import ConstraintValidator

logger = logging.getLogger(__name__)

CHECKS = ("theorem2", "theorem5", "identity", "corollary3", "corollary4", "lemmas")


class OracleService(BaseService):
    """Brute-force ground truth with a configurable size guard."""

    def __init__(self, config: Optional[Settings] = None,
                 message_handler: Optional[MessageHandlerInterface] = None):
        """
        Initialize with runtime settings.

        Args:
            config: Settings carrying max_n and the random seed
            message_handler: Optional message handler
        """
        super().__init__(message_handler)
        self.config = config or default_settings

    def verify(self, check: str, n: int, a: Optional[Transformation] = None,
               trials: int = 10_000) -> Dict[str, Any]:
        """
        Run one of the exhaustive or randomized checks.

        Returns:
            Dictionary with ``verified`` and status "ok" or "refuted"
        """
        def operation():
            ConstraintValidator.require_positive(n)
            ConstraintValidator.require_within_limit(n, self.config.max_n)
            if check == "theorem2":
                verified = oracle.verify_theorem2(n, self.config.max_n)
            elif check == "theorem5":
                verified = oracle.verify_theorem5(n, self._require_element(a), self.config.max_n)
            elif check == "corollary4":
                verified = oracle.verify_corollary4(n, self._require_element(a), self.config.max_n)
            elif check == "corollary3":
                verified = oracle.verify_corollary3(n)
            elif check == "lemmas":
                verified = oracle.verify_lemma_rewrites(n)
            elif check == "identity":
                verified = oracle.verify_power_identity(trials=trials, max_n=n,
                                                        seed=self.config.random_seed)
            else:
                raise InvalidInputError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
            logger.info("verify %s n=%d: %s", check, n, verified)
            return {"check": check, "n": n, "verified": verified,
                    "status": "ok" if verified else "refuted",
                    "message": "OK" if verified else "REFUTED"}
        return self._run(operation)

    def enumerate_idempotents(self, n: int, rank: int) -> Dict[str, Any]:
        def operation():
            ConstraintValidator.require_within_limit(n, self.config.max_n)
            return {"element_set": oracle.enumerate_idempotents(n, rank)}
        return self._run(operation)

    def enumerate_ideal(self, n: int, rank: int) -> Dict[str, Any]:
        def operation():
            ConstraintValidator.require_within_limit(n, self.config.max_n)
            return {"element_set": oracle.ideal_elements(n, rank, seed=self.config.random_seed)}
        return self._run(operation)

    def enumerate_class(self, t: Transformation) -> Dict[str, Any]:
        def operation():
            ConstraintValidator.require_within_limit(t.n, self.config.max_n)
            return {"element_set": oracle.conjugacy_class(t)}
        return self._run(operation)

    def find_word(self, target: Transformation, a: Transformation) -> Dict[str, Any]:
        return self._run(lambda: {"word": oracle.find_word(target, a, self.config.max_n)})

    @staticmethod
    def _require_element(a: Optional[Transformation]) -> Transformation:
        if a is None:
            raise InvalidInputError("this check needs a transformation argument")
        return a
