"""
Factorization service.
Runs the constructive algorithms and re-verifies every result before returning it.
"""

from typing import Any, Dict, Optional, Tuple

from algorithms.conjugacy import (
    conjugate, factor_conjugates, factor_word, lemma3_rewrite, theorem5_leading_idempotent,
)
from algorithms.factor import (
    CanonicalRealizer, factor_idempotents, rewrite_swaps, verify_factorization,
)
from core.factorization import ConjugateFactor, FactorKind, FactorRecord
from core.permutation import Permutation
from core.transformation import Transformation, compose_all
from core.word import Word
from services.base_service import BaseService


class FactorizationService(BaseService):
    """Self-checking entry points for factorization and conjugation."""

    def factor(self, a: Transformation) -> Dict[str, Any]:
        """
        Factor a singular map into idempotents of its rank.

        Returns:
            Dictionary with the factorization and verification flag
        """
        def operation():
            factorization = factor_idempotents(a)
            verified = verify_factorization(factorization)
            return self._self_check(verified, f"factorization of {a}",
                                    {"factorization": factorization, "verified": verified})
        return self._run(operation)

    def factor_conjugates(self, a: Transformation, base: Transformation) -> Dict[str, Any]:
        """Factor a as e followed by conjugates of the idempotent ``base``."""
        def operation():
            factorization = factor_conjugates(a, base)
            verified = verify_factorization(factorization)
            return self._self_check(verified, f"conjugate factorization of {a}",
                                    {"factorization": factorization, "verified": verified})
        return self._run(operation)

    def rewrite(self, a: Transformation, swap: Tuple[int, int],
                base: Optional[Transformation] = None) -> Dict[str, Any]:
        """
        Rewrite a * (x y) as a * (idempotents), or conjugates of ``base`` when given.
        """
        def operation():
            if base is None:
                records = rewrite_swaps(a, [swap], CanonicalRealizer())
                conjugates = []
            else:
                conjugates = lemma3_rewrite(a, swap, base)
                records = [FactorRecord(c.value, FactorKind.CONJUGATE, c.conjugator) for c in conjugates]
            swapped = a * Permutation.transposition(a.n, *swap)
            product = compose_all([record.value for record in records], a.n)
            verified = (a * product == swapped
                        and all(record.value.rank == a.rank for record in records)
                        and all(c.verify() for c in conjugates))
            return self._self_check(verified, f"rewrite of {a} by {swap}", {
                "input": a, "swap": swap, "base": base, "factors": records,
                "conjugates": conjugates, "verified": verified,
            })
        return self._run(operation)

    def conjugate(self, t: Transformation, g: Permutation) -> Dict[str, Any]:
        def operation():
            value = conjugate(t, g)
            return {"factor": ConjugateFactor(t, g, value)}
        return self._run(operation)

    def theorem5(self, a: Transformation) -> Dict[str, Any]:
        """Conjugates of a whose product is the idempotent part e of a."""
        def operation():
            factors, e = theorem5_leading_idempotent(a)
            product = compose_all([c.value for c in factors], a.n)
            verified = product == e and all(c.verify() for c in factors)
            return self._self_check(verified, f"leading idempotent of {a}", {
                "input": a, "factors": factors, "idempotent": e, "product": product,
                "verified": verified,
            })
        return self._run(operation)

    def word_factor(self, w: Word) -> Dict[str, Any]:
        """Rewrite a word as a product of conjugates of its base."""
        def operation():
            factorization = factor_word(w)
            verified = verify_factorization(factorization)
            return self._self_check(verified, f"word factorization of {w}",
                                    {"factorization": factorization, "word": w, "verified": verified})
        return self._run(operation)
