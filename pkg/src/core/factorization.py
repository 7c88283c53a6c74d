"""
Factorization records: ordered factors with provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from core.permutation import Permutation
from core.transformation import Transformation, compose_all


class FactorKind(str, Enum):
    SEED_IDEMPOTENT = "SEED_IDEMPOTENT"
    LEMMA1_CASE2 = "LEMMA1_CASE2"
    LEMMA1_CASE3_E2 = "LEMMA1_CASE3_E2"
    LEMMA1_CASE3_E3 = "LEMMA1_CASE3_E3"
    LEMMA1_CASE3_E4 = "LEMMA1_CASE3_E4"
    CONJUGATE = "CONJUGATE"


@dataclass(frozen=True)
class ConjugateFactor:
    """``value == base ** conjugator`` under the right conjugation action."""

    base: Transformation
    conjugator: Permutation
    value: Transformation

    def verify(self) -> bool:
        g = self.conjugator
        if g.n != self.base.n or self.value.n != self.base.n:
            return False
        recomputed = g.inverse() * self.base * g
        return recomputed == self.value and self.value.rank == self.base.rank


@dataclass(frozen=True)
class FactorRecord:
    value: Transformation
    kind: FactorKind
    conjugator: Optional[Permutation] = None


@dataclass(frozen=True)
class Factorization:
    input: Transformation
    factors: Tuple[FactorRecord, ...]
    rank: int
    # Common base of the CONJUGATE records, if any
    base: Optional[Transformation] = field(default=None)

    @property
    def n(self) -> int:
        return self.input.n

    @property
    def values(self) -> Tuple[Transformation, ...]:
        return tuple(record.value for record in self.factors)

    def product(self) -> Transformation:
        return compose_all(self.values, self.n)

    def __len__(self) -> int:
        return len(self.factors)
