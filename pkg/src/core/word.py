"""
Words over a fixed singular element and the symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from core.errors import InvalidInputError
from core.permutation import Permutation
from core.transformation import Transformation


@dataclass(frozen=True)
class Word:
    """
    Alternating product g0 * t * g1 * t * ... * t * g_r with r >= 1.

    ``perms`` holds g0 ... g_r, so the word has ``len(perms) - 1``
    occurrences of ``base``.
    """

    base: Transformation
    perms: Tuple[Permutation, ...]

    def __post_init__(self):
        perms = tuple(self.perms)
        object.__setattr__(self, "perms", perms)
        if len(perms) < 2:
            raise InvalidInputError("a word needs at least one occurrence of its base")
        for g in perms:
            if g.n != self.base.n:
                raise InvalidInputError(f"domain sizes differ ({self.base.n} vs {g.n})")

    @classmethod
    def single(cls, base: Transformation) -> "Word":
        identity = Permutation.identity(base.n)
        return cls(base, (identity, identity))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def occurrences(self) -> int:
        return len(self.perms) - 1

    def evaluate(self) -> Transformation:
        result: Transformation = self.perms[0]
        for g in self.perms[1:]:
            result = result * self.base * g
        return Transformation(result.images)

    def __str__(self) -> str:
        return " | a | ".join(g.cycle_notation() for g in self.perms)
