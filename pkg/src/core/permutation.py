"""
Permutation model: bijective transformations of [n].
Single responsibility: group operations, cycle access and transpositions.

Group arithmetic is delegated to ``sympy.combinatorics``; sympy's ``p * q``
also applies ``p`` first, so both conventions agree. sympy points are 0-based.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import sympy.combinatorics as comb

from core.errors import InvalidInputError
from core.transformation import Transformation


@dataclass(frozen=True, eq=False)
class Permutation(Transformation):
    """A bijection of [n]; composes left to right like every Transformation."""

    def __post_init__(self):
        super().__post_init__()
        if len(set(self.images)) != self.n:
            raise InvalidInputError(f"not a bijection: {self}")

    @staticmethod
    def from_sympy(other: comb.Permutation) -> "Permutation":
        """Convert a SymPy permutation of {0, ..., n-1} into a Permutation of [n]."""
        return Permutation(tuple(point + 1 for point in other.array_form))

    @functools.cached_property
    def as_sympy(self) -> comb.Permutation:
        return comb.Permutation([value - 1 for value in self.images])

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """
        Build a permutation from disjoint cycles.

        Raises:
            InvalidInputError: If a point repeats or lies outside [n]
        """
        used: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= n:
                    raise InvalidInputError(f"cycle point {point} outside [{n}]")
                if point in used:
                    raise InvalidInputError(f"point {point} repeated in cycle notation")
                used.add(point)
        nontrivial = [[point - 1 for point in cycle] for cycle in cycles if len(cycle) > 1]
        if not nontrivial:
            return cls.identity(n)
        return cls(Permutation.from_sympy(comb.Permutation(nontrivial, size=n)).images)

    @classmethod
    def transposition(cls, n: int, x: int, y: int) -> "Permutation":
        if x == y:
            raise InvalidInputError(f"transposition needs two distinct points, got ({x} {y})")
        return cls.from_cycles(n, [(x, y)])

    @classmethod
    def cyclic(cls, n: int) -> "Permutation":
        """The n-cycle (1 2 ... n)."""
        return cls.from_cycles(n, [tuple(range(1, n + 1))]) if n > 1 else cls.identity(n)

    def is_identity(self) -> bool:
        return self.as_sympy.is_Identity

    def inverse(self) -> "Permutation":
        return Permutation.from_sympy(~self.as_sympy)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each read from its least point, ordered by that point."""
        cycles = [tuple(point + 1 for point in cycle) for cycle in self.as_sympy.cyclic_form]
        return sorted(cycles)

    def order(self) -> int:
        return int(self.as_sympy.order())

    def __mul__(self, other: Transformation) -> Transformation:
        if isinstance(other, Permutation):
            if self.n != other.n:
                raise InvalidInputError(f"domain sizes differ ({self.n} vs {other.n})")
            return Permutation.from_sympy(self.as_sympy * other.as_sympy)
        return super().__mul__(other)

    def power(self, exponent: int) -> "Permutation":
        return Permutation.from_sympy(self.as_sympy ** exponent)

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in cycles)


@functools.lru_cache(maxsize=None)
def symmetric_group(n: int) -> Tuple[Permutation, ...]:
    """Every permutation of [n], sorted by image sequence."""
    group = comb.named_groups.SymmetricGroup(n)
    return tuple(sorted(Permutation.from_sympy(g) for g in group.generate()))


def perm_inverse_and_order(g: Permutation) -> Tuple[Permutation, int]:
    return g.inverse(), g.order()
