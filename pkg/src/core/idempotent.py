"""
Idempotents and the bracket patterns that describe sets of them.

An idempotent is determined by a partition P of [n] together with a
cross-section C: each class [x]_P is sent to its chosen point x. A pattern
lists, per class, the representative (the class's image point) and any extra
points that are required to share that class; it denotes every idempotent
whose image is exactly the representatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

from core.errors import InvalidInputError
from core.permutation import Permutation
from core.transformation import KernelPartition, Transformation


@dataclass(frozen=True, eq=False)
class Idempotent(Transformation):
    """A transformation e with e * e == e."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_idempotent():
            raise InvalidInputError(f"not idempotent: {self}")

    @classmethod
    def from_partition(cls, partition: KernelPartition,
                       cross_section: Iterable[int]) -> "Idempotent":
        """
        Build the idempotent induced by (P, C).

        Raises:
            InvalidInputError: If C does not pick exactly one point per class
        """
        chosen = sorted(set(cross_section))
        images = [0] * partition.n
        for block in partition.classes:
            picks = [x for x in chosen if x in block]
            if len(picks) != 1:
                raise InvalidInputError(f"cross-section must meet class {block} exactly once")
            for point in block:
                images[point - 1] = picks[0]
        if len(chosen) != len(partition):
            raise InvalidInputError("cross-section has points outside the partition classes")
        return cls(tuple(images))

    @property
    def partition(self) -> KernelPartition:
        return self.kernel()

    @property
    def cross_section(self) -> Tuple[int, ...]:
        return tuple(sorted(self.image))

    def pattern(self) -> "IdempotentPattern":
        """The full pattern: every class listed with all of its members."""
        entries = []
        for block in self.partition.classes:
            representative = self(block[0])
            entries.append(PatternEntry(representative, frozenset(block) - {representative}))
        return IdempotentPattern(self.n, tuple(entries))


@dataclass(frozen=True)
class PatternEntry:
    representative: int
    extras: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "extras", frozenset(self.extras))

    @property
    def points(self) -> FrozenSet[int]:
        return self.extras | {self.representative}

    def __str__(self) -> str:
        members = sorted(self.points)
        return "[" + ",".join(
            f"_{p}" if p == self.representative and self.extras else str(p) for p in members
        ) + "]"


@dataclass(frozen=True)
class IdempotentPattern:
    """Ordered bracket entries describing a set of idempotents on [n]."""

    n: int
    entries: Tuple[PatternEntry, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidInputError("a pattern needs at least one entry")
        if len(entries) > self.n:
            raise InvalidInputError(f"{len(entries)} entries exceed n={self.n}")
        mentioned = [p for entry in entries for p in (entry.representative, *entry.extras)]
        for point in mentioned:
            if not 1 <= point <= self.n:
                raise InvalidInputError(f"pattern point {point} outside [{self.n}]")
        if len(set(mentioned)) != len(mentioned):
            raise InvalidInputError(f"pattern mentions a point twice: {self}")

    @classmethod
    def of(cls, n: int, *entries: Sequence[int]) -> "IdempotentPattern":
        """
        Shorthand: each entry is ``(representative, *extras)``.

        ``IdempotentPattern.of(3, (2, 1), (3,))`` is ``([1,_2],[3])``.
        """
        return cls(n, tuple(PatternEntry(e[0], frozenset(e[1:])) for e in entries))

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(entry.representative for entry in self.entries)

    @property
    def mentioned(self) -> FrozenSet[int]:
        return frozenset().union(*(entry.points for entry in self.entries))

    def matches(self, e: Transformation) -> bool:
        if e.n != self.n or not e.is_idempotent():
            return False
        if e.image != frozenset(self.representatives):
            return False
        return all(e(point) == entry.representative
                   for entry in self.entries for point in entry.points)

    def canonical(self) -> Idempotent:
        """
        The canonical member: unmentioned points join the class of the
        smallest representative.
        """
        fallback = min(self.representatives)
        images = [fallback] * self.n
        for entry in self.entries:
            for point in entry.points:
                images[point - 1] = entry.representative
        return Idempotent(tuple(images))

    def members(self) -> Iterator[Idempotent]:
        """Every idempotent matching the pattern."""
        free = [p for p in range(1, self.n + 1) if p not in self.mentioned]
        base = list(self.canonical().images)
        for choice in itertools.product(sorted(self.representatives), repeat=len(free)):
            images = list(base)
            for point, target in zip(free, choice):
                images[point - 1] = target
            yield Idempotent(tuple(images))

    def conjugate(self, g: Permutation) -> "IdempotentPattern":
        """Relabel every point by g; f matches p iff f^g matches p.conjugate(g)."""
        if g.n != self.n:
            raise InvalidInputError(f"domain sizes differ ({self.n} vs {g.n})")
        return IdempotentPattern(self.n, tuple(
            PatternEntry(g(entry.representative), frozenset(g(p) for p in entry.extras))
            for entry in self.entries
        ))

    def extras_entries(self) -> Tuple[PatternEntry, ...]:
        return tuple(entry for entry in self.entries if entry.extras)

    def __str__(self) -> str:
        return "(" + ",".join(str(entry) for entry in self.entries) + ")"


def idempotent_from_pattern(p: IdempotentPattern) -> Idempotent:
    return p.canonical()
