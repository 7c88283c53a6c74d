"""
Transformation model for total self-maps of [n] = {1, ..., n}.
Single responsibility: immutable map values and their exact arithmetic.

Maps act on the right: ``a * b`` (and ``compose(a, b)``) applies ``a`` first,
then ``b``. Points are 1-based everywhere outside this module.
"""

from __future__ import annotations

import functools
import operator
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterator, Sequence, Tuple

from core.errors import InvalidInputError


@dataclass(frozen=True)
class KernelPartition:
    """Partition of [n] into the fibers of a map."""

    n: int
    classes: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(block)) for block in self.classes))
        seen = [point for block in blocks for point in block]
        if any(len(block) == 0 for block in blocks):
            raise InvalidInputError("partition classes must be nonempty")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidInputError(f"classes must be disjoint and cover [{self.n}]")
        object.__setattr__(self, "classes", blocks)

    def class_of(self, point: int) -> Tuple[int, ...]:
        """Return the class containing ``point``."""
        for block in self.classes:
            if point in block:
                return block
        raise InvalidInputError(f"point {point} outside [{self.n}]")

    def class_sizes(self) -> Tuple[int, ...]:
        """Multiset of class sizes, largest first."""
        return tuple(sorted((len(block) for block in self.classes), reverse=True))

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.classes)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.classes) + "}"


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class Transformation:
    """A total map of [n] given by its image sequence."""

    images: Tuple[int, ...]

    def __post_init__(self):
        try:
            raw = tuple(self.images)
            if any(isinstance(value, bool) for value in raw):
                raise TypeError("bool image")
            images = tuple(operator.index(value) for value in raw)
        except TypeError as exc:
            raise InvalidInputError(f"images must be integers: {self.images!r}") from exc
        n = len(images)
        if n < 1:
            raise InvalidInputError("a transformation needs at least one point")
        for value in images:
            if not 1 <= value <= n:
                raise InvalidInputError(f"image {value} outside [{n}]")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int):
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    # ------------------------------------------------------------------ #
    # Structure
    # ------------------------------------------------------------------ #
    @property
    def image(self) -> FrozenSet[int]:
        return frozenset(self.images)

    @property
    def rank(self) -> int:
        return len(self.image)

    def is_singular(self) -> bool:
        return self.rank < self.n

    def is_permutation(self) -> bool:
        return self.rank == self.n

    def kernel(self) -> KernelPartition:
        fibers: dict[int, list[int]] = {}
        for point, value in enumerate(self.images, start=1):
            fibers.setdefault(value, []).append(point)
        return KernelPartition(self.n, tuple(tuple(block) for block in fibers.values()))

    def kernel_class_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(Counter(self.images).values(), reverse=True))

    def is_idempotent(self) -> bool:
        return all(self(y) == y for y in self.image)

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #
    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def power(self, exponent: int) -> "Transformation":
        """Left-to-right power; exponent 0 is the identity."""
        if exponent < 0:
            raise InvalidInputError("negative powers are defined only for permutations")
        result = Transformation.identity(self.n)
        for _ in range(exponent):
            result = compose(result, self)
        return result

    # ------------------------------------------------------------------ #
    # Value semantics
    # ------------------------------------------------------------------ #
    def __eq__(self, other) -> bool:
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Transformation") -> bool:
        if not isinstance(other, Transformation):
            return NotImplemented
        return (self.n, self.images) < (other.n, other.images)

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Apply ``a`` first, then ``b``: x -> b(a(x))."""
    if a.n != b.n:
        raise InvalidInputError(f"domain sizes differ ({a.n} vs {b.n})")
    return Transformation(tuple(b.images[value - 1] for value in a.images))


def compose_all(factors: Sequence[Transformation], n: int) -> Transformation:
    """Left-to-right product of ``factors``; the identity when empty."""
    result = Transformation.identity(n)
    for factor in factors:
        result = compose(result, factor)
    return result


def image_and_rank(t: Transformation) -> Tuple[FrozenSet[int], int]:
    return t.image, t.rank


def kernel(t: Transformation) -> KernelPartition:
    return t.kernel()


def is_idempotent(t: Transformation) -> bool:
    return t.is_idempotent()
