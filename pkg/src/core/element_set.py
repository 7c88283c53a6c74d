"""
Deduplicated sets of transformations in discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, List, Mapping, Optional, Tuple

from core.errors import InvalidInputError
from core.transformation import Transformation, compose_all

# element -> (predecessor or None for a generator, generator index)
ParentLinks = Mapping[Transformation, Tuple[Optional[Transformation], int]]


@dataclass(frozen=True)
class ElementSet:
    n: int
    members: Tuple[Transformation, ...]
    generators: Tuple[Transformation, ...] = ()
    parents: ParentLinks = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        members = tuple(dict.fromkeys(self.members))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "parents", MappingProxyType(dict(self.parents)))
        object.__setattr__(self, "_index", frozenset(members))
        if any(member.n != self.n for member in members):
            raise InvalidInputError(f"all members must act on [{self.n}]")

    def __contains__(self, element: object) -> bool:
        return element in self._index

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def as_frozenset(self) -> frozenset:
        return self._index

    def witness(self, element: Transformation) -> List[int]:
        """
        Generator indices whose left-to-right product is ``element``.

        Raises:
            InvalidInputError: If the set carries no parent link for ``element``
        """
        if element not in self.parents:
            raise InvalidInputError(f"no parent link for {element}")
        path = []
        current: Optional[Transformation] = element
        while current is not None:
            predecessor, index = self.parents[current]
            path.append(index)
            current = predecessor
        return path[::-1]

    def evaluate_witness(self, indices: List[int]) -> Transformation:
        return compose_all([self.generators[i] for i in indices], self.n)
