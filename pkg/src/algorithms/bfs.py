"""
Breadth-first closure over right Cayley graphs.
Generic over any SemigroupGraphInterface; first discoverer wins every parent link.
"""

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.element_set import ElementSet
from core.errors import InvalidInputError
from core.interfaces import MessageHandlerInterface, SemigroupGraphInterface
from core.transformation import Transformation

logger = logging.getLogger(__name__)

Parents = Dict[Transformation, Tuple[Optional[Transformation], int]]


class RightCayleyGraph(SemigroupGraphInterface):
    """Edges t -> t * s for each generator s, generators in lexicographic order."""

    def __init__(self, generators: Iterable[Transformation]):
        gens = sorted(set(generators))
        if not gens:
            raise InvalidInputError("closure needs at least one generator")
        sizes = {g.n for g in gens}
        if len(sizes) != 1:
            raise InvalidInputError(f"generators act on different domains: {sorted(sizes)}")
        self._generators = tuple(gens)
        self.n = gens[0].n

    @property
    def generators(self) -> Sequence[Transformation]:
        return self._generators

    def get_neighbors(self, element: Transformation) -> List[Tuple[int, Transformation]]:
        return [(index, element * gen) for index, gen in enumerate(self._generators)]


class BFSClosureAlgorithm:
    """Breadth-first enumeration of the subsemigroup generated by a graph's generators."""

    def __init__(self, message_handler: Optional[MessageHandlerInterface] = None):
        """Initialize BFS with optional message handler."""
        self.message_handler = message_handler
        self._last_visited_count = 0

    def get_visited_count(self) -> int:
        """Number of elements discovered by the last search."""
        return self._last_visited_count

    def closure(self, graph: SemigroupGraphInterface) -> ElementSet:
        order, parents = self._build_parent_tree(graph)
        return ElementSet(n=graph.generators[0].n, members=tuple(order),
                          generators=tuple(graph.generators), parents=parents)

    def find_witness(self, goal: Transformation, graph: SemigroupGraphInterface) -> Optional[List[int]]:
        """
        Generator indices multiplying to ``goal``, or None once the frontier is exhausted.
        """
        order, parents = self._build_parent_tree(graph, goal)
        if goal not in parents:
            if self.message_handler:
                self.message_handler.handle_info(f"{goal} not reached after {len(order)} elements")
            return None
        return self._backtrack(goal, parents)

    def _build_parent_tree(self, graph: SemigroupGraphInterface,
                           goal: Optional[Transformation] = None) -> Tuple[List[Transformation], Parents]:
        """Build parent links for witness reconstruction."""
        order: List[Transformation] = []
        parents: Parents = {}
        queue = deque()
        for index, gen in enumerate(graph.generators):
            if gen not in parents:
                parents[gen] = (None, index)
                order.append(gen)
                queue.append(gen)

        while queue:
            if goal is not None and goal in parents:
                break
            current = queue.popleft()
            for index, product in graph.get_neighbors(current):
                if product not in parents:
                    parents[product] = (current, index)
                    order.append(product)
                    queue.append(product)

        self._last_visited_count = len(order)
        logger.debug("closure over %d generator(s): %d element(s)", len(graph.generators), len(order))
        return order, parents

    def _backtrack(self, element: Transformation, parents: Parents) -> List[int]:
        path = []
        current: Optional[Transformation] = element
        while current is not None:
            predecessor, index = parents[current]
            path.append(index)
            current = predecessor
        return path[::-1]
