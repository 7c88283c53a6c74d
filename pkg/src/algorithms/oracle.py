"""
Exhaustive ground truth for small n.

Enumerates T_n, S_n, I_n and idempotents, generates subsemigroups by
breadth-first closure, searches for word witnesses, and checks the
factorization theorems against brute force.
"""

import itertools
import logging
import random
from typing import Iterator, List, Optional

from sympy.utilities.iterables import multiset_partitions

from algorithms.bfs import BFSClosureAlgorithm, RightCayleyGraph
from algorithms.conjugacy import (
    conjugate, corollary3_factor, in_conjugacy_class, lemma3_rewrite, power_identity_check,
)
from algorithms.factor import eg_decompose, lemma1_patterns, lemma1_rewrite
from config.settings import MESSAGES, settings
from core.element_set import ElementSet
from core.errors import InvalidInputError, NotAMemberError, SelfCheckError
from core.idempotent import Idempotent
from core.permutation import Permutation, symmetric_group
from core.transformation import Transformation, compose_all
from core.word import Word
from shared.utils.constraint_validator import ConstraintValidator

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------- #
# Enumeration
# ---------------------------------------------------------------------- #
def all_transformations(n: int) -> Iterator[Transformation]:
    for images in itertools.product(range(1, n + 1), repeat=n):
        yield Transformation(images)


def singular_elements(n: int) -> List[Transformation]:
    return [t for t in all_transformations(n) if t.is_singular()]


def symmetric_group_generators(n: int) -> List[Permutation]:
    """(1 2) and (1 2 ... n); the identity alone when n == 1."""
    if n == 1:
        return [Permutation.identity(1)]
    return sorted({Permutation.transposition(n, 1, 2), Permutation.cyclic(n)})


def enumerate_idempotents(n: int, k: int) -> ElementSet:
    """
    All idempotents of rank exactly k: one per (partition into k classes, cross-section).

    Raises:
        InvalidInputError: If k is outside [1, n]
    """
    if not 1 <= k <= n:
        raise InvalidInputError(f"rank {k} outside [1, {n}]")
    members = []
    for blocks in multiset_partitions(list(range(1, n + 1)), k):
        for section in itertools.product(*blocks):
            images = [0] * n
            for block, representative in zip(blocks, section):
                for point in block:
                    images[point - 1] = representative
            members.append(Idempotent(tuple(images)))
    return ElementSet(n=n, members=tuple(sorted(members)))


def closure(gens: List[Transformation], max_n: Optional[int] = None) -> ElementSet:
    """
    Smallest set containing ``gens`` and closed under composition.

    Raises:
        InvalidInputError: If ``gens`` is empty or mixes domain sizes
        ClosureLimitError: If n exceeds the configured limit
    """
    graph = RightCayleyGraph(gens)
    ConstraintValidator.require_within_limit(graph.n, settings.max_n if max_n is None else max_n)
    return BFSClosureAlgorithm().closure(graph)


def ideal_elements(n: int, k: int, seed: Optional[int] = None) -> ElementSet:
    """
    {t : rank(t) <= k}, checked to absorb products by I_n on both sides.

    The check is exhaustive while it stays under ``settings.ideal_check_limit``
    products, and a seeded random sample otherwise.

    Raises:
        InvalidInputError: If k is outside [1, n-1]
        SelfCheckError: If a product leaves the set
    """
    if not 1 <= k <= n - 1:
        raise InvalidInputError(f"rank {k} outside [1, {n - 1}]")
    singular = singular_elements(n)
    members = [t for t in singular if t.rank <= k]
    if 2 * len(singular) * len(members) <= settings.ideal_check_limit:
        pairs = itertools.product(members, singular)
    else:
        rng = random.Random(settings.random_seed if seed is None else seed)
        pairs = ((rng.choice(members), rng.choice(singular))
                 for _ in range(settings.ideal_check_samples))
    for t, s in pairs:
        if (t * s).rank > k or (s * t).rank > k:
            raise SelfCheckError(MESSAGES["self_check"].format(f"rank-{k} set is not an ideal"))
    return ElementSet(n=n, members=tuple(members))


def conjugacy_class(t: Transformation) -> ElementSet:
    return ElementSet(n=t.n, members=tuple(conjugate(t, g) for g in symmetric_group(t.n)))


def find_word(target: Transformation, a: Transformation, max_n: Optional[int] = None) -> Word:
    """
    A word over a and the symmetric group evaluating to ``target``.

    Raises:
        InvalidInputError: If either map is a permutation or sizes differ
        NotAMemberError: If the search exhausts without reaching ``target``
    """
    ConstraintValidator.require_same_n(target, a)
    ConstraintValidator.require_singular(a)
    ConstraintValidator.require_singular(target)
    n = a.n
    ConstraintValidator.require_within_limit(n, settings.max_n if max_n is None else max_n)

    graph = RightCayleyGraph([a, *symmetric_group_generators(n)])
    indices = BFSClosureAlgorithm().find_witness(target, graph)
    if indices is None:
        raise NotAMemberError(MESSAGES["not_a_member"].format(target, a))

    perms: List[Permutation] = []
    current = Permutation.identity(n)
    for index in indices:
        gen = graph.generators[index]
        if gen == a:
            perms.append(current)
            current = Permutation.identity(n)
        else:
            current = current * Permutation(gen.images)
    perms.append(current)
    word = Word(a, tuple(perms))
    if word.evaluate() != target:
        raise SelfCheckError(MESSAGES["self_check"].format(f"word {word} does not evaluate to {target}"))
    return word


def semigroup_with_symmetric_group(a: Transformation, max_n: Optional[int] = None) -> frozenset:
    """The singular part of <{a} u S_n>."""
    generated = closure([a, *symmetric_group_generators(a.n)], max_n)
    return frozenset(t for t in generated if t.is_singular())


# ---------------------------------------------------------------------- #
# Verification
# ---------------------------------------------------------------------- #
def verify_theorem2(n: int, max_n: Optional[int] = None) -> bool:
    """
    Each rank-<=k ideal is generated by its idempotents, and every rank-k
    element is already a product of rank-k idempotents.
    """
    if n < 2:
        raise InvalidInputError(f"n must be at least 2, got {n}")
    idempotents_by_rank = {k: enumerate_idempotents(n, k) for k in range(1, n)}
    gens: List[Transformation] = []
    for k in range(1, n):
        gens.extend(idempotents_by_rank[k])
        ideal = ideal_elements(n, k)
        if closure(gens, max_n).as_frozenset() != ideal.as_frozenset():
            logger.info("rank <= %d ideal of I_%d is not idempotent generated", k, n)
            return False
        same_rank = closure(list(idempotents_by_rank[k]), max_n)
        if any(t not in same_rank for t in ideal if t.rank == k):
            logger.info("some rank-%d element of I_%d needs lower-rank idempotents", k, n)
            return False
    logger.info("idempotent generation verified for n=%d", n)
    return True


def verify_theorem5(n: int, a: Transformation, max_n: Optional[int] = None) -> bool:
    """<C_a> == <C_e> == a^{S_n} for a = e * g, and <C_a> is generated by its idempotents."""
    ConstraintValidator.require_n(a, n)
    ConstraintValidator.require_singular(a)
    e, _ = eg_decompose(a)
    from_a = closure(list(conjugacy_class(a)), max_n).as_frozenset()
    from_e = closure(list(conjugacy_class(e)), max_n).as_frozenset()
    if not from_a == from_e == semigroup_with_symmetric_group(a, max_n):
        return False
    idempotents = [t for t in sorted(from_a) if t.is_idempotent()]
    return bool(idempotents) and closure(idempotents, max_n).as_frozenset() == from_a


def verify_corollary4(n: int, a: Transformation, max_n: Optional[int] = None) -> bool:
    """<C_e> == e^{S_n} == a^{S_n} for a = e * g."""
    ConstraintValidator.require_n(a, n)
    ConstraintValidator.require_singular(a)
    e, _ = eg_decompose(a)
    from_e = closure(list(conjugacy_class(e)), max_n).as_frozenset()
    return from_e == semigroup_with_symmetric_group(e, max_n) == semigroup_with_symmetric_group(a, max_n)


def verify_corollary3(n: int) -> bool:
    """For every singular a and idempotent f of equal rank, a == e * (conjugates of f)."""
    idempotents = {k: list(enumerate_idempotents(n, k)) for k in range(1, n)}
    for a in singular_elements(n):
        for f in idempotents[a.rank]:
            e, factors = corollary3_factor(a, f)
            if e * compose_all([c.value for c in factors], n) != a:
                return False
            if not all(c.base == f and c.verify() for c in factors):
                return False
    return True


def verify_lemma_rewrites(n: int) -> bool:
    """
    Exhaustive rewrite contract: factor counts in {0, 1, 3}, equal counts for
    both realizations, a * (x y) == a * product, and the product identity for
    every choice of pattern members.
    """
    idempotents = {k: list(enumerate_idempotents(n, k)) for k in range(1, n)}
    for a in singular_elements(n):
        for x, y in itertools.combinations(range(1, n + 1), 2):
            swapped = a * Permutation.transposition(n, x, y)
            canonical = lemma1_rewrite(a, (x, y))
            if len(canonical) not in (0, 1, 3):
                return False
            if a * compose_all(canonical, n) != swapped:
                return False
            if any(e.rank != a.rank for e in canonical):
                return False
            patterns = [pattern for _, pattern in lemma1_patterns(a, (x, y))]
            for choice in itertools.product(*(list(p.members()) for p in patterns)):
                if a * compose_all(choice, n) != swapped:
                    return False
            for f in idempotents[a.rank]:
                factors = lemma3_rewrite(a, (x, y), f)
                if len(factors) != len(canonical):
                    return False
                if a * compose_all([c.value for c in factors], n) != swapped:
                    return False
                if not all(c.verify() for c in factors):
                    return False
    return True


def random_singular(rng: random.Random, n: int) -> Transformation:
    while True:
        t = Transformation(tuple(rng.randint(1, n) for _ in range(n)))
        if t.is_singular():
            return t


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def verify_power_identity(trials: int = 10_000, max_n: int = 6, max_j: int = 6,
                          seed: Optional[int] = None) -> bool:
    """Randomized check of (a * g^-1)^j == a * a^g * ... * a^(g^(j-1)) * g^-j."""
    ConstraintValidator.require_positive(max_n)
    ConstraintValidator.require_positive(trials, "positive_trials")
    if max_j < 1:
        raise InvalidInputError(f"max_j must be at least 1, got {max_j}")
    rng = random.Random(settings.random_seed if seed is None else seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        a = Transformation(tuple(rng.randint(1, n) for _ in range(n)))
        g = random_permutation(rng, n)
        j = rng.randint(1, max_j)
        if not power_identity_check(a, g, j):
            logger.info("identity fails for a=%s g=%s j=%d", a, g.cycle_notation(), j)
            return False
    return True


def is_conjugate_of(value: Transformation, base: Transformation) -> bool:
    return in_conjugacy_class(value, base) is not None
