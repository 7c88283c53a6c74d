"""
Idempotent factorization of singular transformations.

Any singular a splits as a = e * g with e idempotent and g a permutation; g is
a product of transpositions, and each transposition is traded for at most
three idempotents of the same rank. The result is a product of idempotents of
rank(a) that equals a.
"""

import logging
from typing import List, Sequence, Tuple

from core.errors import InvalidInputError
from core.factorization import ConjugateFactor, FactorKind, FactorRecord, Factorization
from core.idempotent import Idempotent, IdempotentPattern
from core.interfaces import PatternRealizerInterface
from core.permutation import Permutation
from core.transformation import Transformation
from shared.utils.constraint_validator import ConstraintValidator

logger = logging.getLogger(__name__)

Transposition = Tuple[int, int]


def eg_decompose(a: Transformation) -> Tuple[Idempotent, Permutation]:
    """
    Split ``a`` as ``e * g``.

    e collapses each kernel class of a onto its least point; g sends that point
    to its image under a and matches the unused points in increasing order.
    """
    n = a.n
    kernel = a.kernel()
    cross_section = [block[0] for block in kernel.classes]
    e = Idempotent.from_partition(kernel, cross_section)

    images = [0] * n
    for x in cross_section:
        images[x - 1] = a(x)
    unused_domain = sorted(set(range(1, n + 1)) - set(cross_section))
    unused_codomain = sorted(set(range(1, n + 1)) - a.image)
    for x, y in zip(unused_domain, unused_codomain):
        images[x - 1] = y
    return e, Permutation(tuple(images))


def transpositions(g: Permutation) -> List[Transposition]:
    """(c1 c2 ... cl) -> (c1 c2)(c1 c3)...(c1 cl), cycles by least point."""
    result = []
    for cycle in g.cycles():
        head = cycle[0]
        result.extend((head, other) for other in cycle[1:])
    return result


def lemma1_patterns(a: Transformation, swap: Transposition) -> List[Tuple[FactorKind, IdempotentPattern]]:
    """
    Patterns whose members e1 (or e2, e3, e4) satisfy a * (x y) == a * e1 (* e2 * e3).

    Returns an empty list when neither point lies in the image of a.
    """
    ConstraintValidator.require_singular(a)
    n = a.n
    x, y = swap
    if x == y:
        raise InvalidInputError(f"transposition needs two distinct points, got ({x} {y})")
    for point in (x, y):
        if not 1 <= point <= n:
            raise InvalidInputError(f"transposition point {point} outside [{n}]")

    image = a.image
    if x not in image and y not in image:
        return []

    if (x in image) != (y in image):
        a1, outside = (x, y) if x in image else (y, x)
        rest = sorted(image - {a1})
        pattern = IdempotentPattern.of(n, (outside, a1), *((r,) for r in rest))
        return [(FactorKind.LEMMA1_CASE2, pattern)]

    a1, a2 = x, y
    u = min(set(range(1, n + 1)) - image)
    rest = [(r,) for r in sorted(image - {a1, a2})]
    return [
        (FactorKind.LEMMA1_CASE3_E2, IdempotentPattern.of(n, (a1,), (u, a2), *rest)),
        (FactorKind.LEMMA1_CASE3_E3, IdempotentPattern.of(n, (u,), (a2, a1), *rest)),
        (FactorKind.LEMMA1_CASE3_E4, IdempotentPattern.of(n, (a1, u), (a2,), *rest)),
    ]


class CanonicalRealizer(PatternRealizerInterface):
    """Realizes every pattern by its canonical member."""

    def realize(self, pattern: IdempotentPattern, kind: FactorKind) -> FactorRecord:
        return FactorRecord(pattern.canonical(), kind)


def rewrite_swaps(seed: Transformation, swaps: Sequence[Transposition],
                  realizer: PatternRealizerInterface) -> List[FactorRecord]:
    """
    Trade ``seed * (x1 y1) * ... * (xm ym)`` for ``seed * (returned factors)``.

    Every intermediate product keeps the rank of ``seed``.
    """
    records: List[FactorRecord] = []
    current = seed
    for x, y in swaps:
        step = [realizer.realize(pattern, kind) for kind, pattern in lemma1_patterns(current, (x, y))]
        logger.debug("rewrite %s by (%d %d): %d factor(s)", current, x, y, len(step))
        records.extend(step)
        current = current * Permutation.transposition(current.n, x, y)
    return records


def lemma1_rewrite(a: Transformation, swap: Transposition) -> List[Idempotent]:
    return [Idempotent(record.value.images)
            for record in rewrite_swaps(a, [swap], CanonicalRealizer())]


def factor_idempotents(a: Transformation) -> Factorization:
    """
    Factor a singular map into idempotents of its own rank.

    Raises:
        InvalidInputError: If ``a`` is a permutation
    """
    ConstraintValidator.require_singular(a)
    e, g = eg_decompose(a)
    swaps = transpositions(g)
    records = [FactorRecord(e, FactorKind.SEED_IDEMPOTENT)]
    records.extend(rewrite_swaps(e, swaps, CanonicalRealizer()))
    logger.debug("factor %s: e=%s g=%s, %d transposition(s)", a, e, g.cycle_notation(), len(swaps))
    return Factorization(input=a, factors=tuple(records), rank=a.rank)


def verify_factorization(f: Factorization) -> bool:
    """Recompute the product and check every factor against its kind's contract."""
    if not f.factors or f.rank != f.input.rank:
        return False
    if any(record.value.n != f.n for record in f.factors):
        return False
    if f.product() != f.input:
        return False
    for record in f.factors:
        if record.kind is FactorKind.CONJUGATE:
            if record.conjugator is None or f.base is None:
                return False
            if not ConjugateFactor(f.base, record.conjugator, record.value).verify():
                return False
        elif not record.value.is_idempotent() or record.value.rank != f.rank:
            return False
    return True
