"""
Factorizations whose factors are conjugates t^g = g^-1 * t * g of one element.

The idempotent pipeline from ``algorithms.factor`` is reused with a different
pattern realizer: instead of the canonical member of each bracket pattern, a
conjugate of a fixed idempotent f is chosen. Words in a and the symmetric
group are then rewritten segment by segment until every factor is a
conjugate of a itself.
"""

import logging
from typing import List, Optional, Tuple

from algorithms.factor import eg_decompose, rewrite_swaps, transpositions
from core.errors import InvalidInputError
from core.factorization import ConjugateFactor, FactorKind, FactorRecord, Factorization
from core.idempotent import Idempotent, IdempotentPattern
from core.interfaces import PatternRealizerInterface
from core.permutation import Permutation, symmetric_group
from core.transformation import Transformation, compose_all
from core.word import Word
from shared.utils.constraint_validator import ConstraintValidator

logger = logging.getLogger(__name__)


def conjugate(t: Transformation, g: Permutation) -> Transformation:
    """t^g = g^-1 * t * g, a right action: t^(g*h) == (t^g)^h."""
    ConstraintValidator.require_same_n(t, g)
    return Transformation((g.inverse() * t * g).images)


def _as_singular_idempotent(f: Transformation) -> Idempotent:
    if not f.is_idempotent():
        raise InvalidInputError(f"base must be idempotent: {f}")
    ConstraintValidator.require_singular(f)
    return Idempotent(f.images)


def conjugator_into_pattern(f: Transformation, target: IdempotentPattern) -> Permutation:
    """
    Return g with f^g matching ``target``.

    The target must carry exactly one entry with exactly one extra point.
    f's non-singleton class with the least representative w supplies w and its
    least other member x1; w goes to that entry's representative, x1 to its
    extra point, and the remaining representatives and leftover points are
    matched in increasing order.

    Raises:
        InvalidInputError: On rank mismatch, a non-singular f or a malformed target
    """
    f = _as_singular_idempotent(f)
    if target.n != f.n:
        raise InvalidInputError(f"domain sizes differ ({f.n} vs {target.n})")
    if len(target.entries) != f.rank:
        raise InvalidInputError(f"rank of base ({f.rank}) must equal pattern size ({len(target.entries)})")
    marked = target.extras_entries()
    if len(marked) != 1 or len(marked[0].extras) != 1:
        raise InvalidInputError(f"target needs exactly one entry with one extra point: {target}")

    n = f.n
    big_classes = [block for block in f.partition.classes if len(block) >= 2]
    block = min(big_classes, key=lambda b: f(b[0]))
    w = f(block[0])
    x1 = min(set(block) - {w})

    entry = marked[0]
    (extra,) = entry.extras
    mapping = {w: entry.representative, x1: extra}
    source_reps = sorted(f.image - {w})
    target_reps = sorted(set(target.representatives) - {entry.representative})
    mapping.update(zip(source_reps, target_reps))

    leftover_domain = sorted(set(range(1, n + 1)) - set(mapping))
    leftover_codomain = sorted(set(range(1, n + 1)) - set(mapping.values()))
    mapping.update(zip(leftover_domain, leftover_codomain))
    return Permutation(tuple(mapping[point] for point in range(1, n + 1)))


class ConjugateRealizer(PatternRealizerInterface):
    """Realizes every pattern by a conjugate of a fixed singular idempotent."""

    def __init__(self, base: Transformation):
        self.base = _as_singular_idempotent(base)

    def realize(self, pattern: IdempotentPattern, kind: FactorKind) -> FactorRecord:
        g = conjugator_into_pattern(self.base, pattern)
        return FactorRecord(conjugate(self.base, g), FactorKind.CONJUGATE, g)


def _pair_conjugate_factors(e: Transformation, g: Permutation, f: Transformation) -> List[ConjugateFactor]:
    """Conjugates of f whose product p satisfies e * p == e * g."""
    ConstraintValidator.require_same_rank(e, f)
    realizer = ConjugateRealizer(f)
    records = rewrite_swaps(e, transpositions(g), realizer)
    return [ConjugateFactor(realizer.base, record.conjugator, record.value) for record in records]


def lemma3_rewrite(a: Transformation, swap: Tuple[int, int], f: Transformation) -> List[ConjugateFactor]:
    """
    Like ``lemma1_rewrite`` but every factor is a conjugate of f.

    Raises:
        InvalidInputError: If rank(f) != rank(a) or f is not a singular idempotent
    """
    ConstraintValidator.require_singular(a)
    ConstraintValidator.require_same_rank(a, f)
    realizer = ConjugateRealizer(f)
    return [ConjugateFactor(realizer.base, record.conjugator, record.value)
            for record in rewrite_swaps(a, [swap], realizer)]


def corollary3_factor(a: Transformation, f: Transformation) -> Tuple[Idempotent, List[ConjugateFactor]]:
    """Return (e, factors) with e * (product of factor values) == a, all factors in C_f."""
    ConstraintValidator.require_singular(a)
    ConstraintValidator.require_same_rank(a, f)
    e, g = eg_decompose(a)
    return e, _pair_conjugate_factors(e, g, f)


def factor_conjugates(a: Transformation, f: Transformation) -> Factorization:
    """``corollary3_factor`` packaged as a seed idempotent followed by conjugates of f."""
    e, factors = corollary3_factor(a, f)
    records = [FactorRecord(e, FactorKind.SEED_IDEMPOTENT)]
    records.extend(FactorRecord(c.value, FactorKind.CONJUGATE, c.conjugator) for c in factors)
    return Factorization(input=a, factors=tuple(records), rank=a.rank,
                         base=Transformation(f.images))


def corollary4_segment_factor(h: Permutation, e: Transformation, g: Permutation) -> List[ConjugateFactor]:
    """
    Conjugates of e multiplying to h * e * g.

    h * e is rewritten through e' = e^(h^-1) = h * e * h^-1 and the pair
    (e', h); e * g through the pair (e, g). When h is the identity the first
    half is e itself.

    Raises:
        InvalidInputError: If e is not a singular idempotent
    """
    e = _as_singular_idempotent(e)
    ConstraintValidator.require_same_n(h, e, g)
    identity = Permutation.identity(e.n)

    factors: List[ConjugateFactor] = []
    if not h.is_identity():
        h_inv = h.inverse()
        shifted = conjugate(e, h_inv)
        factors.append(ConjugateFactor(e, h_inv, shifted))
        for factor in _pair_conjugate_factors(shifted, h, shifted):
            factors.append(ConjugateFactor(e, h_inv * factor.conjugator, factor.value))
    factors.append(ConjugateFactor(e, identity, e))
    factors.extend(_pair_conjugate_factors(e, g, e))
    return factors


def theorem5_leading_idempotent(a: Transformation) -> Tuple[List[ConjugateFactor], Idempotent]:
    """
    Return ([a^(g^0), ..., a^(g^(m-1))], e) where a = e * g and m = order(g).

    The product of the factors is e.
    """
    ConstraintValidator.require_singular(a)
    e, g = eg_decompose(a)
    factors = []
    for j in range(g.order()):
        power = g.power(j)
        factors.append(ConjugateFactor(a, power, conjugate(a, power)))
    return factors, e


def power_identity_check(a: Transformation, g: Permutation, j: int) -> bool:
    """(a * g^-1)^j == a * a^g * ... * a^(g^(j-1)) * g^-j."""
    ConstraintValidator.require_same_n(a, g)
    if j < 1:
        raise InvalidInputError(f"exponent must be positive, got {j}")
    lhs = (a * g.inverse()).power(j)
    rhs = compose_all([conjugate(a, g.power(i)) for i in range(j)] + [g.power(-j)], a.n)
    return lhs == rhs


def factor_word_into_conjugates(w: Word) -> List[ConjugateFactor]:
    """
    Rewrite a word in a and permutations as a product of conjugates of a.

    Each a is replaced by e * g_a; the word is cut into segments h * e * g
    (permutations between occurrences attach to the following segment, the
    trailing one to the last); each segment becomes conjugates of e, and each
    e^c is expanded into (a^(g_a^j))^c for j < order(g_a).
    """
    a = w.base
    ConstraintValidator.require_singular(a)
    e, g_a = eg_decompose(a)
    leading, _ = theorem5_leading_idempotent(a)
    identity = Permutation.identity(a.n)

    r = w.occurrences
    factors: List[ConjugateFactor] = []
    for i in range(1, r + 1):
        h = w.perms[0] if i == 1 else g_a * w.perms[i - 1]
        g = g_a * w.perms[r] if i == r else identity
        for segment_factor in corollary4_segment_factor(h, e, g):
            c = segment_factor.conjugator
            for lead in leading:
                conjugator = lead.conjugator * c
                factors.append(ConjugateFactor(a, conjugator, conjugate(a, conjugator)))
    logger.debug("word %s: %d segment(s), %d conjugate factor(s)", w, r, len(factors))
    return factors


def factor_word(w: Word) -> Factorization:
    """``factor_word_into_conjugates`` packaged as a Factorization over base a."""
    factors = factor_word_into_conjugates(w)
    value = w.evaluate()
    records = tuple(FactorRecord(c.value, FactorKind.CONJUGATE, c.conjugator) for c in factors)
    return Factorization(input=value, factors=records, rank=value.rank, base=w.base)


def in_conjugacy_class(value: Transformation, base: Transformation) -> Optional[Permutation]:
    """Return a witness g with base^g == value, or None."""
    if value.n != base.n or value.kernel_class_sizes() != base.kernel_class_sizes():
        return None
    for g in symmetric_group(base.n):
        if conjugate(base, g) == value:
            return g
    return None
