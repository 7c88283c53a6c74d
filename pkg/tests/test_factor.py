import random

import pytest
from hypothesis import given

from algorithms.factor import (
    eg_decompose, factor_idempotents, lemma1_patterns, lemma1_rewrite, transpositions,
    verify_factorization,
)
from algorithms.oracle import singular_elements
from core.errors import InvalidInputError
from core.factorization import Factorization, FactorKind, FactorRecord
from core.permutation import Permutation
from core.transformation import Transformation, compose_all
from tests.strategies import permutations, random_singular, singular_transformations, transformations


def T(*images):
    return Transformation(images)


class TestEgDecompose:
    @pytest.mark.parametrize("a, e, g", [
        (T(2, 2, 3), T(1, 1, 3), T(2, 1, 3)),
        (T(1, 1, 3), T(1, 1, 3), T(1, 2, 3)),
        (T(3, 3, 3), T(1, 1, 1), T(3, 1, 2)),
    ])
    def test_examples(self, a, e, g):
        assert eg_decompose(a) == (e, g)

    @given(transformations())
    def test_product_and_shape(self, a):
        e, g = eg_decompose(a)
        assert e * g == a
        assert e.is_idempotent()
        assert e.kernel() == a.kernel()
        assert e.cross_section == tuple(block[0] for block in a.kernel())


class TestTranspositions:
    def test_examples(self):
        assert transpositions(Permutation.identity(3)) == []
        assert transpositions(Permutation((2, 1, 3))) == [(1, 2)]
        assert transpositions(Permutation((2, 3, 1))) == [(1, 2), (1, 3)]

    @given(permutations())
    def test_product_is_permutation(self, g):
        swaps = [Permutation.transposition(g.n, x, y) for x, y in transpositions(g)]
        assert compose_all(swaps, g.n) == g


class TestLemma1Rewrite:
    def test_both_points_outside_image(self):
        assert lemma1_rewrite(T(1, 1, 3, 3), (2, 4)) == []

    def test_one_point_in_image(self):
        assert lemma1_rewrite(T(1, 1, 3), (1, 2)) == [T(2, 2, 3)]
        assert T(1, 1, 3) * Permutation.transposition(3, 1, 2) == T(1, 1, 3) * T(2, 2, 3)

    def test_both_points_in_image(self):
        a = T(1, 2, 2)
        factors = lemma1_rewrite(a, (1, 2))
        assert factors == [T(1, 3, 3), T(2, 2, 3), T(1, 2, 1)]
        assert a * compose_all(factors, 3) == T(2, 1, 1)

    def test_pattern_kinds(self):
        kinds = [kind for kind, _ in lemma1_patterns(T(1, 2, 2), (1, 2))]
        assert kinds == [FactorKind.LEMMA1_CASE3_E2, FactorKind.LEMMA1_CASE3_E3,
                         FactorKind.LEMMA1_CASE3_E4]
        assert [kind for kind, _ in lemma1_patterns(T(1, 1, 3), (2, 1))] == [FactorKind.LEMMA1_CASE2]

    def test_rejects_permutation(self):
        with pytest.raises(InvalidInputError, match="input must be singular"):
            lemma1_rewrite(T(2, 1, 3), (1, 2))

    @pytest.mark.parametrize("swap", [(2, 2), (0, 1), (1, 4)])
    def test_rejects_bad_transposition(self, swap):
        with pytest.raises(InvalidInputError):
            lemma1_rewrite(T(1, 1, 3), swap)

    def test_random_contract(self):
        rng = random.Random(0)
        for _ in range(10_000):
            n = rng.randint(2, 8)
            a = random_singular(rng, n)
            x, y = rng.sample(range(1, n + 1), 2)
            factors = lemma1_rewrite(a, (x, y))
            assert len(factors) in (0, 1, 3)
            assert a * compose_all(factors, n) == a * Permutation.transposition(n, x, y)
            assert all(f.is_idempotent() and f.rank == a.rank for f in factors)


class TestFactorIdempotents:
    @pytest.mark.parametrize("a, values", [
        (T(2, 2, 3), [T(1, 1, 3), T(2, 2, 3)]),
        (T(1, 1, 3), [T(1, 1, 3)]),
        (T(2, 1, 1), [T(1, 2, 2), T(1, 3, 3), T(2, 2, 3), T(1, 2, 1)]),
    ])
    def test_examples(self, a, values):
        factorization = factor_idempotents(a)
        assert list(factorization.values) == values
        assert factorization.factors[0].kind is FactorKind.SEED_IDEMPOTENT
        assert verify_factorization(factorization)

    def test_rejects_permutation(self):
        with pytest.raises(InvalidInputError, match="input must be singular"):
            factor_idempotents(T(2, 1, 3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_exhaustive(self, n):
        elements = singular_elements(n)
        assert len(elements) == {2: 2, 3: 21, 4: 232}[n]
        for a in elements:
            assert verify_factorization(factor_idempotents(a)), a

    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_randomized(self, n):
        rng = random.Random(n)
        for _ in range(1000):
            a = random_singular(rng, n)
            assert verify_factorization(factor_idempotents(a)), a

    @given(singular_transformations())
    def test_intermediate_products_keep_rank(self, a):
        e, g = eg_decompose(a)
        current = e
        for x, y in transpositions(g):
            current = current * Permutation.transposition(a.n, x, y)
            assert current.rank == a.rank


class TestVerifyFactorization:
    def test_single_idempotent(self):
        record = FactorRecord(T(2, 2, 3), FactorKind.SEED_IDEMPOTENT)
        assert verify_factorization(Factorization(input=T(2, 2, 3), factors=(record,), rank=2))

    def test_tampered_factor(self):
        factorization = factor_idempotents(T(2, 1, 1))
        tampered = list(factorization.factors)
        tampered[1] = FactorRecord(Transformation.identity(3), tampered[1].kind)
        assert not verify_factorization(
            Factorization(input=factorization.input, factors=tuple(tampered), rank=2))

    def test_wrong_product(self):
        record = FactorRecord(T(1, 1, 3), FactorKind.SEED_IDEMPOTENT)
        assert not verify_factorization(Factorization(input=T(2, 2, 3), factors=(record,), rank=2))

    def test_conjugate_record_needs_witness(self):
        record = FactorRecord(T(2, 2, 3), FactorKind.CONJUGATE, Permutation((2, 1, 3)))
        assert not verify_factorization(Factorization(input=T(2, 2, 3), factors=(record,), rank=2))
        based = Factorization(input=T(2, 2, 3), factors=(record,), rank=2, base=T(1, 1, 3))
        assert verify_factorization(based)
