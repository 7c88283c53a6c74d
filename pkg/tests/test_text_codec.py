import pytest
from hypothesis import given

from core.errors import InvalidInputError
from core.permutation import Permutation
from core.transformation import Transformation
from shared.utils.text_codec import (
    format_permutation, format_transformation, format_word, parse_permutation,
    parse_transformation, parse_word,
)
from tests.strategies import permutations, transformations


class TestTransformationText:
    def test_parse(self):
        assert parse_transformation("2 2 3") == Transformation((2, 2, 3))
        assert parse_transformation(" 2,2, 3 ", 3) == Transformation((2, 2, 3))

    @pytest.mark.parametrize("text, n, message", [
        ("", None, "empty"),
        ("2 x 1", 3, "unparseable"),
        ("2 2", 3, "expected 3 points, got 2"),
        ("4 1 1", 3, "outside"),
    ])
    def test_rejects(self, text, n, message):
        with pytest.raises(InvalidInputError, match=message):
            parse_transformation(text, n)

    @given(transformations())
    def test_printed_form_reparses(self, t):
        assert parse_transformation(format_transformation(t), t.n) == t


class TestPermutationText:
    def test_cycle_notation(self):
        assert parse_permutation("(1 2)(3 4)", 4) == Transformation((2, 1, 4, 3))
        assert parse_permutation("()", 3) == Permutation.identity(3)
        assert parse_permutation("(1 3 2)", 3) == Transformation((3, 1, 2))

    def test_image_list(self):
        assert parse_permutation("2 3 1", 3) == Permutation.cyclic(3)

    @pytest.mark.parametrize("text", ["(1 1)", "(1 2", "(1 2)x", "(1 a)", "2 1 1", "(1 4)"])
    def test_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_permutation(text, 3)

    @given(permutations())
    def test_cycle_notation_reparses(self, g):
        assert parse_permutation(format_permutation(g), g.n) == g


class TestWordText:
    a = Transformation((2, 2, 3))

    def test_parse(self):
        word = parse_word("() | a | (1 2)", self.a)
        assert word.occurrences == 1
        assert word.evaluate() == Transformation((1, 1, 3))

    def test_empty_permutation_is_identity(self):
        word = parse_word(" | a | ", self.a)
        assert word.evaluate() == self.a

    def test_formats_back(self):
        text = "(1 2) | a | () | a | (2 3)"
        assert format_word(parse_word(text, self.a)) == text

    @pytest.mark.parametrize("text", ["()", "() | a", "() | b | ()", "() | a | a | ()"])
    def test_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_word(text, self.a)
