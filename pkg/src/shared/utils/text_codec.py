"""
Text forms of transformations, permutations and words.

Transformations are space-separated 1-based images ("2 2 3"). Permutations
may also be written in cycle notation with fixed points omitted ("(1 2)(3 4)",
identity "()"). Words read "g0 | a | g1 | ... | a | gr".
"""

import re
from typing import Optional

from core.errors import InvalidInputError
from core.permutation import Permutation
from core.transformation import Transformation
from core.word import Word

_CYCLE = re.compile(r"\(([^()]*)\)")
_BASE_TOKEN = "a"


def parse_transformation(text: str, n: Optional[int] = None) -> Transformation:
    """
    Parse an image list.

    Raises:
        InvalidInputError: If the text is not a valid map (of size ``n`` when given)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InvalidInputError("empty transformation text")
    try:
        images = tuple(int(token) for token in tokens)
    except ValueError as exc:
        raise InvalidInputError(f"unparseable transformation: {text!r}") from exc
    if n is not None and len(images) != n:
        raise InvalidInputError(f"expected {n} points, got {len(images)}")
    return Transformation(images)


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse either cycle notation or an image list."""
    stripped = text.strip()
    if stripped.startswith("("):
        cycles = []
        remainder = _CYCLE.sub("", stripped)
        if remainder.strip():
            raise InvalidInputError(f"unparseable cycle notation: {text!r}")
        for body in _CYCLE.findall(stripped):
            try:
                cycle = tuple(int(token) for token in body.replace(",", " ").split())
            except ValueError as exc:
                raise InvalidInputError(f"unparseable cycle notation: {text!r}") from exc
            if cycle:
                cycles.append(cycle)
        return Permutation.from_cycles(n, cycles)
    return Permutation(parse_transformation(stripped, n).images)


def format_transformation(t: Transformation) -> str:
    return str(t)


def format_permutation(g: Permutation) -> str:
    return g.cycle_notation()


def parse_word(text: str, base: Transformation) -> Word:
    """
    Parse "g0 | a | g1 | ... | a | gr"; permutations use cycle or image notation.

    Raises:
        InvalidInputError: If tokens do not alternate or no ``a`` occurs
    """
    tokens = [token.strip() for token in text.split("|")]
    if len(tokens) < 3 or len(tokens) % 2 == 0:
        raise InvalidInputError(f"word must alternate permutations and 'a': {text!r}")
    perms = []
    for index, token in enumerate(tokens):
        if index % 2 == 1:
            if token != _BASE_TOKEN:
                raise InvalidInputError(f"expected 'a' at position {index}, got {token!r}")
        else:
            perms.append(parse_permutation(token or "()", base.n))
    return Word(base, tuple(perms))


def format_word(w: Word) -> str:
    return str(w)
