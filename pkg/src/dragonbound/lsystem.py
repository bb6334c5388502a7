"""Deterministic L-system rewriting for the dragon curve and its boundary.

Words are plain Python strings over a declared alphabet.  Two families of
systems are built in:

* the curve system on ``A B + -``: ``A`` and ``B`` draw a unit segment,
  ``+`` turns the turtle 90 degrees clockwise, ``-`` counterclockwise;
* the boundary systems on ``R r L l S s``: each symbol stands for a
  two-segment boundary element whose middle turn is right (``R r``),
  left (``L l``) or straight (``S s``).  Uppercase marks an element that
  starts at an even lattice vertex, lowercase an odd one.

The rewrite of the boundary axioms tracks how each boundary element of one
curve generation splits across the next, so iterating the boundary systems
yields the exact boundary words of the diagonal polyomino (see polyomino.py
for the geometric counterpart that these words are checked against).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class AlphabetError(ValueError):
    """A word or rule uses a symbol outside the declared alphabet."""


@dataclass(frozen=True)
class Alphabet:
    """A named, closed set of single-character symbols."""

    name: str
    glyphs: str

    def __post_init__(self):
        if len(set(self.glyphs)) != len(self.glyphs):
            raise AlphabetError(f"alphabet {self.name!r} repeats a glyph")

    def __contains__(self, glyph: str) -> bool:
        return glyph in self.glyphs

    def validate(self, word: str) -> str:
        stray = set(word) - set(self.glyphs)
        if stray:
            raise AlphabetError(
                f"symbols {sorted(stray)} are not in alphabet {self.name!r}"
            )
        return word


@dataclass(frozen=True)
class LSystem:
    """A deterministic rewriting system: an alphabet, an axiom, one rule per symbol."""

    alphabet: Alphabet
    axiom: str
    rules: Mapping[str, str]
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.axiom:
            raise AlphabetError("axiom must be a nonempty word")
        self.alphabet.validate(self.axiom)
        missing = set(self.alphabet.glyphs) - set(self.rules)
        if missing:
            raise AlphabetError(f"no production for symbols {sorted(missing)}")
        for glyph, image in self.rules.items():
            self.alphabet.validate(glyph)
            self.alphabet.validate(image)
        # str.translate table; rewriting one generation is a single C-level pass
        object.__setattr__(
            self, "_table", {ord(g): img for g, img in self.rules.items()}
        )

    def step(self, word: str) -> str:
        return apply_once(self.rules, word)


def apply_once(rules: Mapping[str, str], word: str) -> str:
    """Rewrite every symbol of ``word`` in parallel through ``rules``."""
    stray = set(word) - set(rules)
    if stray:
        raise AlphabetError(f"no production for symbols {sorted(stray)}")
    return word.translate({ord(g): img for g, img in rules.items()})


def iterate(system: LSystem, n: int) -> str:
    """The n-th generation of ``system``: axiom rewritten ``n`` times.

    Materializes the full word, so callers are expected to keep ``n``
    within their own budget (the CLI enforces a cap).
    """
    if n < 0:
        raise ValueError("generation index must be nonnegative")
    word = system.axiom
    table = system._table
    for _ in range(n):
        word = word.translate(table)
    return word


def letter_counts(word: str, order: Sequence[str]) -> tuple:
    """Occurrence counts of each symbol of ``order`` within ``word``.

    Symbols of the word outside ``order`` are simply not counted.
    """
    glyphs = list(order)
    if len(set(glyphs)) != len(glyphs):
        raise ValueError("count order repeats a symbol")
    return tuple(word.count(g) for g in glyphs)


def transition_matrix(rules: Mapping[str, str], order: Sequence[str]) -> tuple:
    """Letter-count transfer matrix of ``rules`` over ``order``.

    Column j holds the counts, in ``order``, of the production image of
    ``order[j]``.  Multiplying a word's count vector by this matrix gives
    the count vector of the rewritten word, which is what makes matrix
    powers count letters of deep generations without materializing them.

    Every production image of a counted symbol must stay inside ``order``;
    otherwise one rewrite could leak counted symbols through an uncounted
    one and the matrix would stop being faithful.
    """
    glyphs = list(order)
    if len(set(glyphs)) != len(glyphs):
        raise ValueError("count order repeats a symbol")
    columns = []
    for g in glyphs:
        if g not in rules:
            raise AlphabetError(f"no production for symbol {g!r}")
        image = rules[g]
        stray = set(image) - set(glyphs)
        if stray:
            raise ValueError(
                f"production of {g!r} emits {sorted(stray)} outside the counted order"
            )
        columns.append(letter_counts(image, glyphs))
    return tuple(
        tuple(columns[j][i] for j in range(len(glyphs))) for i in range(len(glyphs))
    )


DRAGON_ALPHABET = Alphabet("curve", "AB+-")
BOUNDARY_ALPHABET = Alphabet("boundary", "RrLlSs")

DRAGON = LSystem(
    DRAGON_ALPHABET,
    "A",
    {"A": "A+B", "B": "A-B", "+": "+", "-": "-"},
)

_BOUNDARY_RULES = {"R": "Rr", "r": "S", "L": "S", "l": "Ll", "S": "Rl", "s": "Lr"}

# Full boundary of the n-th curve generation, traced clockwise from the origin.
BOUNDARY = LSystem(BOUNDARY_ALPHABET, "Rr", _BOUNDARY_RULES)
# The two halves: boundary left of the curve's start-to-end diagonal, and right of it.
LEFT_BOUNDARY = LSystem(BOUNDARY_ALPHABET, "R", _BOUNDARY_RULES)
RIGHT_BOUNDARY = LSystem(BOUNDARY_ALPHABET, "L", _BOUNDARY_RULES)

# No production image contains 's', and none of the three axioms does either,
# so 's' never occurs in any generation.  Leaving it out keeps the transfer
# matrix at 5x5; it stays in the alphabet because the element it denotes
# (straight turn, odd start) is geometrically well-formed.
COUNT_ORDER = "RrLlS"
