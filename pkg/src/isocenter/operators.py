"""Homogeneous derivations, Lie brackets and word-indexed nested brackets.

A derivation is stored by its values on the coordinates only (the pair
(dx, dy)); second-order compositions are never materialized.  The nested
bracket of a word n1...nr is left-nested with the last letter outermost:
[B_{nr}, [B_{n_{r-1}}, ..., [B_{n2}, B_{n1}]...]].  This nesting order is
fixed project-wide.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import BiPoly
from .errors import InputError

Letter = tuple[int, int]
Word = tuple[Letter, ...]


@dataclass(frozen=True)
class Derivation:
    """First-order operator dx * d/dx + dy * d/dy.

    ``letter`` tags homogeneous operators by their degree; the zero
    derivation carries no letter and compares equal to every other zero
    derivation regardless of tags.
    """

    dx: BiPoly
    dy: BiPoly
    letter: Letter | None = None

    def apply(self, p: BiPoly) -> BiPoly:
        return self.dx * p.partial("x") + self.dy * p.partial("y")

    def is_zero(self) -> bool:
        return self.dx.is_zero() and self.dy.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.dx == other.dx and self.dy == other.dy

    def __hash__(self):
        return hash((self.dx, self.dy))

    def __neg__(self) -> "Derivation":
        return Derivation(-self.dx, -self.dy, self.letter)

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.dx - other.dx, self.dy - other.dy)

    def scale(self, scalar) -> "Derivation":
        return Derivation(self.dx.scale(scalar), self.dy.scale(scalar), self.letter)

    def to_dict(self) -> dict:
        out = {"dx": self.dx.to_dict(), "dy": self.dy.to_dict()}
        if self.letter is not None:
            out["letter"] = f"{self.letter[0]},{self.letter[1]}"
        return out

    def __str__(self) -> str:
        tag = f" [{self.letter[0]},{self.letter[1]}]" if self.letter else ""
        return f"({self.dx})dx + ({self.dy})dy{tag}"


ZERO_DERIVATION = Derivation(BiPoly.zero(), BiPoly.zero())


def hom_op(letter: Letter, dx: BiPoly, dy: BiPoly) -> Derivation:
    """Build a homogeneous operator, checking the multidegree invariant.

    The dx part must be zero or a monomial multiple of x^(n1+1) y^n2 and
    the dy part zero or a monomial multiple of x^n1 y^(n2+1).
    """
    n1, n2 = letter
    for part, shift in ((dx, (1, 0)), (dy, (0, 1))):
        if part.is_zero():
            continue
        want = (n1 + shift[0], n2 + shift[1])
        if part.multidegree() != want:
            raise InputError(
                f"operator part {part} is not homogeneous of multidegree {want}"
            )
    return Derivation(dx, dy, letter)


def lie_bracket(d1: Derivation, d2: Derivation) -> Derivation:
    """[d1, d2] = d1∘d2 - d2∘d1, returned as a derivation.

    If both arguments are homogeneous with letters n and m, a nonzero
    result is homogeneous with letter n + m.
    """
    dx = d1.apply(d2.dx) - d2.apply(d1.dx)
    dy = d1.apply(d2.dy) - d2.apply(d1.dy)
    letter = None
    if d1.letter is not None and d2.letter is not None and (dx or dy):
        letter = (d1.letter[0] + d2.letter[0], d1.letter[1] + d2.letter[1])
    return Derivation(dx, dy, letter)


def bracket_oracle(d1: Derivation, d2: Derivation, p: BiPoly) -> BiPoly:
    """Independent check value: d1(d2(p)) - d2(d1(p)) by double application."""
    return d1.apply(d2.apply(p)) - d2.apply(d1.apply(p))


def nested_bracket(word: Sequence[Letter], ops: Mapping[Letter, Derivation]) -> Derivation:
    """Left-nested bracket of the word's operators.

    A length-1 word returns the operator itself; longer words fold the
    next letter in as the left bracket argument.
    """
    if not word:
        raise InputError("nested bracket of the empty word is undefined")
    for letter in word:
        if letter not in ops:
            raise InputError(f"unknown letter {letter}")
    acc = ops[word[0]]
    for letter in word[1:]:
        acc = lie_bracket(ops[letter], acc)
    return acc


def word_str(word: Sequence[Letter]) -> str:
    return "·".join(f"({n1},{n2})" for n1, n2 in word)


_LETTER_RE = _re.compile(r"^\((-?\d+),(-?\d+)\)$")


def parse_word(text: str) -> Word:
    letters = []
    for chunk in text.split("·"):
        m = _LETTER_RE.match(chunk.strip())
        if not m:
            raise InputError(f"cannot parse word letter {chunk!r}")
        letters.append((int(m.group(1)), int(m.group(2))))
    return tuple(letters)
