"""Elements of the free symmetric rack and their evaluation in finite targets.

An element ``a^w`` is a generator letter ``a`` (possibly barred) together with
a reduced word ``w`` of the free group on the same generators.  Under the
augmentation a barred letter stands for the inverse generator.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import words
from .words import Word


class FsrElement(NamedTuple):
    gen: int
    barred: bool = False
    word: Word = ()

    @property
    def letter(self) -> tuple[int, bool]:
        return (self.gen, self.barred)

    def generators(self) -> set[int]:
        return {self.gen} | words.generators_in(self.word)

    def act(self, w: Word) -> "FsrElement":
        """Right action of the free group: ``a^v`` acted on by ``w`` is ``a^(vw)``."""
        return FsrElement(self.gen, self.barred, words.mul(self.word, w))


def gen(g: int, barred: bool = False) -> FsrElement:
    return FsrElement(g, barred, ())


def letter_word(a: FsrElement) -> Word:
    """The letter of ``a`` as a one-letter word (inverse if barred)."""
    return (-(a.gen + 1),) if a.barred else (a.gen + 1,)


def augment(a: FsrElement) -> Word:
    """``a^w`` maps to ``w^-1 a w``; a barred letter maps to the inverse generator."""
    return words.mul(words.inverse(a.word), letter_word(a), a.word)


def fsr_op(a: FsrElement, b: FsrElement) -> FsrElement:
    """``(a, w)^(b, z) = (a, w z^-1 b z)``."""
    return FsrElement(a.gen, a.barred, words.mul(a.word, augment(b)))


def fsr_op_inv(a: FsrElement, b: FsrElement) -> FsrElement:
    """The unique ``c`` with ``fsr_op(c, b) == a``."""
    return FsrElement(a.gen, a.barred, words.mul(a.word, words.inverse(augment(b))))


def fsr_rho(a: FsrElement) -> FsrElement:
    return FsrElement(a.gen, not a.barred, a.word)


def word_length(a: FsrElement) -> int:
    return len(a.word)


def sort_key(a: FsrElement):
    return (len(a.word), a.gen, a.barred, a.word)


# --- evaluation in a finite symmetric quandle ------------------------------

def evaluate(a: FsrElement, target, assignment) -> int:
    """Value of ``a`` when generator ``g`` is sent to ``assignment[g]``."""
    op = target.quandle.op
    inv = target.quandle.inverse_array
    v = assignment[a.gen]
    if a.barred:
        v = target.rho[v]
    for c in a.word:
        y = assignment[abs(c) - 1]
        v = op[v][y] if c > 0 else int(inv[v, y])
    return v


def evaluate_many(a: FsrElement, target, assignments: np.ndarray) -> np.ndarray:
    """Vectorised `evaluate` over the rows of an (h, ngens) assignment array."""
    op = target.quandle.array
    inv = target.quandle.inverse_array
    v = assignments[:, a.gen]
    if a.barred:
        v = target.rho_array[v]
    for c in a.word:
        y = assignments[:, abs(c) - 1]
        v = op[v, y] if c > 0 else inv[v, y]
    return v
