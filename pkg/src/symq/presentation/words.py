"""Freely reduced words in a free group.

A word is a tuple of nonzero ints: ``g + 1`` is generator ``g`` and
``-(g + 1)`` its inverse.  Every function here returns reduced words.
"""
from __future__ import annotations

from typing import Iterable, Iterator

Word = tuple[int, ...]

EMPTY: Word = ()


def letter(gen: int, exponent: int = 1) -> int:
    return gen + 1 if exponent > 0 else -(gen + 1)


def gen_of(code: int) -> int:
    return abs(code) - 1


def reduce(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for c in letters:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def mul(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        for c in w:
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple(-c for c in reversed(w))


def is_reduced(w: Word) -> bool:
    return all(c != 0 for c in w) and all(a != -b for a, b in zip(w, w[1:]))


def generators_in(w: Word) -> set[int]:
    return {gen_of(c) for c in w}


def exponent_sums(w: Word, ngens: int) -> list[int]:
    sums = [0] * ngens
    for c in w:
        sums[gen_of(c)] += 1 if c > 0 else -1
    return sums


def substitute(w: Word, images: dict[int, Word]) -> Word:
    """Replace generator ``g`` by ``images[g]`` (inverse letters by the inverse image)."""
    parts = []
    for c in w:
        g = gen_of(c)
        if g in images:
            parts.append(images[g] if c > 0 else inverse(images[g]))
        else:
            parts.append((c,))
    return mul(*parts)


def reduced_words(ngens: int, length: int) -> Iterator[Word]:
    """All reduced words of exactly ``length`` letters, in a fixed order."""
    alphabet = [c for g in range(ngens) for c in (g + 1, -(g + 1))]

    def rec(prefix: list[int]):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for c in alphabet:
            if prefix and prefix[-1] == -c:
                continue
            prefix.append(c)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def format_word(w: Word, names, style: str = "dot") -> str:
    """Render a word.

    ``dot`` gives ``x1.x2'-1`` (presentation files); ``cas`` gives
    ``x1*x2^-1`` with ``1`` for the empty word.
    """
    if style == "cas":
        if not w:
            return "1"
        return "*".join(names[gen_of(c)] + ("" if c > 0 else "^-1") for c in w)
    return ".".join(names[gen_of(c)] + ("" if c > 0 else "'-1") for c in w)
