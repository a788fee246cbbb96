"""Bounded consequence closure of a presentation's relations.

The closure is grown with the move set of the presentation's flavor:

* reflexivity, symmetry and transitivity are carried by a union-find over the
  elements seen so far, so every recorded pair implies its whole class;
* ``R1``: ``(x, y)`` gives ``(x^a, y^a)`` and ``(x^~a, y^~a)`` for generators ``a``;
* ``R2``: ``(x, y)`` gives ``(t^x, t^y)`` and ``(t^~x, t^~y)`` for elements ``t``;
* ``S`` (symmetric flavors): ``(x, y)`` gives ``(~x, ~y)``;
* ``Q`` (quandle flavors): seeds ``(a^a, a)`` for every generator.

Pairs with an element longer than the word-length budget are discarded.
Candidates are processed smallest first (by longest word, then total length,
then discovery order), so a budget-limited run explores short consequences
before long ones.  The run stops when nothing new can be produced
(saturated) or when the pair budget is used up.
"""
from __future__ import annotations

import enum
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterator

from . import words
from .core import Relation, SymQuandlePresentation
from .fsr import FsrElement, augment, fsr_rho, sort_key


@dataclass(frozen=True)
class Budget:
    max_length: int = 4
    max_pairs: int = 10_000

    def __post_init__(self):
        if self.max_length < 0 or self.max_pairs < 1:
            raise ValueError("budget needs max_length >= 0 and max_pairs >= 1")


class _UnionFind:
    def __init__(self):
        self.parent: dict[FsrElement, FsrElement] = {}

    def find(self, x: FsrElement) -> FsrElement:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            nxt = parent.get(x, x)
            parent[x] = root
            x = nxt
        return root

    def union(self, x: FsrElement, y: FsrElement) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if sort_key(ry) < sort_key(rx):
                rx, ry = ry, rx
            self.parent[ry] = rx
            self.parent.setdefault(rx, rx)


def canonical_pair(x: FsrElement, y: FsrElement) -> Relation:
    return (x, y) if sort_key(x) <= sort_key(y) else (y, x)


@dataclass
class Closure:
    """Result of `consequence_closure`.

    ``pairs`` holds the recorded pairs in canonical order; membership via
    ``in`` also accounts for symmetry and transitivity.
    """

    pairs: list[Relation] = field(default_factory=list)
    saturated: bool = False
    _uf: _UnionFind = field(default_factory=_UnionFind, repr=False)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return x == y or self._uf.find(x) == self._uf.find(y)

    def __len__(self) -> int:
        return len(self.pairs)

    def classes(self) -> list[list[FsrElement]]:
        """Equivalence classes of every element that occurs in a recorded pair."""
        groups: dict[FsrElement, list[FsrElement]] = {}
        for x in self._uf.parent:
            groups.setdefault(self._uf.find(x), []).append(x)
        return [sorted(g, key=sort_key) for g in sorted(groups.values(), key=lambda g: sort_key(min(g, key=sort_key)))]


def _priority(x: FsrElement, y: FsrElement) -> tuple[int, int]:
    lx, ly = len(x.word), len(y.word)
    return (max(lx, ly), lx + ly)


class _Engine:
    def __init__(self, p: SymQuandlePresentation, budget: Budget):
        self.p = p
        self.L = budget.max_length
        self.M = budget.max_pairs
        self.symmetric = p.flavor.symmetric
        self.letters = [FsrElement(g, b, ()) for g in range(p.ngens)
                        for b in ((False, True) if self.symmetric else (False,))]
        self.closure = Closure()
        self.seen: set[Relation] = set()
        self.heap: list = []
        self.seq = itertools.count()

    def fits(self, x: FsrElement) -> bool:
        return len(x.word) <= self.L

    def push(self, x: FsrElement, y: FsrElement) -> None:
        if x == y or not (self.fits(x) and self.fits(y)):
            return
        pair = canonical_pair(x, y)
        if pair in self.seen:
            return
        heapq.heappush(self.heap, (_priority(*pair), next(self.seq), pair, None))

    def push_stream(self, stream: Iterator[Relation]) -> None:
        for x, y in stream:
            if x != y:
                pair = canonical_pair(x, y)
                heapq.heappush(self.heap, (_priority(*pair), next(self.seq), pair, stream))
                return

    def r2_stream(self, x: FsrElement, y: FsrElement) -> Iterator[Relation]:
        """``(t^x, t^y)`` and ``(t^~x, t^~y)`` for all ``t``, by increasing size.

        For ``t = c^u`` the pair is ``(c^(u dx), c^(u dy))`` with ``d`` the
        augmentation.  ``u`` is split as ``u' s`` where ``s`` cancels exactly
        the first ``k`` letters of ``dx``, so only prefixes keeping the
        ``x`` side within the budget are visited.
        """
        dx, dy = augment(x), augment(y)
        if dx == dy:
            # t^x == t^y for every t: nothing but diagonal pairs
            return
        actions = [(dx, dy), (words.inverse(dx), words.inverse(dy))]
        for size in range(self.L + 1):
            for ax, ay in actions:
                for k in range(len(ax) + 1):
                    n = size - (len(ax) - k)
                    if n < 0:
                        continue
                    s = words.inverse(ax[:k])
                    rest = ax[k:]
                    for head in words.reduced_words(self.p.ngens, n):
                        if head and k and head[-1] == ax[k - 1]:
                            continue
                        if head and rest and head[-1] == -rest[0]:
                            continue
                        wx = head + rest
                        wy = words.mul(head, s, ay)
                        if len(wy) > self.L:
                            continue
                        for c in self.letters:
                            yield FsrElement(c.gen, c.barred, wx), FsrElement(c.gen, c.barred, wy)

    def record(self, x: FsrElement, y: FsrElement) -> None:
        self.seen.add((x, y))
        self.closure.pairs.append((x, y))
        self.closure._uf.union(x, y)
        if self.symmetric:
            self.push(fsr_rho(x), fsr_rho(y))
        for g in range(self.p.ngens):
            for c in (g + 1, -(g + 1)):
                self.push(x.act((c,)), y.act((c,)))
        self.push_stream(self.r2_stream(x, y))

    def run(self, goal: Relation | None = None) -> bool:
        """Grow the closure; returns True as soon as ``goal`` is implied."""
        for u, v in self.p.relations:
            self.push(u, v)
        if self.p.flavor.idempotent:
            for g in range(self.p.ngens):
                a = FsrElement(g, False, ())
                self.push(a.act((g + 1,)), a)
        while self.heap:
            _, _, pair, stream = heapq.heappop(self.heap)
            if stream is not None:
                self.push_stream(stream)
            if pair in self.seen:
                continue
            if len(self.closure.pairs) >= self.M:
                return goal is not None and goal in self.closure
            self.record(*pair)
            if goal is not None and goal in self.closure:
                return True
        self.closure.saturated = True
        return goal is not None and goal in self.closure


def consequence_closure(p: SymQuandlePresentation, budget: Budget = Budget()) -> Closure:
    engine = _Engine(p, budget)
    engine.run()
    return engine.closure


class Proof(enum.Enum):
    PROVEN = "proven"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is Proof.PROVEN


def search_equal(p: SymQuandlePresentation, lhs: FsrElement, rhs: FsrElement,
                 budget: Budget = Budget()) -> tuple[Proof, Closure]:
    """Like `prove_equal`, also returning the (possibly partial) closure explored."""
    engine = _Engine(p, budget)
    if lhs == rhs:
        return Proof.PROVEN, engine.closure
    found = engine.run(goal=(lhs, rhs))
    return (Proof.PROVEN if found else Proof.UNKNOWN), engine.closure


def prove_equal(p: SymQuandlePresentation, lhs: FsrElement, rhs: FsrElement,
                budget: Budget = Budget()) -> Proof:
    """Semi-decide equality of two elements in the presented structure.

    Stops as soon as the pair is implied by the closure grown so far, which is
    a prefix of the full budgeted closure.  Never reports inequality.
    """
    return search_equal(p, lhs, rhs, budget)[0]
