"""Colorings of diagrams by finite symmetric quandles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import SymmetricQuandleTable
from .diagram.model import Diagram, presentation_from_diagram
from .presentation import GroupPresentation, abelianization, associated_group, hom_count

MAX_COUNT = 2**63 - 1

Coloring = tuple[int, ...]


class _Solver:
    """Constraint propagation with backtracking over uncolored semi-sheets."""

    def __init__(self, d: Diagram, target: SymmetricQuandleTable):
        self.d = d
        self.op = target.quandle.op
        self.inv = target.quandle.inverse_array.tolist()
        self.rho = list(target.rho)
        self.k = target.quandle.n
        self.watch: list[list[int]] = [[] for _ in range(d.m)]
        for idx, s in enumerate(d.strata):
            for x in set(s.sheets):
                self.watch[x].append(idx)

    def propagate(self, color: list, queue: list[int], trail: list[int]) -> bool:
        """Force colors until a fixed point; False on a contradiction."""
        op, inv, rho = self.op, self.inv, self.rho
        strata = self.d.strata

        def put(x, v):
            if color[x] is None:
                color[x] = v
                trail.append(x)
                queue.extend(self.watch[x])
                return True
            return color[x] == v

        while queue:
            s = strata[queue.pop()]
            i, j = s.upper
            ci, cj = color[i], color[j]
            # A-relation: c(i) = c(j), or rho(c(j)) when incoherent
            if s.upper_coherent:
                if ci is not None and not put(j, ci):
                    return False
                if cj is not None and not put(i, cj):
                    return False
            else:
                if ci is not None and not put(j, rho[ci]):
                    return False
                if cj is not None and not put(i, rho[cj]):
                    return False
            # B-relation: c(s)^c(over) = c(t), or rho(c(t))
            a, b = s.lower
            co, ca, cb = color[s.over], color[a], color[b]
            if co is None:
                continue
            if ca is not None:
                v = op[ca][co]
                if not put(b, v if s.lower_coherent else rho[v]):
                    return False
            elif cb is not None:
                v = cb if s.lower_coherent else rho[cb]
                if not put(a, inv[v][co]):
                    return False
        return True

    def solutions(self) -> Iterator[Coloring]:
        color: list = [None] * self.d.m
        trail: list[int] = []
        if not self.propagate(color, [], trail):
            return
        yield from self._branch(color)

    def _branch(self, color: list) -> Iterator[Coloring]:
        try:
            x = color.index(None)
        except ValueError:
            yield tuple(color)
            return
        for v in range(self.k):
            trail: list[int] = []
            color[x] = v
            trail.append(x)
            if self.propagate(color, list(self.watch[x]), trail):
                yield from self._branch(color)
            for y in trail:
                color[y] = None

    def components(self) -> list[list[int]]:
        """Semi-sheets grouped by the strata that link them."""
        parent = list(range(self.d.m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in self.d.strata:
            root = find(s.sheets[0])
            for x in s.sheets[1:]:
                parent[find(x)] = root
        groups: dict[int, list[int]] = {}
        for x in range(self.d.m):
            groups.setdefault(find(x), []).append(x)
        return list(groups.values())

    def count(self) -> int:
        # independent components multiply; each is counted by backtracking
        color: list = [None] * self.d.m
        total = 1
        for group in self.components():
            total *= self._count(color, group)
            if total == 0:
                return 0
            if total > MAX_COUNT:
                raise OverflowError("coloring count exceeds 64-bit range")
        return total

    def _count(self, color: list, group: list[int]) -> int:
        x = next((y for y in group if color[y] is None), None)
        if x is None:
            return 1
        total = 0
        for v in range(self.k):
            trail = [x]
            color[x] = v
            if self.propagate(color, list(self.watch[x]), trail):
                total += self._count(color, group)
                if total > MAX_COUNT:
                    raise OverflowError("coloring count exceeds 64-bit range")
            for y in trail:
                color[y] = None
        return total


def count_colorings(d: Diagram, target: SymmetricQuandleTable) -> int:
    """Number of (X, rho)-colorings of ``d``."""
    return _Solver(d, target).count()


@dataclass(frozen=True)
class ColoringList:
    colorings: tuple[Coloring, ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)


def enumerate_colorings(d: Diagram, target: SymmetricQuandleTable,
                        limit: int | None = None) -> ColoringList:
    """Colorings in lexicographic order, at most ``limit`` of them."""
    # branching picks the lowest free semi-sheet and values in increasing
    # order, but propagation can fill later sheets first, so sort anyway
    found = []
    for c in _Solver(d, target).solutions():
        found.append(c)
    found.sort()
    if limit is not None and len(found) > limit:
        return ColoringList(tuple(found[:limit]), True)
    return ColoringList(tuple(found), False)


def is_coloring(d: Diagram, target: SymmetricQuandleTable, coloring: Sequence[int]) -> bool:
    """Check every A- and B-relation directly."""
    if len(coloring) != d.m or not all(0 <= v < target.quandle.n for v in coloring):
        return False
    op, rho = target.quandle.op, target.rho
    for s in d.strata:
        i, j = s.upper
        want = coloring[j] if s.upper_coherent else rho[coloring[j]]
        if coloring[i] != want:
            return False
        a, b = s.lower
        want = coloring[b] if s.lower_coherent else rho[coloring[b]]
        if op[coloring[a]][coloring[s.over]] != want:
            return False
    return True


def coloring_hom_crosscheck(d: Diagram, target: SymmetricQuandleTable) -> bool:
    return count_colorings(d, target) == hom_count(presentation_from_diagram(d), target)


def knot_group_pipeline(d: Diagram) -> tuple[GroupPresentation, list[int]]:
    g = associated_group(presentation_from_diagram(d))
    return g, abelianization(g)
