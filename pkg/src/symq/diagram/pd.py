"""Planar diagram (PD) codes of classical knots and links.

``X[i,j,k,l]`` lists the four edges at a crossing counterclockwise, starting
with the incoming under-strand, so ``i -> k`` is the under-strand and the
over-strand is ``j -> l`` or ``l -> j``.  ``Loop[a]`` is a crossingless
component.  Every edge is a semi-arc (cut at over- and under-passages), so
edges become semi-sheets directly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DiagramError, ParseError
from .model import Diagram, Stratum, flip_normals

_TERM = re.compile(r"(X|Loop)\s*\[([^\]]*)\]")
_LABEL = re.compile(r"[A-Za-z0-9_]+")

HEAD, TAIL = 1, 0


@dataclass(frozen=True)
class PdCode:
    """Validated PD code with dense edge indices.

    ``crossings`` hold edge indices; ``heads[c][p]`` says whether the edge at
    position ``p`` of crossing ``c`` ends there.  ``loops`` are edge indices
    of crossingless components.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    heads: tuple[tuple[bool, bool, bool, bool], ...]
    labels: tuple[str, ...]
    loops: tuple[int, ...] = ()

    @property
    def edges(self) -> int:
        return len(self.labels)

    def sign(self, c: int) -> int:
        """+1 if the over-strand runs from position 3 to 1, else -1."""
        return 1 if self.heads[c][3] else -1

    def components(self) -> int:
        """Number of circles in the underlying closed curve."""
        at = {}
        for c, xs in enumerate(self.crossings):
            for p, e in enumerate(xs):
                if self.heads[c][p]:
                    at[e] = (c, p)
        seen = set()
        count = len(self.loops)
        for start in at:
            if start in seen:
                continue
            count += 1
            e = start
            while e not in seen:
                seen.add(e)
                c, p = at[e]
                e = self.crossings[c][(p + 2) % 4]
        return count

    def __str__(self) -> str:
        terms = [f"X[{','.join(self.labels[e] for e in xs)}]" for xs in self.crossings]
        terms += [f"Loop[{self.labels[e]}]" for e in self.loops]
        return " ".join(terms)


def _sort_labels(labels: list[str]) -> list[str]:
    if all(x.isdigit() for x in labels):
        return sorted(labels, key=int)
    return labels


def parse_pd(text: str) -> PdCode:
    raw: list[tuple[str, ...]] = []
    loops: list[str] = []
    pos = 0
    for match in _TERM.finditer(text):
        gap = text[pos:match.start()]
        if gap.strip(" \t\r\n,"):
            raise ParseError("expected X[a,b,c,d] or Loop[a]", pos + len(gap) - len(gap.lstrip(" \t\r\n,")))
        parts = [x.strip() for x in match.group(2).split(",")]
        for x in parts:
            if not _LABEL.fullmatch(x):
                raise ParseError(f"bad edge label {x!r}", match.start(2))
        if match.group(1) == "X":
            if len(parts) != 4:
                raise ParseError("a crossing needs exactly four labels", match.start())
            raw.append(tuple(parts))
        else:
            if len(parts) != 1:
                raise ParseError("Loop takes exactly one label", match.start())
            loops.append(parts[0])
        pos = match.end()
    tail = text[pos:]
    if tail.strip(" \t\r\n,"):
        raise ParseError("expected X[a,b,c,d] or Loop[a]", pos + len(tail) - len(tail.lstrip(" \t\r\n,")))
    if not raw and not loops:
        raise ParseError("empty PD code", 0)

    counts: dict[str, int] = {}
    for xs in raw:
        for x in xs:
            counts[x] = counts.get(x, 0) + 1
    for x, n in counts.items():
        if n != 2:
            raise DiagramError(f"edge {x} occurs {n} times; every edge must occur exactly twice")
    for x in loops:
        if x in counts or loops.count(x) > 1:
            raise DiagramError(f"loop label {x} is used more than once")

    labels = _sort_labels(list(counts)) + loops
    index = {x: i for i, x in enumerate(labels)}
    crossings = tuple(tuple(index[x] for x in xs) for xs in raw)
    heads = _orient(crossings)
    _check_planar(crossings)
    return PdCode(crossings, heads, tuple(labels), tuple(index[x] for x in loops))


def _orient(crossings) -> tuple[tuple[bool, ...], ...]:
    """Decide which end of each edge is its head.

    Position 0 is a head and position 2 a tail; positions 1 and 3 hold one of
    each; the two ends of an edge are one of each.  Components with no under
    passage get their first occurrence as a tail.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, xs in enumerate(crossings):
        for p, e in enumerate(xs):
            occ.setdefault(e, []).append((c, p))
    value: dict[tuple[int, int], int] = {}

    def neighbours(node):
        c, p = node
        e = crossings[c][p]
        a, b = occ[e]
        yield b if a == node else a
        if p in (1, 3):
            yield (c, 4 - p)

    def assign(node, v):
        stack = [(node, v)]
        while stack:
            n, v = stack.pop()
            if n in value:
                if value[n] != v:
                    c, p = n
                    raise DiagramError(f"inconsistent orientation at crossing {c + 1}, position {p + 1}")
                continue
            value[n] = v
            for m in neighbours(n):
                stack.append((m, 1 - v))

    for c in range(len(crossings)):
        assign((c, 0), HEAD)
        assign((c, 2), TAIL)
    for c in range(len(crossings)):
        for p in (1, 3):
            if (c, p) not in value:
                assign((c, p), TAIL)
    return tuple(tuple(value[(c, p)] == HEAD for p in range(4)) for c in range(len(crossings)))


def _check_planar(crossings) -> None:
    """Each connected piece must satisfy V - E + F = 2 on the sphere."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, xs in enumerate(crossings):
        for p, e in enumerate(xs):
            occ.setdefault(e, []).append((c, p))

    def other(node):
        a, b = occ[crossings[node[0]][node[1]]]
        return b if a == node else a

    # connected pieces of the crossing graph
    parent = list(range(len(crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (c1, _), (c2, _) in occ.values():
        parent[find(c1)] = find(c2)

    faces: dict[int, int] = {}
    seen = set()
    for c in range(len(crossings)):
        for p in range(4):
            if (c, p) in seen:
                continue
            root = find(c)
            faces[root] = faces.get(root, 0) + 1
            node = (c, p)
            while node not in seen:
                seen.add(node)
                oc, op = other(node)
                node = (oc, (op + 1) % 4)
    for root, f in faces.items():
        v = sum(1 for c in range(len(crossings)) if find(c) == root)
        e = sum(1 for (c, _), _ in occ.values() if find(c) == root)
        if v - e + f != 2:
            raise DiagramError("PD code does not describe a planar diagram")


def pd_to_diagram(pd: PdCode, flips=()) -> Diagram:
    """One semi-sheet per edge and one stratum per crossing.

    Normals are the tangents turned a quarter counterclockwise, so every flag
    is coherent; the incoming over-edge is the designated ``over``.  ``flips``
    lists semi-sheet indices whose normals are then reversed.
    """
    strata = []
    for c, xs in enumerate(pd.crossings):
        under_in, over_a, under_out, over_b = xs
        if pd.sign(c) > 0:
            over_in, over_out = over_b, over_a
            lower = (under_in, under_out)
        else:
            over_in, over_out = over_a, over_b
            lower = (under_out, under_in)
        strata.append(Stratum((over_in, over_out), True, over_in, lower, True))
    d = Diagram(pd.edges, tuple(strata), pd.labels, 1)
    return flip_normals(d, flips)


def diagram_from_pd_text(text: str, flips=()) -> Diagram:
    return pd_to_diagram(parse_pd(text), flips)
