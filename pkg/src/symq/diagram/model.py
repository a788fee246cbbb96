"""Diagrams of n-manifold knots as semi-sheets plus double-point strata.

Only the combinatorics that the presentation needs is stored: for each
double-point stratum, its two upper semi-sheets and two lower semi-sheets,
whether the chosen normals agree, and which upper semi-sheet is used for the
B-relation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from ..errors import DiagramError, SchemaError
from ..presentation.core import Flavor, SymQuandlePresentation
from ..presentation.fsr import FsrElement


@dataclass(frozen=True)
class Stratum:
    """One double-point stratum.

    ``over`` is the upper semi-sheet used for the B-relation and ``lower``
    is ordered so that the normal of ``over`` points from ``lower[0]`` to
    ``lower[1]``.
    """

    upper: tuple[int, int]
    upper_coherent: bool
    over: int
    lower: tuple[int, int]
    lower_coherent: bool

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if len(self.upper) != 2 or len(self.lower) != 2:
            raise DiagramError("a stratum needs exactly two upper and two lower semi-sheets")
        if self.over not in self.upper:
            raise DiagramError(f"over semi-sheet {self.over} is not one of the upper semi-sheets {self.upper}")

    @property
    def sheets(self) -> tuple[int, int, int, int]:
        return self.upper + self.lower


@dataclass(frozen=True)
class Diagram:
    m: int
    strata: tuple[Stratum, ...] = ()
    labels: tuple[str, ...] | None = None
    dimension: int = 1

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if self.m < 1:
            raise DiagramError("a diagram needs at least one semi-sheet")
        if self.labels is not None and (len(self.labels) != self.m or len(set(self.labels)) != self.m):
            raise DiagramError(f"expected {self.m} distinct labels, got {self.labels}")
        for k, s in enumerate(self.strata):
            for x in s.sheets:
                if not 0 <= x < self.m:
                    raise DiagramError(f"stratum {k} refers to semi-sheet {x}, out of range 0..{self.m - 1}")

    def names(self) -> tuple[str, ...]:
        """Generator names: labels that are identifiers, else ``x<label>``."""
        if self.labels is None:
            return tuple(f"x{i + 1}" for i in range(self.m))
        return tuple(lab if lab[:1].isalpha() else f"x{lab}" for lab in self.labels)

    def label_index(self, label: str) -> int:
        labels = self.labels or tuple(str(i + 1) for i in range(self.m))
        for i, (lab, name) in enumerate(zip(labels, self.names())):
            if label in (lab, name):
                return i
        raise DiagramError(f"no semi-sheet labelled {label!r}")


def flip_normal(d: Diagram, k: int) -> Diagram:
    """Reverse the normal of semi-sheet ``k``.

    Each occurrence of ``k`` among a stratum's upper (lower) pair toggles the
    corresponding coherence flag, so a pair ``(k, k)`` is left unchanged.  If
    ``k`` is the designated over semi-sheet the lower pair is swapped.
    """
    if not 0 <= k < d.m:
        raise DiagramError(f"semi-sheet {k} out of range 0..{d.m - 1}")
    strata = []
    for s in d.strata:
        upper_coherent = s.upper_coherent ^ (s.upper.count(k) % 2 == 1)
        lower_coherent = s.lower_coherent ^ (s.lower.count(k) % 2 == 1)
        lower = s.lower[::-1] if s.over == k else s.lower
        strata.append(Stratum(s.upper, upper_coherent, s.over, lower, lower_coherent))
    return replace(d, strata=tuple(strata))


def flip_normals(d: Diagram, ks: Iterable[int]) -> Diagram:
    for k in ks:
        d = flip_normal(d, k)
    return d


def switch_over(d: Diagram, index: int) -> Diagram:
    """Designate the other upper semi-sheet of stratum ``index`` as ``over``.

    Its normal agrees with the old one exactly when the upper pair is
    coherent, so the lower pair is swapped when it is incoherent.
    """
    s = d.strata[index]
    i, j = s.upper
    other = j if s.over == i else i
    lower = s.lower if s.upper_coherent else s.lower[::-1]
    strata = list(d.strata)
    strata[index] = Stratum(s.upper, s.upper_coherent, other, lower, s.lower_coherent)
    return replace(d, strata=tuple(strata))


def a_relation(s: Stratum) -> tuple[FsrElement, FsrElement]:
    i, j = s.upper
    return FsrElement(i), FsrElement(j, not s.upper_coherent)


def b_relation(s: Stratum) -> tuple[FsrElement, FsrElement]:
    src, dst = s.lower
    return FsrElement(src, False, (s.over + 1,)), FsrElement(dst, not s.lower_coherent)


def presentation_from_diagram(d: Diagram) -> SymQuandlePresentation:
    """Symmetric quandle presentation: all A-relations, then all B-relations.

    A-relation: ``x_i = x_j`` (or ``rho(x_j)`` if incoherent); B-relation:
    ``x_s^x_over = x_t`` (or ``rho(x_t)`` if incoherent).
    """
    rels = [a_relation(s) for s in d.strata] + [b_relation(s) for s in d.strata]
    return SymQuandlePresentation(d.names(), tuple(rels), Flavor.SYMMETRIC_QUANDLE)


def sheets(d: Diagram) -> list[int]:
    """Map semi-sheet -> sheet index, merging the upper pair of every stratum.

    Sheets are numbered by their smallest semi-sheet.
    """
    parent = list(range(d.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in d.strata:
        a, b = find(s.upper[0]), find(s.upper[1])
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(x) for x in range(d.m)})
    number = {r: n for n, r in enumerate(roots)}
    return [number[find(x)] for x in range(d.m)]


def oriented_presentation_from_diagram(d: Diagram) -> SymQuandlePresentation:
    """Quandle presentation on sheets, for diagrams whose normals follow an orientation."""
    for k, s in enumerate(d.strata):
        if not (s.upper_coherent and s.lower_coherent):
            raise DiagramError(f"stratum {k} has incoherent normals; the diagram is not orientation-consistent")
    sheet = sheets(d)
    names = tuple(f"x{i + 1}" for i in range(max(sheet) + 1))
    rels = tuple(
        (FsrElement(sheet[s.lower[0]], False, (sheet[s.over] + 1,)), FsrElement(sheet[s.lower[1]]))
        for s in d.strata
    )
    return SymQuandlePresentation(names, rels, Flavor.QUANDLE)


# --- JSON ------------------------------------------------------------------

def diagram_to_dict(d: Diagram) -> dict:
    out = {"dimension": d.dimension, "m": d.m}
    if d.labels is not None:
        out["labels"] = list(d.labels)
    out["strata"] = [
        {"upper": list(s.upper), "upper_coherent": s.upper_coherent, "over": s.over,
         "lower": list(s.lower), "lower_coherent": s.lower_coherent}
        for s in d.strata
    ]
    return out


def save_diagram(d: Diagram) -> str:
    return json.dumps(diagram_to_dict(d))


def _field(obj, key, kind, path):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"missing field {key!r}", path)
    value = obj[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SchemaError("expected an integer", f"{path}.{key}")
    if kind is bool and not isinstance(value, bool):
        raise SchemaError("expected a boolean", f"{path}.{key}")
    if kind is list and not isinstance(value, list):
        raise SchemaError("expected a list", f"{path}.{key}")
    return value


def _pair(obj, key, path) -> tuple[int, int]:
    value = _field(obj, key, list, path)
    if len(value) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise SchemaError("expected two integers", f"{path}.{key}")
    return tuple(value)


def diagram_from_dict(data) -> Diagram:
    path = "$"
    m = _field(data, "m", int, path)
    dimension = data.get("dimension", 1) if isinstance(data, dict) else 1
    if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 1:
        raise SchemaError("expected a positive integer", f"{path}.dimension")
    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)):
        raise SchemaError("expected a list of strings", f"{path}.labels")
    strata = []
    for k, raw in enumerate(_field(data, "strata", list, path)):
        spath = f"{path}.strata[{k}]"
        try:
            strata.append(Stratum(
                upper=_pair(raw, "upper", spath),
                upper_coherent=_field(raw, "upper_coherent", bool, spath),
                over=_field(raw, "over", int, spath),
                lower=_pair(raw, "lower", spath),
                lower_coherent=_field(raw, "lower_coherent", bool, spath),
            ))
        except DiagramError as exc:
            raise SchemaError(str(exc), spath) from None
    try:
        return Diagram(m, tuple(strata), tuple(labels) if labels is not None else None, dimension)
    except DiagramError as exc:
        raise SchemaError(str(exc), path) from None


def load_diagram(text: str) -> Diagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return diagram_from_dict(data)


def relabel(d: Diagram, labels: Sequence[str]) -> Diagram:
    return replace(d, labels=tuple(labels))


def renumber(d: Diagram, mapping: Sequence[int], order: Sequence[int] | None = None) -> Diagram:
    """Move semi-sheet ``k`` to index ``mapping[k]`` and list strata in ``order``."""
    if sorted(mapping) != list(range(d.m)):
        raise DiagramError("mapping must be a permutation of the semi-sheets")
    order = range(len(d.strata)) if order is None else order
    if sorted(order) != list(range(len(d.strata))):
        raise DiagramError("order must be a permutation of the strata")
    strata = []
    for idx in order:
        s = d.strata[idx]
        strata.append(Stratum(
            (mapping[s.upper[0]], mapping[s.upper[1]]), s.upper_coherent, mapping[s.over],
            (mapping[s.lower[0]], mapping[s.lower[1]]), s.lower_coherent,
        ))
    labels = None
    if d.labels is not None:
        moved = [""] * d.m
        for k, lab in enumerate(d.labels):
            moved[mapping[k]] = lab
        labels = tuple(moved)
    return Diagram(d.m, tuple(strata), labels, d.dimension)
