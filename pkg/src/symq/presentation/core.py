"""Finitely presented racks, quandles and their symmetric versions."""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import ParseError, PresentationError, SizeGuardError
from . import words
from .fsr import FsrElement, augment, evaluate_many, fsr_rho, sort_key
from .words import Word

Relation = tuple[FsrElement, FsrElement]


class Flavor(enum.Enum):
    RACK = "rack"
    QUANDLE = "quandle"
    SYMMETRIC_RACK = "symmetric-rack"
    SYMMETRIC_QUANDLE = "symmetric-quandle"

    @property
    def symmetric(self) -> bool:
        return self in (Flavor.SYMMETRIC_RACK, Flavor.SYMMETRIC_QUANDLE)

    @property
    def idempotent(self) -> bool:
        return self in (Flavor.QUANDLE, Flavor.SYMMETRIC_QUANDLE)

    @property
    def short(self) -> str:
        return {"rack": "r", "quandle": "q", "symmetric-rack": "sr",
                "symmetric-quandle": "sq"}[self.value]

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        for f in cls:
            if text in (f.value, f.short):
                return f
        raise ParseError(f"unknown flavor {text!r}")


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _check_names(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if not names:
        raise PresentationError("a presentation needs at least one generator")
    for name in names:
        if not _NAME.fullmatch(name):
            raise PresentationError(f"invalid generator name {name!r}")
    if len(set(names)) != len(names):
        raise PresentationError(f"duplicate generator names in {list(names)}")
    return names


@dataclass(frozen=True)
class SymQuandlePresentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    flavor: Flavor = Flavor.SYMMETRIC_QUANDLE

    def __post_init__(self):
        object.__setattr__(self, "generators", _check_names(self.generators))
        rels = tuple((FsrElement(*u), FsrElement(*v)) for u, v in self.relations)
        n = len(self.generators)
        for k, (u, v) in enumerate(rels):
            for e in (u, v):
                if not 0 <= e.gen < n or any(words.gen_of(c) >= n for c in e.word):
                    raise PresentationError(f"relation {k} uses a generator index out of range")
                if not words.is_reduced(e.word):
                    raise PresentationError(f"relation {k} has an unreduced word")
                if e.barred and not self.flavor.symmetric:
                    raise PresentationError(f"relation {k} uses a barred letter in a {self.flavor.value} presentation")
        object.__setattr__(self, "relations", rels)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def element(self, text: str) -> FsrElement:
        return parse_element(text, self.generators)

    def format_element(self, e: FsrElement) -> str:
        return format_element(e, self.generators)

    def format_relation(self, rel: Relation) -> str:
        return f"{self.format_element(rel[0])} = {self.format_element(rel[1])}"

    def to_text(self) -> str:
        lines = [f"flavor {self.flavor.value}", "gen " + " ".join(self.generators)]
        lines += ["rel " + self.format_relation(r) for r in self.relations]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "flavor": self.flavor.value,
            "generators": list(self.generators),
            "relations": [[self.format_element(u), self.format_element(v)] for u, v in self.relations],
        })

    def __str__(self) -> str:
        rels = ", ".join(self.format_relation(r) for r in self.relations)
        return f"<{', '.join(self.generators)} | {rels}>_{self.flavor.short}"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", _check_names(self.generators))
        rels = tuple(words.reduce(r) for r in self.relators)
        for r in rels:
            if any(words.gen_of(c) >= len(self.generators) for c in r):
                raise PresentationError("relator uses a generator index out of range")
        object.__setattr__(self, "relators", rels)

    def to_text(self) -> str:
        lines = ["gen " + " ".join(self.generators)]
        lines += ["relator " + words.format_word(r, self.generators, "cas") for r in self.relators]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "generators": list(self.generators),
            "relators": [words.format_word(r, self.generators, "cas") for r in self.relators],
        })

    def __str__(self) -> str:
        rels = ", ".join(words.format_word(r, self.generators, "cas") for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


# --- text formats ------------------------------------------------------------

def format_element(e: FsrElement, names: Sequence[str]) -> str:
    head = ("~" if e.barred else "") + names[e.gen]
    if not e.word:
        return head
    return head + "^" + words.format_word(e.word, names)


_INVERSE_SUFFIXES = ("'-1", "^-1", "'")


def _parse_dot_word(text: str, index: dict[str, int], offset: int) -> Word:
    letters = []
    pos = offset
    for token in text.split("."):
        name, exp = token.strip(), 1
        if name.startswith("~"):
            name, exp = name[1:], -1
        for suffix in _INVERSE_SUFFIXES:
            if name.endswith(suffix):
                name, exp = name[: -len(suffix)], -exp
                break
        if name not in index:
            raise ParseError(f"unknown generator {name!r} in word {text!r}", pos)
        letters.append(words.letter(index[name], exp))
        pos += len(token) + 1
    return words.reduce(letters)


def parse_element(text: str, names: Sequence[str]) -> FsrElement:
    """Parse ``x``, ``~x``, ``x^w`` or ``~x^w`` where ``w`` is like ``x1.x2'-1``."""
    index = {n: i for i, n in enumerate(names)}
    s = text.strip()
    if not s:
        raise ParseError("empty element")
    barred = s.startswith("~")
    body = s[1:] if barred else s
    head, sep, tail = body.partition("^")
    head = head.strip()
    if head not in index:
        raise ParseError(f"unknown generator {head!r} in element {text!r}", 0)
    word: Word = ()
    if sep:
        if not tail.strip():
            raise ParseError(f"missing word after '^' in {text!r}", len(s))
        word = _parse_dot_word(tail, index, len(s) - len(tail))
    return FsrElement(index[head], barred, word)


def _parse_cas_word(text: str, index: dict[str, int]) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    letters = []
    for token in text.split("*"):
        token = token.strip()
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?", token)
        if not m or m.group(1) not in index:
            raise ParseError(f"bad relator factor {token!r}")
        exp = int(m.group(2) or 1)
        g = index[m.group(1)]
        letters += [words.letter(g, 1 if exp > 0 else -1)] * abs(exp)
    return words.reduce(letters)


def load_presentation(text: str) -> SymQuandlePresentation:
    """Read the ``gen``/``rel`` line format or its JSON mirror."""
    s = text.strip()
    if not s:
        raise ParseError("empty presentation")
    if s.startswith("{"):
        try:
            data = json.loads(s)
            names = data["generators"]
            flavor = Flavor.parse(data.get("flavor", "symmetric-quandle"))
            rels = [(parse_element(u, names), parse_element(v, names)) for u, v in data.get("relations", [])]
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"invalid presentation JSON: {exc}") from None
        return SymQuandlePresentation(tuple(names), tuple(rels), flavor)
    names: list[str] | None = None
    flavor = Flavor.SYMMETRIC_QUANDLE
    raw_rels: list[tuple[int, str]] = []
    for lineno, line in enumerate(s.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "gen":
            if names is not None:
                raise ParseError(f"line {lineno}: repeated 'gen' line")
            names = rest.split()
        elif keyword == "rel":
            raw_rels.append((lineno, rest))
        elif keyword == "flavor":
            flavor = Flavor.parse(rest.strip())
        else:
            raise ParseError(f"line {lineno}: unknown keyword {keyword!r}")
    if names is None:
        raise ParseError("missing 'gen' line")
    rels = []
    for lineno, rest in raw_rels:
        lhs, eq, rhs = rest.partition("=")
        if not eq:
            raise ParseError(f"line {lineno}: relation needs '='")
        try:
            rels.append((parse_element(lhs, names), parse_element(rhs, names)))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return SymQuandlePresentation(tuple(names), tuple(rels), flavor)


def load_group(text: str) -> tuple[GroupPresentation, list[int] | None]:
    """Read a group presentation; returns it with the optional ``factors`` line."""
    s = text.strip()
    if s.startswith("{"):
        data = json.loads(s)
        names = data["generators"]
        index = {n: i for i, n in enumerate(names)}
        g = GroupPresentation(tuple(names), tuple(_parse_cas_word(r, index) for r in data["relators"]))
        return g, data.get("invariant_factors")
    names, rels, factors = None, [], None
    for line in s.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "gen":
            names = rest.split()
        elif keyword == "relator":
            rels.append(rest)
        elif keyword == "factors":
            factors = [int(v) for v in rest.split()]
        else:
            raise ParseError(f"unknown keyword {keyword!r}")
    if names is None:
        raise ParseError("missing 'gen' line")
    index = {n: i for i, n in enumerate(names)}
    return GroupPresentation(tuple(names), tuple(_parse_cas_word(r, index) for r in rels)), factors


# --- associated group --------------------------------------------------------

def associated_group(p: SymQuandlePresentation) -> GroupPresentation:
    """Replace ``x^y`` by ``y^-1 x y`` and ``rho(x)`` by ``x^-1``.

    Each relation ``(u, v)`` becomes the relator ``augment(u) augment(v)^-1``.
    """
    relators = [words.mul(augment(u), words.inverse(augment(v))) for u, v in p.relations]
    return GroupPresentation(p.generators, tuple(relators))


# --- homomorphisms into finite symmetric quandles ----------------------------

MAX_HOM_ROWS = 5_000_000


def enumerate_homs(p: SymQuandlePresentation, target) -> np.ndarray:
    """All assignments of generators to target elements satisfying every relation.

    Rows of the returned (h, ngens) array are in lexicographic order.  Partial
    assignments are extended one generator at a time and filtered by each
    relation as soon as all of its generators are assigned.
    """
    k = target.n
    by_last: dict[int, list[Relation]] = {}
    for u, v in p.relations:
        last = max(u.generators() | v.generators())
        by_last.setdefault(last, []).append((u, v))
    rows = np.zeros((1, 0), dtype=np.int64)
    for g in range(p.ngens):
        h = rows.shape[0]
        if h * k > MAX_HOM_ROWS:
            raise SizeGuardError(f"homomorphism search exceeds {MAX_HOM_ROWS} partial assignments")
        rows = np.hstack([np.repeat(rows, k, axis=0), np.tile(np.arange(k), h)[:, None]])
        for u, v in by_last.get(g, ()):
            keep = evaluate_many(u, target, rows) == evaluate_many(v, target, rows)
            rows = rows[keep]
    return rows


def hom_count(p: SymQuandlePresentation, target) -> int:
    return int(enumerate_homs(p, target).shape[0])


# --- Tietze-style rewriting --------------------------------------------------

def _mentions(e: FsrElement, g: int) -> bool:
    return e.gen == g or g in words.generators_in(e.word)


def _substitute_element(e: FsrElement, g: int, value: FsrElement, renumber) -> FsrElement:
    image = {g: augment(value)}
    w = words.substitute(e.word, image)
    if e.gen == g:
        base = value if not e.barred else fsr_rho(value)
        new = FsrElement(base.gen, base.barred, words.mul(base.word, w))
    else:
        new = FsrElement(e.gen, e.barred, w)
    return FsrElement(renumber[new.gen], new.barred,
                      tuple(words.letter(renumber[words.gen_of(c)], c) for c in new.word))


def eliminate_generator(p: SymQuandlePresentation, g: str | int, defining: int) -> SymQuandlePresentation:
    """Remove generator ``g`` using relation ``defining``, which must read ``g = t``.

    Either side of the defining relation may be ``g`` or ``~g`` with an empty
    word; the other side ``t`` must not mention ``g``.  Letter occurrences of
    ``g`` become ``t`` (``rho(t)`` when barred, and when the defining side was
    barred), word occurrences become ``augment(t)``.
    """
    gi = p.index(g) if isinstance(g, str) else g
    if not 0 <= gi < p.ngens:
        raise PresentationError(f"generator index {gi} out of range")
    if not 0 <= defining < len(p.relations):
        raise PresentationError(f"relation index {defining} out of range")
    u, v = p.relations[defining]
    if u.gen == gi and not u.word:
        side, t = u, v
    elif v.gen == gi and not v.word:
        side, t = v, u
    else:
        raise PresentationError(f"relation {defining} is not of the form {p.generators[gi]} = t")
    if _mentions(t, gi):
        raise PresentationError(f"{p.generators[gi]} occurs on both sides of relation {defining}")
    if side.barred:
        t = fsr_rho(t)
    renumber = {old: (old if old < gi else old - 1) for old in range(p.ngens) if old != gi}
    rels = []
    for k, (a, b) in enumerate(p.relations):
        if k == defining:
            continue
        rels.append((_substitute_element(a, gi, t, renumber), _substitute_element(b, gi, t, renumber)))
    names = p.generators[:gi] + p.generators[gi + 1:]
    return SymQuandlePresentation(names, tuple(rels), p.flavor)


def eliminable(p: SymQuandlePresentation) -> list[tuple[str, int]]:
    """Pairs (generator, relation index) accepted by `eliminate_generator`."""
    out = []
    for k, (u, v) in enumerate(p.relations):
        for side, other in ((u, v), (v, u)):
            if not side.word and not _mentions(other, side.gen):
                out.append((p.generators[side.gen], k))
    return out


def _relation_forms(rel: Relation, symmetric: bool) -> Iterable[Relation]:
    u, v = rel
    bars = [(u, v), (fsr_rho(u), fsr_rho(v))] if symmetric else [(u, v)]
    for a, b in bars:
        yield a, b
        # move the right-hand word across: a^w = b^z  <=>  a^(w z^-1) = b
        yield a.act(words.inverse(b.word)), FsrElement(b.gen, b.barred, ())
        yield FsrElement(a.gen, a.barred, ()), b.act(words.inverse(a.word))


def _form_score(rel: Relation):
    a, b = rel
    negatives = sum(1 for c in a.word + b.word if c < 0)
    return (len(b.word), negatives, a.barred + b.barred, a.barred,
            len(a.word), sort_key(a), sort_key(b))


def normalize_relation(rel: Relation, symmetric: bool = True) -> Relation:
    """Pick a preferred equivalent form of a relation.

    Forms related by moving words across the equation, swapping sides and (for
    symmetric flavors) applying rho to both sides are equivalent.  Preference:
    empty word on the right, no inverse letters, fewest bars, bar on the right.
    """
    forms = []
    for a, b in _relation_forms(rel, symmetric):
        forms += [(a, b), (b, a)]
    return min(forms, key=_form_score)


def simplify(p: SymQuandlePresentation) -> SymQuandlePresentation:
    """Normalize every relation and drop trivial or repeated ones."""
    seen, rels = set(), []
    for rel in p.relations:
        a, b = normalize_relation(rel, p.flavor.symmetric)
        if a == b or (a, b) in seen:
            continue
        seen.add((a, b))
        rels.append((a, b))
    return SymQuandlePresentation(p.generators, tuple(rels), p.flavor)


def merge_aliases(p: SymQuandlePresentation) -> SymQuandlePresentation:
    """Eliminate generators that some relation equates with another bare letter.

    A relation ``x = y`` or ``x = ~y`` between distinct generators removes the
    later of the two; repeated until no such relation is left.
    """
    while True:
        for k, (u, v) in enumerate(p.relations):
            if not u.word and not v.word and u.gen != v.gen:
                p = eliminate_generator(p, max(u.gen, v.gen), k)
                break
        else:
            return p
