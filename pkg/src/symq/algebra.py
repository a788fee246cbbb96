"""Finite racks, quandles and symmetric quandles given by operation tables.

Elements are the dense indices ``0..n-1``.  A table is stored row-major with
``op[x][y] == x^y``: the row is the element being acted on, the column is the
acting element.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import MalformedTableError, SizeGuardError

DEFAULT_MAX_N = 12


def _as_table(op) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in op)
    except (TypeError, ValueError) as exc:
        raise MalformedTableError(f"table is not a list of integer rows: {exc}") from None
    n = len(rows)
    if n == 0:
        raise MalformedTableError("table is empty")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTableError(f"row {r} has length {len(row)}, expected {n}")
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTableError(f"entry op[{r}][{c}] = {v} is out of range 0..{n - 1}")
    return rows


def _as_permutation(perm, n: int) -> tuple[int, ...]:
    try:
        perm = tuple(int(v) for v in perm)
    except (TypeError, ValueError):
        raise MalformedTableError("involution is not a list of integers") from None
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise MalformedTableError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    return perm


@dataclass(frozen=True)
class RackTable:
    """An n x n operation table; whether it is a rack is decided by `verify_rack`.

    Construction only validates the shape, so failing tables can still be
    represented and diagnosed.
    """

    op: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "op", _as_table(self.op))

    @property
    def n(self) -> int:
        return len(self.op)

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.op, dtype=np.int64).reshape(self.n, self.n)
        a.setflags(write=False)
        return a

    @cached_property
    def inverse_array(self) -> np.ndarray:
        """``inv[x, y]`` is the z with ``z^y == x``; only meaningful for racks."""
        inv = np.zeros((self.n, self.n), dtype=np.int64)
        for y in range(self.n):
            inv[self.array[:, y], y] = np.arange(self.n)
        inv.setflags(write=False)
        return inv

    def __call__(self, x: int, y: int) -> int:
        return self.op[x][y]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.op)


# Quandles carry the same data; the distinction is which verifier they pass.
QuandleTable = RackTable


@dataclass(frozen=True)
class SymmetricQuandleTable:
    quandle: RackTable
    rho: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", _as_permutation(self.rho, self.quandle.n))

    @property
    def n(self) -> int:
        return self.quandle.n

    @cached_property
    def rho_array(self) -> np.ndarray:
        a = np.array(self.rho, dtype=np.int64)
        a.setflags(write=False)
        return a


@dataclass(frozen=True)
class GroupTable:
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mul", _as_table(self.mul))
        object.__setattr__(self, "inverse", _as_permutation(self.inverse, len(self.mul)))
        if not 0 <= self.identity < len(self.mul):
            raise MalformedTableError(f"identity index {self.identity} out of range")

    @property
    def n(self) -> int:
        return len(self.mul)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an axiom check.

    ``axiom`` names the first violated law and ``witness`` holds the elements
    exhibiting it.  ``violations`` is filled only by exhaustive checks.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] = ()
    violations: tuple[tuple[str, tuple[int, ...]], ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"fail {self.axiom} " + " ".join(str(w) for w in self.witness)


OK = Verdict(True)


def _verdict(found: list[tuple[str, tuple[int, ...]]]) -> Verdict:
    if not found:
        return OK
    axiom, witness = found[0]
    return Verdict(False, axiom, witness, tuple(found) if len(found) > 1 else ())


def _rack_violations(t: RackTable, exhaustive: bool) -> list:
    found = []
    n, op = t.n, t.op
    for y in range(n):
        column = {op[x][y] for x in range(n)}
        if len(column) != n:
            found.append(("bijectivity", (y,)))
            if not exhaustive:
                return found
    for x, y, z in itertools.product(range(n), repeat=3):
        if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
            found.append(("self-distributivity", (x, y, z)))
            if not exhaustive:
                return found
    return found


def verify_rack(t: RackTable, exhaustive: bool = False) -> Verdict:
    """Check that right translations are bijective and the table is right self-distributive."""
    return _verdict(_rack_violations(t, exhaustive))


def verify_quandle(t: RackTable, exhaustive: bool = False) -> Verdict:
    found = _rack_violations(t, exhaustive)
    if found and not exhaustive:
        return _verdict(found)
    for x in range(t.n):
        if t.op[x][x] != x:
            found.append(("idempotency", (x,)))
            if not exhaustive:
                break
    return _verdict(found)


def op_inv(t: RackTable, x: int, y: int) -> int:
    """Return the unique z with ``z^y == x``."""
    return int(t.inverse_array[x, y])


def is_kei(t: RackTable) -> bool:
    op = t.op
    return all(op[op[x][y]][y] == x for x in range(t.n) for y in range(t.n))


def verify_good_involution(s: SymmetricQuandleTable, exhaustive: bool = False,
                           require_quandle: bool = True) -> Verdict:
    """Check that ``rho`` is a good involution of the underlying quandle.

    A failing underlying table is reported with its own axiom name; a
    non-involutive ``rho`` is reported as ``involution``.
    """
    t = s.quandle
    base = verify_quandle(t) if require_quandle else verify_rack(t)
    if not base:
        return base
    rho, op, n = s.rho, t.op, t.n
    inv = t.inverse_array
    found = []
    for x in range(n):
        if rho[rho[x]] != x:
            found.append(("involution", (x,)))
            if not exhaustive:
                return _verdict(found)
    for x, y in itertools.product(range(n), repeat=2):
        if rho[op[x][y]] != op[rho[x]][y]:
            found.append(("equivariance", (x, y)))
            if not exhaustive:
                return _verdict(found)
    for x, y in itertools.product(range(n), repeat=2):
        if op[x][rho[y]] != inv[x, y]:
            found.append(("inverse-action", (x, y)))
            if not exhaustive:
                return _verdict(found)
    return _verdict(found)


def verify_group(g: GroupTable) -> Verdict:
    n, mul, e = g.n, g.mul, g.identity
    for x in range(n):
        if mul[e][x] != x or mul[x][e] != x:
            return Verdict(False, "identity", (x,))
        if mul[x][g.inverse[x]] != e or mul[g.inverse[x]][x] != e:
            return Verdict(False, "inverse", (x,))
    for x, y, z in itertools.product(range(n), repeat=3):
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            return Verdict(False, "associativity", (x, y, z))
    return OK


@dataclass(frozen=True)
class Enumeration:
    items: tuple
    truncated: bool = False

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def enumerate_good_involutions(t: RackTable, limit: int | None = None,
                               max_n: int = DEFAULT_MAX_N) -> Enumeration:
    """All good involutions of a quandle, in lexicographic order of the permutation.

    Backtracks over involutions, pruning a partial assignment as soon as one of
    the two defining identities fails on the assigned elements.
    """
    n = t.n
    if n > max_n:
        raise SizeGuardError(f"refusing to enumerate involutions of a table with n={n} > {max_n}")
    op = t.op
    inv = t.inverse_array.tolist()
    # preimages[c] lists (a, b) with op[a][b] == c
    preimages = [[] for _ in range(n)]
    for a, b in itertools.product(range(n), repeat=2):
        preimages[op[a][b]].append((a, b))
    rho = [-1] * n
    out: list[tuple[int, ...]] = []

    def consistent(a: int) -> bool:
        ra = rho[a]
        # x^{rho(a)} must equal x^{a^-1} for every x
        for x in range(n):
            if op[x][ra] != inv[x][a]:
                return False
        for b in range(n):
            c = op[a][b]
            if rho[c] != -1 and rho[c] != op[ra][b]:
                return False
        for a2, b in preimages[a]:
            if rho[a2] != -1 and ra != op[rho[a2]][b]:
                return False
        return True

    def rec(x: int) -> bool:
        while x < n and rho[x] != -1:
            x += 1
        if x == n:
            out.append(tuple(rho))
            # one extra result tells us whether the limit truncated anything
            return limit is not None and len(out) > limit
        for y in range(x, n):
            if rho[y] != -1:
                continue
            rho[x], rho[y] = y, x
            if consistent(x) and (y == x or consistent(y)):
                if rec(x + 1):
                    return True
            rho[x] = rho[y] = -1
        return False

    truncated = rec(0)
    if truncated:
        out.pop()
    return Enumeration(tuple(out), truncated)


def dihedral_quandle(n: int) -> RackTable:
    if n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    return RackTable([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def trivial_quandle(n: int) -> RackTable:
    if n < 1:
        raise ValueError("trivial quandle needs n >= 1")
    return RackTable([[x] * n for x in range(n)])


def conjugation_quandle(g: GroupTable) -> SymmetricQuandleTable:
    """Conjugation quandle ``x^y = y^-1 x y`` paired with group inversion."""
    if not verify_group(g):
        raise MalformedTableError(f"not a group table: {verify_group(g)}")
    mul, inv = g.mul, g.inverse
    op = [[mul[inv[y]][mul[x][y]] for y in range(g.n)] for x in range(g.n)]
    return SymmetricQuandleTable(RackTable(op), g.inverse)


def double_cover(t: RackTable) -> SymmetricQuandleTable:
    """The doubled quandle on ``X`` and a barred copy, with the swap involution.

    Index ``i`` is ``x_i`` and ``n + i`` is its barred copy.  Acting by a
    barred element is acting by the inverse translation.
    """
    n = t.n
    inv = t.inverse_array
    op = [[0] * (2 * n) for _ in range(2 * n)]
    for x, y in itertools.product(range(n), repeat=2):
        op[x][y] = t.op[x][y]
        op[x][n + y] = int(inv[x, y])
        op[n + x][y] = n + t.op[x][y]
        op[n + x][n + y] = n + int(inv[x, y])
    rho = [n + i for i in range(n)] + list(range(n))
    return SymmetricQuandleTable(RackTable(op), rho)


def cyclic_group(n: int) -> GroupTable:
    return GroupTable([[(a + b) % n for b in range(n)] for a in range(n)], 0,
                      [(-a) % n for a in range(n)])


def symmetric_group(k: int) -> GroupTable:
    """S_k on permutations of ``range(k)`` in lexicographic order; ``(pq)(i) = q(p(i))``."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(q[p[i]] for i in range(k))] for q in perms] for p in perms]
    inverse = []
    for p in perms:
        ip = [0] * k
        for i, v in enumerate(p):
            ip[v] = i
        inverse.append(index[tuple(ip)])
    return GroupTable(mul, index[tuple(range(k))], inverse)


def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(n))


# --- I/O -------------------------------------------------------------------

def table_to_json(t: RackTable | SymmetricQuandleTable) -> str:
    if isinstance(t, SymmetricQuandleTable):
        return json.dumps({"n": t.n, "op": [list(r) for r in t.quandle.op], "rho": list(t.rho)})
    return json.dumps({"n": t.n, "op": [list(r) for r in t.op]})


def table_to_text(t: RackTable | SymmetricQuandleTable) -> str:
    if isinstance(t, SymmetricQuandleTable):
        return t.quandle.to_text() + "\nrho " + " ".join(map(str, t.rho))
    return t.to_text()


def load_table(text: str) -> RackTable | SymmetricQuandleTable:
    """Parse a table from JSON (``{"n", "op", "rho"?}``) or from text rows.

    In the text form an optional final line ``rho i0 i1 ...`` gives the
    involution.
    """
    text = text.strip()
    if not text:
        raise MalformedTableError("empty table input")
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or "op" not in data:
            raise MalformedTableError("table JSON needs an 'op' field")
        t = RackTable(data["op"])
        if "n" in data and data["n"] != t.n:
            raise MalformedTableError(f"'n' is {data['n']} but 'op' has {t.n} rows")
        rho = data.get("rho")
    else:
        rows, rho = [], None
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("rho"):
                rho = line[3:].split()
            else:
                rows.append(line.split())
        t = RackTable(rows)
    if rho is None:
        return t
    return SymmetricQuandleTable(t, rho)


def restrict(t: RackTable, elements: Sequence[int]) -> RackTable:
    """Sub-table on ``elements`` (which must be closed under the operation)."""
    pos = {e: i for i, e in enumerate(elements)}
    try:
        return RackTable([[pos[t.op[a][b]] for b in elements] for a in elements])
    except KeyError:
        raise MalformedTableError("elements are not closed under the operation") from None
