"""Named symmetric quandles used as coloring targets.

Names::

    R<n>-id        dihedral quandle R_n with the identity involution
    R<n>-g<k>      R_n with its k-th good involution (lexicographic, g0 = identity)
    triv-<k>       trivial quandle of order k, identity involution
    triv-<k>-swap  trivial quandle of order k, rho swaps 2i <-> 2i+1
    D-R<n>         double cover of R_n with the swap involution
    D-triv-<k>     double cover of the trivial quandle of order k
    conj-S3-inv    conjugation quandle of S_3 with inversion
    conj-Z<n>-inv  conjugation quandle of Z_n with inversion
"""
from __future__ import annotations

import re

from .algebra import (
    SymmetricQuandleTable,
    conjugation_quandle,
    cyclic_group,
    dihedral_quandle,
    double_cover,
    enumerate_good_involutions,
    identity_permutation,
    symmetric_group,
    trivial_quandle,
)

_PATTERNS = [
    (re.compile(r"R(\d+)-id"), lambda n: _with_identity(dihedral_quandle(n))),
    (re.compile(r"R(\d+)-g(\d+)"), lambda n, k: _kth_good_involution(dihedral_quandle(n), k)),
    (re.compile(r"triv-(\d+)"), lambda k: _with_identity(trivial_quandle(k))),
    (re.compile(r"triv-(\d+)-swap"), lambda k: _swap_pairs(k)),
    (re.compile(r"D-R(\d+)"), lambda n: double_cover(dihedral_quandle(n))),
    (re.compile(r"D-triv-(\d+)"), lambda k: double_cover(trivial_quandle(k))),
    (re.compile(r"conj-Z(\d+)-inv"), lambda n: conjugation_quandle(cyclic_group(n))),
    (re.compile(r"conj-S3-inv"), lambda: conjugation_quandle(symmetric_group(3))),
]

# Fixed catalogue iterated by `builtin_targets`; ordered by size, then name.
CATALOGUE = (
    "triv-1", "triv-2", "triv-2-swap",
    "R3-id", "triv-3", "triv-3-swap", "conj-Z3-inv",
    "R4-id", "R4-g1", "triv-4", "triv-4-swap", "D-triv-2", "conj-Z4-inv",
    "R5-id", "triv-5", "conj-Z5-inv",
    "D-R3", "conj-S3-inv", "R6-g1", "triv-6-swap", "D-triv-3", "conj-Z6-inv",
    "R7-id",
)


def _with_identity(t):
    return SymmetricQuandleTable(t, identity_permutation(t.n))


def _kth_good_involution(t, k):
    found = enumerate_good_involutions(t, limit=k + 1)
    if k >= len(found):
        raise ValueError(f"only {len(found)} good involutions available")
    return SymmetricQuandleTable(t, found.items[k])


def _swap_pairs(k):
    rho = list(range(k))
    for i in range(0, k - 1, 2):
        rho[i], rho[i + 1] = i + 1, i
    return SymmetricQuandleTable(trivial_quandle(k), rho)


def builtin_target(name: str) -> SymmetricQuandleTable:
    for pattern, build in _PATTERNS:
        m = pattern.fullmatch(name)
        if m:
            args = [int(g) for g in m.groups()]
            if args and args[0] < 1:
                raise ValueError(f"target {name!r} needs a positive size")
            return build(*args)
    raise ValueError(f"unknown built-in target {name!r}")


def builtin_targets(max_order: int | None = None) -> dict[str, SymmetricQuandleTable]:
    out = {}
    for name in CATALOGUE:
        t = builtin_target(name)
        if max_order is None or t.n <= max_order:
            out[name] = t
    return out
