"""Abelianization of finitely presented groups via Smith normal form over Z."""
from __future__ import annotations

from . import words
from .core import GroupPresentation


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form: nonzero ``d_1 | d_2 | ...``, all positive.

    Exact integer elimination; rows and columns of zeros contribute nothing.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best, pivot = abs(a[i][j]), (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the matrix
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remainder into the pivot position
            best, pos = abs(p), (t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best:
                    best, pos = abs(a[i][t]), (i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best:
                    best, pos = abs(a[t][j]), (t, j)
            i, j = pos
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def relation_matrix(g: GroupPresentation) -> list[list[int]]:
    return [words.exponent_sums(r, len(g.generators)) for r in g.relators]


def abelianization(g: GroupPresentation) -> list[int]:
    """Invariant factors of ``G/[G,G]``: torsion ``d_i > 1`` then a 0 per free factor.

    ``[]`` is the trivial group, ``[0]`` is Z, ``[2]`` is Z/2.
    """
    diag = smith_diagonal(relation_matrix(g))
    torsion = [d for d in diag if d > 1]
    return torsion + [0] * (len(g.generators) - len(diag))
