"""Exact integer/rational linear algebra on small dense matrices.

Rows are sequences of ints (or Fractions). Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        row = [x // g for x in row]
    return row


def echelon_basis(rows: Iterable[Sequence[int]]) -> list[list[int]]:
    """Integer row-echelon basis of the span of ``rows`` (fraction-free)."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, row)
    for raw in rows:
        v = [int(x) for x in raw]
        for piv, b in basis:
            if v[piv]:
                c, d = b[piv], v[piv]
                v = [c * x - d * y for x, y in zip(v, b)]
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is None:
            continue
        v = _primitive(v)
        # keep earlier rows reduced against the new pivot so pivots stay unique
        basis.append((nz, v))
    return [b for _, b in basis]


def rank(rows: Iterable[Sequence[int]]) -> int:
    return len(echelon_basis(rows))


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of ``points`` (``-1`` for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([a - b for a, b in zip(p, p0)] for p in points[1:])


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Integer basis of ``{x : row . x = 0 for every row}``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        den = lcm(*(x.denominator for x in vec))
        out.append(_primitive([int(x * den) for x in vec]))
    return out


def gf2_rank(columns: Sequence[int], nrows: int) -> int:
    """Rank over GF(2) of the matrix whose columns are bitmasks of height ``nrows``."""
    work = list(columns)
    rk = 0
    for bit in range(nrows):
        piv = next((i for i in range(rk, len(work)) if (work[i] >> bit) & 1), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        for i in range(len(work)):
            if i != rk and (work[i] >> bit) & 1:
                work[i] ^= work[rk]
        rk += 1
    return rk
