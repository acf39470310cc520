"""Exact geometry of the base polytope: vertices, dimension, splitting hyperplanes."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from . import _exact
from .base_graph import BaseGraph
from .errors import CoverViolation, DegeneratePartition
from .matroid import Matroid, Subset, connected_components, to_mask, to_tuple


def incidence_vector(base: Subset, n: int) -> np.ndarray:
    b = to_mask(base)
    return np.array([(b >> i) & 1 for i in range(n)], dtype=np.int64)


def vertices(M: Matroid) -> np.ndarray:
    """One 0/1 row per base, in canonical base order."""
    return np.array([[(b >> i) & 1 for i in range(M.n)] for b in M.masks], dtype=np.int64).reshape(
        len(M), M.n
    )


def family_affine_dimension(n: int, family: Iterable[int]) -> int:
    pts = [[(b >> i) & 1 for i in range(n)] for b in family]
    return _exact.affine_rank(pts)


def dimension(M: Matroid) -> int:
    """Affine dimension of the base polytope by exact elimination.

    Cross-checked against ``n - #components``; a mismatch is a bug and raises.
    """
    d = family_affine_dimension(M.n, M.masks)
    expected = M.n - len(connected_components(M))
    if d != expected:
        raise AssertionError(f"affine rank {d} disagrees with n - components = {expected}")
    return d


@dataclass(frozen=True)
class SplitHyperplane:
    """``sum(coefficients[i] * x[i+1]) = level``; the first part lies on the ``<=`` side."""

    coefficients: tuple[int, ...]
    level: int

    def value(self, base: Subset) -> int:
        b = to_mask(base)
        return sum(c for i, c in enumerate(self.coefficients) if (b >> i) & 1)

    def negated(self) -> "SplitHyperplane":
        return SplitHyperplane(tuple(-c for c in self.coefficients), -self.level)

    def extended(self, extra: int) -> "SplitHyperplane":
        """Same equation in ``extra`` more coordinates, with zero coefficients there."""
        return SplitHyperplane(self.coefficients + (0,) * extra, self.level)

    def describe(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients, 1):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {mag}x{i}")
        lhs = " ".join(terms).lstrip("+ ") or "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} = {self.level}"


def theorem1_hyperplane(E1: Subset, r1: int, a1: int, n: int) -> SplitHyperplane:
    """Indicator of ``E1`` at level ``r1 - a1``."""
    e1 = to_mask(E1)
    full = (1 << n) - 1
    if e1 == 0 or e1 & ~full or e1 == full:
        raise DegeneratePartition("E1 must be a nonempty proper subset of the ground set")
    if not 0 < a1 < r1:
        raise DegeneratePartition(f"need 0 < a1 < r1, got a1={a1}, r1={r1}")
    return SplitHyperplane(tuple((e1 >> i) & 1 for i in range(n)), r1 - a1)


@dataclass
class FacetCheck:
    """Outcome of :func:`facet_check` with the evidence behind each condition."""

    sides_ok: bool
    not_supporting: bool
    edges_ok: bool
    facet_dimension_ok: bool
    wrong_side: list[tuple[int, ...]] = field(default_factory=list)
    crossing_edge: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    intersection_dimension: int = -1
    polytope_dimension: int = -1

    @property
    def ok(self) -> bool:
        return self.sides_ok and self.not_supporting and self.edges_ok and self.facet_dimension_ok

    def __bool__(self) -> bool:
        return self.ok


def crossing_edges(G: BaseGraph, part1: set[int], part2: set[int]):
    """Base-graph edges with one end only in ``part1`` and the other only in ``part2``."""
    only1 = part1 - part2
    only2 = part2 - part1
    for i, j in G.edges():
        a, b = G.vertices[i], G.vertices[j]
        if (a in only1 and b in only2) or (a in only2 and b in only1):
            yield a, b


def facet_check(
    M: Matroid,
    part1: Iterable[Subset],
    part2: Iterable[Subset],
    H: SplitHyperplane,
    G: BaseGraph | None = None,
) -> FacetCheck:
    """Does ``H`` cut the base polytope into the hulls of ``part1`` and ``part2`` along a facet?

    Combinatorial test: sides and equality set, non-supporting, no base-graph
    edge crossing between the strict sides, and the common vertices spanning a
    face of codimension one.
    """
    p1 = {to_mask(b) for b in part1}
    p2 = {to_mask(b) for b in part2}
    if p1 | p2 != set(M.masks):
        raise CoverViolation("the two parts do not cover the base family")
    W = p1 & p2
    wrong = [b for b in p1 if H.value(b) > H.level] + [b for b in p2 if H.value(b) < H.level]
    equality = {b for b in M.masks if H.value(b) == H.level}
    sides_ok = not wrong and equality == W
    values = [H.value(b) for b in M.masks]
    not_supporting = min(values) < H.level < max(values)
    G = G or BaseGraph(M)
    crossing = next(crossing_edges(G, p1, p2), None)
    d = dimension(M)
    dw = family_affine_dimension(M.n, sorted(W))
    return FacetCheck(
        sides_ok=sides_ok,
        not_supporting=not_supporting,
        edges_ok=crossing is None,
        facet_dimension_ok=dw == d - 1,
        wrong_side=sorted((to_tuple(b) for b in wrong)),
        crossing_edge=None if crossing is None else (to_tuple(crossing[0]), to_tuple(crossing[1])),
        intersection_dimension=dw,
        polytope_dimension=d,
    )


def separating_hyperplane(
    n: int,
    family: Sequence[int],
    part1: set[int],
    part2: set[int],
) -> SplitHyperplane | None:
    """Exact search for ``H`` with ``part1`` on ``<=``, ``part2`` on ``>=`` and equality exactly on the overlap.

    Tries, in order: indicator hyperplanes of subsets whose intersection size is
    constant on the overlap; the normal of the overlap's affine hull when that
    hull has codimension one; an exact rational LP.
    """
    W = part1 & part2
    if not W:
        return None
    only1 = part1 - part2
    only2 = part2 - part1

    def separates(H: SplitHyperplane) -> bool:
        return (
            all(H.value(b) == H.level for b in W)
            and all(H.value(b) < H.level for b in only1)
            and all(H.value(b) > H.level for b in only2)
        )

    for H in _indicator_candidates(n, W):
        for cand in (H, H.negated()):
            if separates(cand):
                return cand
    H = _hull_normal(n, family, W)
    if H is not None:
        for cand in (H, H.negated()):
            if separates(cand):
                return cand
    H = _lp_separator(n, W, only1, only2)
    # solver output is re-checked exactly before it is trusted
    return H if H is not None and separates(H) else None


def _indicator_candidates(n: int, W: set[int]):
    # exhaustive over supports only at desk scale
    if n > 14:
        return
    w0 = min(W)
    for s in range(1, 1 << n):
        c = bin(w0 & s).count("1")
        if all(bin(b & s).count("1") == c for b in W):
            yield SplitHyperplane(tuple((s >> i) & 1 for i in range(n)), c)


def _hull_normal(n: int, family: Sequence[int], W: set[int]) -> SplitHyperplane | None:
    pts = [[(b >> i) & 1 for i in range(n)] for b in sorted(W)]
    w0 = pts[0]
    diffs = [[a - c for a, c in zip(p, w0)] for p in pts[1:]]
    full = [[(b >> i) & 1 for i in range(n)] for b in family]
    f0 = full[0]
    full_diffs = [[a - c for a, c in zip(p, f0)] for p in full[1:]]
    span = _exact.echelon_basis(full_diffs)
    d = len(span)
    if _exact.rank(diffs) != d - 1:
        return None
    for normal in _exact.nullspace(_exact.echelon_basis(diffs), n):
        if any(sum(a * b for a, b in zip(normal, row)) for row in span):
            level = sum(a * b for a, b in zip(normal, w0))
            return SplitHyperplane(tuple(normal), level)
    return None


def _lp_separator(n: int, W: set[int], only1: set[int], only2: set[int]) -> SplitHyperplane | None:
    from sympy import Eq, Rational, symbols
    from sympy.solvers.simplex import InfeasibleLPError, lpmin

    a = symbols(f"a0:{n}")
    c = symbols("c")

    def lhs(b):
        return sum((a[i] for i in range(n) if (b >> i) & 1), Rational(0))

    cons = [Eq(lhs(b) - c, 0) for b in W]
    cons += [lhs(b) - c <= -1 for b in only1] + [lhs(b) - c >= 1 for b in only2]
    try:
        _, sol = lpmin(Rational(0), cons)
    except InfeasibleLPError:
        return None
    vals = [Rational(sol.get(v, 0)) for v in (*a, c)]
    den = lcm(*(int(v.q) for v in vals))
    ints = [int(v * den) for v in vals]
    return SplitHyperplane(tuple(ints[:n]), ints[n])
