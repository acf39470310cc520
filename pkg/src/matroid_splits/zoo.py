"""Constructors for the matroid families used throughout the package."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ._exact import gf2_rank
from .errors import MatroidError, RankOutOfRange, SpecInvalid, UnknownName
from .matroid import (
    Matroid,
    check_guard,
    from_bases,
    fundamental_circuit,
    relax,
    subsets_of_size,
    to_mask,
    to_tuple,
)


@dataclass(frozen=True)
class GraphSpec:
    """Multigraph on vertices ``1..vertex_count``; edge ``i`` is element ``i + 1``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_count < 1 or not self.edges:
            raise SpecInvalid("graph needs at least one vertex and one edge")
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise SpecInvalid(f"edge ({u}, {v}) has an endpoint outside 1..{self.vertex_count}")


@dataclass(frozen=True)
class LatticePathSpec:
    """Two monotone lattice paths from ``(0, 0)`` to ``(m, r)`` with ``lower`` never above ``upper``.

    Paths are strings over ``{"E", "N"}``. Step ``k`` of a path is element ``k``.
    """

    m: int
    r: int
    lower: str
    upper: str

    def __post_init__(self):
        for name, path in (("lower", self.lower), ("upper", self.upper)):
            if set(path) - {"E", "N"}:
                raise SpecInvalid(f"{name} path {path!r} uses steps other than E/N")
            if path.count("E") != self.m or path.count("N") != self.r:
                raise SpecInvalid(
                    f"{name} path {path!r} must have {self.m} East and {self.r} North steps"
                )
        lo = hi = 0
        for a, b in zip(self.lower, self.upper):
            lo += a == "N"
            hi += b == "N"
            if lo > hi:
                raise SpecInvalid("lower path goes above the upper path")

    @property
    def north_lower(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.lower, 1) if s == "N")

    @property
    def north_upper(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.upper, 1) if s == "N")

    @property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        """``N_i = [first, last]``: the positions the i-th North step may occupy."""
        return tuple(zip(self.north_upper, self.north_lower))

    @property
    def size(self) -> int:
        return self.m + self.r


def uniform(n: int, r: int) -> Matroid:
    if not 0 <= r <= n:
        raise RankOutOfRange(f"rank {r} outside 0..{n}")
    check_guard(n)
    return Matroid(n, r, tuple(sorted(subsets_of_size((1 << n) - 1, r), key=to_tuple)))


def _forest_rank(vertex_count: int, edges: Sequence[tuple[int, int]]) -> int:
    parent = list(range(vertex_count + 1))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    rk = 0
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            rk += 1
    return rk


def graphic(g: GraphSpec) -> Matroid:
    """Cycle matroid: bases are the maximal spanning forests."""
    m = len(g.edges)
    check_guard(m, "edge set")
    r = _forest_rank(g.vertex_count, g.edges)
    bases = [
        idx
        for idx in combinations(range(m), r)
        if _forest_rank(g.vertex_count, [g.edges[i] for i in idx]) == r
    ]
    return from_bases(m, [[i + 1 for i in b] for b in bases])


def _gf2_columns(rows: Sequence) -> tuple[list[int], int, int]:
    parsed = []
    for row in rows:
        bits = [int(ch) for ch in row] if isinstance(row, str) else [int(b) for b in row]
        if set(bits) - {0, 1}:
            raise SpecInvalid(f"row {row!r} has entries outside {{0, 1}}")
        parsed.append(bits)
    if not parsed or not parsed[0] or len({len(r) for r in parsed}) != 1:
        raise SpecInvalid("GF(2) matrix must be non-empty and rectangular")
    nrows, ncols = len(parsed), len(parsed[0])
    cols = [sum(parsed[i][j] << i for i in range(nrows)) for j in range(ncols)]
    return cols, nrows, ncols


def from_gf2_matrix(rows: Sequence) -> Matroid:
    """Column matroid of a binary matrix (rows as bit strings or 0/1 sequences)."""
    cols, nrows, n = _gf2_columns(rows)
    check_guard(n)
    rk = gf2_rank(cols, nrows)
    bases = [
        s
        for s in subsets_of_size((1 << n) - 1, rk)
        if gf2_rank([cols[e - 1] for e in to_tuple(s)], nrows) == rk
    ]
    return Matroid(n, rk, tuple(sorted(bases, key=to_tuple)))


def binary_representation(M: Matroid) -> tuple[str, ...] | None:
    """Rows of ``[I | D]`` built from fundamental circuits, or ``None`` if ``M`` is not binary.

    Over GF(2) the standard representation relative to a base is forced, so
    checking this one candidate decides binarity.
    """
    base = M.masks[0]
    rows_of = {e: k for k, e in enumerate(to_tuple(base))}
    cols = []
    for e in range(1, M.n + 1):
        bit = 1 << (e - 1)
        if bit & base:
            cols.append(1 << rows_of[e])
        else:
            circ = fundamental_circuit(M, base, bit) & base
            cols.append(sum(1 << rows_of[x] for x in to_tuple(circ)))
    height = max(M.r, 1)
    rows = tuple("".join(str((c >> k) & 1) for c in cols) for k in range(height))
    return rows if from_gf2_matrix(rows) == M else None


def max_matching(X: Sequence[int], parts: Sequence[frozenset[int]]) -> dict[int, int]:
    """Augmenting-path matching of elements ``X`` into ``parts``; returns element -> part index."""
    owner: dict[int, int] = {}  # part index -> element
    adj = {x: [j for j, p in enumerate(parts) if x in p] for x in X}

    def augment(x, seen):
        for j in adj[x]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = x
                return True
        return False

    for x in X:
        augment(x, set())
    return {x: j for j, x in owner.items()}


def is_partial_transversal(X: Sequence[int], parts: Sequence[frozenset[int]]) -> bool:
    return len(max_matching(X, parts)) == len(X)


def transversal(parts: Sequence[Sequence[int]], n: int) -> Matroid:
    """Transversal matroid of the set system ``parts`` on ``{1..n}``."""
    check_guard(n)
    system = [frozenset(p) for p in parts]
    for p in system:
        if any(not 1 <= e <= n for e in p):
            raise SpecInvalid(f"part {sorted(p)} is not inside 1..{n}")
    rk = len(max_matching(range(1, n + 1), system))
    bases = [
        s
        for s in subsets_of_size((1 << n) - 1, rk)
        if is_partial_transversal(to_tuple(s), system)
    ]
    return from_bases(n, bases)


def path_of(B: Sequence[int], size: int) -> str:
    """Lattice path with a North step exactly at the positions in ``B``."""
    chosen = set(B)
    return "".join("N" if k in chosen else "E" for k in range(1, size + 1))


def _between(path: str, spec: LatticePathSpec) -> bool:
    lo = hi = mid = 0
    for a, b, c in zip(spec.lower, spec.upper, path):
        lo += a == "N"
        hi += b == "N"
        mid += c == "N"
        if not lo <= mid <= hi:
            return False
    return True


def lattice_path(spec: LatticePathSpec) -> Matroid:
    """Bases are the r-sets whose path stays between the two bounding paths.

    The same family is built a second time as the transversal matroid of the
    intervals and the two must agree.
    """
    n = spec.size
    check_guard(n)
    geometric = [
        s for s in subsets_of_size((1 << n) - 1, spec.r) if _between(path_of(to_tuple(s), n), spec)
    ]
    M = from_bases(n, geometric)
    via_intervals = transversal([range(a, b + 1) for a, b in spec.intervals], n)
    if via_intervals != M:
        raise MatroidError("lattice-path region and interval presentation disagree")
    return M


# -- named examples ---------------------------------------------------------

M_STAR_GRAPH = GraphSpec(3, ((1, 2), (2, 3), (1, 3), (1, 2)))
# K_4 on a,b,c,d = 1..4: 1=ab, 2=bc, 3=cd, 4=da, 5=ac, 6=bd
K4_GRAPH = GraphSpec(4, ((1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4)))
FANO_MATRIX = ("1000111", "0101011", "0011101")
ZIGZAG_SPEC = LatticePathSpec(3, 4, lower="EEENNNN", upper="NENENEN")


def _triples_except(n: int, missing) -> set[int]:
    gone = {to_mask(t) for t in missing}
    return {s for s in subsets_of_size((1 << n) - 1, 3) if s not in gone}


_CHECKS = {
    "m_star": {to_mask(b) for b in ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4))},
    "m_k4": _triples_except(6, [(1, 2, 5), (2, 3, 6), (3, 4, 5), (1, 4, 6)]),
    "w3": _triples_except(6, [(1, 2, 5), (1, 4, 6), (2, 3, 6)]),
    "fano": _triples_except(
        7, [(1, 5, 3), (1, 2, 6), (1, 4, 7), (2, 3, 4), (2, 5, 7), (3, 6, 7), (4, 5, 6)]
    ),
}
_COUNTS = {"m_star": 5, "m_k4": 16, "w3": 17, "fano": 28}

CATALOG_NAMES = ("m_star", "m_k4", "w3", "fano", "u_n_r")
_UNIFORM_NAME = re.compile(r"^u_?(\d+)_(\d+)$|^u_n_r\((\d+),\s*(\d+)\)$|^u\((\d+),\s*(\d+)\)$")


def catalog(name: str) -> Matroid:
    """Named examples: ``m_star``, ``m_k4``, ``w3``, ``fano`` and ``u_<n>_<r>``."""
    key = name.strip().lower()
    match = _UNIFORM_NAME.match(key)
    if match:
        n, r = (int(g) for g in match.groups() if g is not None)
        return uniform(n, r)
    if key == "m_star":
        M = graphic(M_STAR_GRAPH)
    elif key == "m_k4":
        M = graphic(K4_GRAPH)
    elif key == "w3":
        M = relax(graphic(K4_GRAPH), (3, 4, 5))
    elif key == "fano":
        M = from_gf2_matrix(FANO_MATRIX)
    else:
        raise UnknownName(f"no catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")
    if set(M.masks) != _CHECKS[key] or len(M) != _COUNTS[key]:
        raise MatroidError(f"catalog entry {key} drifted from its reference base list")
    return M
