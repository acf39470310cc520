"""The base graph of a matroid: bases as vertices, single exchanges as edges."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import DeskScaleError, NotDistanceTwo, UnrecognizedShape, VertexNotFound
from .matroid import Matroid, Subset, elements_of, max_ground_size, to_mask, to_tuple

MAX_VERTICES = 200_000

SQUARE = "square"
PYRAMID = "pyramid"
OCTAHEDRON = "octahedron"


@dataclass(frozen=True)
class NeighborhoodClass:
    kind: str
    witness: tuple[tuple[int, ...], ...]  # the common neighbours, as sorted bases


class BaseGraph:
    """Immutable adjacency structure over ``M.masks`` (vertex ``i`` is ``M.masks[i]``)."""

    def __init__(self, M: Matroid):
        if len(M) > MAX_VERTICES or M.n > max_ground_size():
            raise DeskScaleError(f"base graph of {M!r} exceeds the desk-scale limit")
        self.matroid = M
        self.vertices = M.masks
        self.index = {b: i for i, b in enumerate(M.masks)}
        adj: list[tuple[int, ...]] = []
        outside_all = M.ground
        for b in M.masks:
            nbrs = []
            for e in elements_of(b):
                stripped = b ^ e
                for f in elements_of(outside_all & ~b):
                    j = self.index.get(stripped | f)
                    if j is not None:
                        nbrs.append(j)
            adj.append(tuple(sorted(nbrs)))
        self.adjacency = tuple(adj)
        self._adjsets = tuple(frozenset(a) for a in adj)
        if len(self.vertices) > 1 and len(self.layers(0)) != len(self.vertices):
            raise AssertionError("base graph is disconnected")

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs ``(i, j)`` with ``i < j``, in lexicographic order."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield i, j

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adjsets[i]

    def vertex(self, X: Subset) -> int:
        try:
            return self.index[to_mask(X)]
        except KeyError:
            raise VertexNotFound(f"{to_tuple(to_mask(X))} is not a base") from None

    def layers(self, source: int) -> dict[int, int]:
        """Breadth-first distances from vertex index ``source``."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            i = queue.popleft()
            for j in self.adjacency[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return dist

    def common_neighbors(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(sorted(self._adjsets[i] & self._adjsets[j]))

    def distance_two_pairs(self) -> Iterator[tuple[int, int]]:
        """All ``(i, j)``, ``i < j``, at graph distance exactly two."""
        for i, nbrs in enumerate(self.adjacency):
            seen = set()
            for k in nbrs:
                for j in self.adjacency[k]:
                    if j > i and j not in seen and not self.adjacent(i, j):
                        seen.add(j)
                        yield i, j


def build(M: Matroid) -> BaseGraph:
    return BaseGraph(M)


def distance(G: BaseGraph, X: Subset, Y: Subset) -> int:
    i, j = G.vertex(X), G.vertex(Y)
    return G.layers(i)[j]


def _distance_two(G: BaseGraph, X: Subset, Y: Subset) -> tuple[int, int, tuple[int, ...]]:
    i, j = G.vertex(X), G.vertex(Y)
    common = G.common_neighbors(i, j)
    if i == j or G.adjacent(i, j) or not common:
        raise NotDistanceTwo(f"{to_tuple(G.vertices[i])} and {to_tuple(G.vertices[j])}")
    return i, j, common


def classify_common_neighborhood(G: BaseGraph, X: Subset, Y: Subset) -> NeighborhoodClass:
    """Shape of the induced graph on the common neighbours of a distance-2 pair."""
    _, _, common = _distance_two(G, X, Y)
    inner = [
        (a, b) for k, a in enumerate(common) for b in common[k + 1 :] if G.adjacent(a, b)
    ]
    degrees = sorted(sum(v in e for e in inner) for v in common)
    witness = tuple(to_tuple(G.vertices[v]) for v in common)
    size = len(common)
    if size == 2 and not inner:
        return NeighborhoodClass(SQUARE, witness)
    if size == 3 and degrees == [1, 1, 2]:
        return NeighborhoodClass(PYRAMID, witness)
    if size == 4 and degrees == [2, 2, 2, 2]:
        return NeighborhoodClass(OCTAHEDRON, witness)
    raise UnrecognizedShape(f"{size} common neighbours with {len(inner)} induced edges")


def empty_squares(G: BaseGraph, X: Subset, Y: Subset) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(U, V)`` of non-adjacent common neighbours of a distance-2 pair."""
    _, _, common = _distance_two(G, X, Y)
    return [
        (to_tuple(G.vertices[a]), to_tuple(G.vertices[b]))
        for k, a in enumerate(common)
        for b in common[k + 1 :]
        if not G.adjacent(a, b)
    ]


def neighborhood_census(G: BaseGraph) -> dict[str, int]:
    """How many distance-2 pairs fall into each shape."""
    counts = {SQUARE: 0, PYRAMID: 0, OCTAHEDRON: 0}
    for i, j in G.distance_two_pairs():
        counts[classify_common_neighborhood(G, G.vertices[i], G.vertices[j]).kind] += 1
    return counts


def find_octahedron(G: BaseGraph):
    """First distance-2 pair whose common neighbourhood is an octahedron, else ``None``."""
    for i, j in G.distance_two_pairs():
        cls = classify_common_neighborhood(G, G.vertices[i], G.vertices[j])
        if cls.kind == OCTAHEDRON:
            return to_tuple(G.vertices[i]), to_tuple(G.vertices[j]), cls
    return None


def is_binary(M: Matroid, G: BaseGraph | None = None) -> bool:
    """Binary iff the base graph has no induced octahedron."""
    return find_octahedron(G or BaseGraph(M)) is None
