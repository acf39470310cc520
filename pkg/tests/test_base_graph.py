from __future__ import annotations

import pytest
from hypothesis import given, settings

import oracles
from corpus import corpus
from matroid_splits import base_graph as bg
from matroid_splits.errors import NotDistanceTwo, VertexNotFound
from matroid_splits.matroid import to_tuple
from matroid_splits.zoo import catalog, uniform
from strategies import matroids


@given(matroids(7))
@settings(max_examples=50, deadline=None)
def test_edges_are_single_exchanges(M):
    G = bg.build(M)
    got = {(frozenset(to_tuple(G.vertices[i])), frozenset(to_tuple(G.vertices[j]))) for i, j in G.edges()}
    want = oracles.base_graph_edges(M.bases)
    assert {frozenset(e) for e in got} == {frozenset(e) for e in want}
    assert G.edge_count == len(want)


def test_octahedron_of_u42():
    G = bg.build(uniform(4, 2))
    assert len(G) == 6 and G.edge_count == 12
    assert all(G.degree(i) == 4 for i in range(6))
    cls = bg.classify_common_neighborhood(G, [1, 2], [3, 4])
    assert cls.kind == bg.OCTAHEDRON and len(cls.witness) == 4


def test_distance_and_errors():
    G = bg.build(uniform(4, 2))
    assert bg.distance(G, [1, 2], [3, 4]) == 2
    assert bg.distance(G, [1, 2], [1, 3]) == 1
    with pytest.raises(VertexNotFound):
        G.vertex([1, 2, 3])
    with pytest.raises(NotDistanceTwo):
        bg.classify_common_neighborhood(G, [1, 2], [1, 3])


def test_shapes_in_k4():
    G = bg.build(catalog("m_k4"))
    census = bg.neighborhood_census(G)
    assert census[bg.OCTAHEDRON] == 0
    assert census[bg.SQUARE] + census[bg.PYRAMID] == sum(1 for _ in G.distance_two_pairs())


@pytest.mark.parametrize("name", sorted(corpus()))
def test_every_distance_two_pair_is_classified(name):
    G = bg.build(corpus()[name])
    for i, j in G.distance_two_pairs():
        cls = bg.classify_common_neighborhood(G, G.vertices[i], G.vertices[j])
        assert cls.kind in (bg.SQUARE, bg.PYRAMID, bg.OCTAHEDRON)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_is_binary_agrees_with_oracle(name):
    M = corpus()[name]
    assert bg.is_binary(M) == oracles.gf2_representable(M.bases, M.n)


def test_empty_squares_count():
    G = bg.build(uniform(4, 2))
    assert len(bg.empty_squares(G, [1, 2], [3, 4])) == 2
    G = bg.build(catalog("fano"))
    i, j = next(G.distance_two_pairs())
    assert len(bg.empty_squares(G, G.vertices[i], G.vertices[j])) == 1


def test_single_base_graph():
    M = uniform(3, 3)
    G = bg.build(M)
    assert len(G) == 1 and G.edge_count == 0
    assert list(G.distance_two_pairs()) == []
    assert bg.is_binary(M)
