from __future__ import annotations

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from corpus import GRAPHS, LATTICE, TRANSVERSAL, corpus
from matroid_splits import zoo
from matroid_splits.errors import RankOutOfRange, SpecInvalid, UnknownName
from strategies import gf2_matroids, graphic_matroids


@pytest.mark.parametrize("n,r", [(1, 0), (1, 1), (4, 2), (6, 3), (7, 0)])
def test_uniform_counts(n, r):
    M = zoo.uniform(n, r)
    assert len(M) == comb(n, r) and M.r == r


def test_uniform_rank_out_of_range():
    with pytest.raises(RankOutOfRange):
        zoo.uniform(3, 4)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_graphic_matches_forest_oracle(name):
    g = GRAPHS[name]
    M = zoo.graphic(g)
    assert oracles.fs(M.bases) == oracles.spanning_forests(g.vertex_count, g.edges)


def test_graphic_with_loop():
    M = zoo.graphic(zoo.GraphSpec(2, ((1, 2), (1, 1))))
    assert M.bases == ((1,),)


def test_graph_spec_validation():
    with pytest.raises(SpecInvalid):
        zoo.GraphSpec(2, ((1, 3),))
    with pytest.raises(SpecInvalid):
        zoo.GraphSpec(2, ())


@pytest.mark.parametrize("name", sorted(TRANSVERSAL))
def test_transversal_matches_permutation_oracle(name):
    parts, n = TRANSVERSAL[name]
    assert oracles.fs(zoo.transversal(parts, n).bases) == oracles.transversal_bases(parts, n)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_transversal_random(data):
    n = data.draw(st.integers(1, 6))
    parts = data.draw(st.lists(st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=4))
    M = zoo.transversal([sorted(p) for p in parts], n)
    assert oracles.fs(M.bases) == oracles.transversal_bases(parts, n)


def test_fano_lines():
    F7 = zoo.from_gf2_matrix(zoo.FANO_MATRIX)
    assert len(F7) == 28 and F7.r == 3
    assert (1, 3, 5) not in F7.bases


@given(gf2_matroids(7))
@settings(max_examples=40, deadline=None)
def test_binary_representation_roundtrip(M):
    rows = zoo.binary_representation(M)
    assert rows is not None
    assert zoo.from_gf2_matrix(rows) == M


def test_binary_representation_of_non_binary():
    assert zoo.binary_representation(zoo.uniform(4, 2)) is None
    assert zoo.binary_representation(zoo.catalog("w3")) is None


@given(graphic_matroids())
@settings(max_examples=30, deadline=None)
def test_graphic_is_binary(M):
    assert zoo.binary_representation(M) is not None


@pytest.mark.parametrize("name", sorted(LATTICE))
def test_lattice_path_agrees_with_intervals(name):
    spec = LATTICE[name]
    M = zoo.lattice_path(spec)
    parts = [range(a, b + 1) for a, b in spec.intervals]
    assert oracles.fs(M.bases) == oracles.transversal_bases([set(p) for p in parts], spec.size)


def test_lattice_path_region():
    spec = zoo.ZIGZAG_SPEC
    assert spec.intervals == ((1, 4), (3, 5), (5, 6), (7, 7))
    M = zoo.lattice_path(spec)
    assert len(M) == 14
    assert zoo.path_of((1, 3, 5, 7), 7) == "NENENEN"


def test_lattice_path_spec_validation():
    with pytest.raises(SpecInvalid):
        zoo.LatticePathSpec(3, 4, "EEEENNN", "NENENEN")  # three North steps only
    with pytest.raises(SpecInvalid):
        zoo.LatticePathSpec(2, 2, "NNEE", "EENN")  # bounds swapped
    with pytest.raises(SpecInvalid):
        zoo.LatticePathSpec(1, 1, "EX", "NE")


def test_lattice_path_full_region_is_uniform():
    # bounds as far apart as possible give every r-subset
    M = zoo.lattice_path(zoo.LatticePathSpec(3, 2, "EEENN", "NNEEE"))
    assert M == zoo.uniform(5, 2)


@pytest.mark.parametrize(
    "name,count",
    [("m_star", 5), ("m_k4", 16), ("w3", 17), ("fano", 28), ("u_4_2", 6), ("u(5,2)", 10), ("u_n_r(6,3)", 20)],
)
def test_catalog(name, count):
    assert len(zoo.catalog(name)) == count


def test_catalog_unknown():
    with pytest.raises(UnknownName):
        zoo.catalog("petersen")


def test_k4_circuits_are_triangles():
    K4 = zoo.catalog("m_k4")
    missing = {frozenset(t) for t in [(1, 2, 5), (2, 3, 6), (3, 4, 5), (1, 4, 6)]}
    assert oracles.fs(K4.bases) == {frozenset(t) for t in combinations(range(1, 7), 3)} - missing


def test_corpus_all_valid():
    for M in corpus().values():
        assert oracles.is_matroid(M.bases)
