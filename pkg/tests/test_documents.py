from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from corpus import corpus
from matroid_splits import documents as docs
from matroid_splits.base_graph import build
from matroid_splits.errors import ExchangeAxiomViolation, ParseError, UnknownName
from matroid_splits.splits import search_splits, verify_candidate
from matroid_splits.zoo import catalog, uniform
from strategies import matroids


def doc(**form) -> str:
    return json.dumps({"format": docs.FORMAT, **form})


def test_parse_catalog_and_uniform():
    assert len(docs.parse(doc(catalog="fano"))) == 28
    assert docs.parse(doc(uniform={"n": 4, "r": 2})) == uniform(4, 2)


def test_parse_explicit_invalid_family():
    with pytest.raises(ExchangeAxiomViolation) as info:
        docs.parse(doc(n=4, bases=[[1, 2], [3, 4]]))
    assert info.value.witness[2] in info.value.witness[0]


@pytest.mark.parametrize(
    "form",
    [
        {"graphic": {"vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}},
        {"gf2": {"rows": ["1000111", "0101011", "0011101"]}},
        {"transversal": {"n": 4, "parts": [[1, 2], [2, 3, 4]]}},
        {"lattice_path": {"m": 3, "r": 4, "P": "EEENNNN", "Q": "NENENEN"}},
        {"direct_sum": [{"uniform": {"n": 2, "r": 1}}, {"catalog": "m_star"}]},
        {"relax": {"base_doc": {"catalog": "m_k4"}, "set": [3, 4, 5]}},
    ],
)
def test_constructor_forms_roundtrip(form):
    M = docs.parse(doc(**form))
    assert docs.parse(docs.serialize(M)) == M


def test_relax_form_gives_w3():
    M = docs.parse(doc(relax={"base_doc": {"catalog": "m_k4"}, "set": [3, 4, 5]}))
    assert M == catalog("w3")


@pytest.mark.parametrize(
    "text,where",
    [
        ("{not json", "line 1"),
        (json.dumps({"uniform": {"n": 4, "r": 2}}), "$"),
        (json.dumps({"format": "matroid/v2", "catalog": "fano"}), "$.format"),
        (doc(uniform={"n": 4}), "$.uniform"),
        (doc(uniform={"n": 4, "r": 2}, catalog="fano"), "$"),
        (doc(n=3, bases=[[1, "x"]]), "$.bases[0]"),
        (doc(direct_sum=[{"catalog": "fano"}]), "$.direct_sum"),
        (doc(direct_sum=[{"catalog": "fano"}, {"uniform": {"n": "4", "r": 2}}]), "$.direct_sum[1].uniform.n"),
        (json.dumps([1, 2]), "$"),
    ],
)
def test_parse_errors_carry_location(text, where):
    with pytest.raises(ParseError) as info:
        docs.parse(text)
    assert info.value.location.startswith(where)


def test_unknown_catalog_name():
    with pytest.raises(UnknownName):
        docs.parse(doc(catalog="petersen"))


@pytest.mark.parametrize("name", sorted(corpus()))
def test_roundtrip_corpus(name):
    M = corpus()[name]
    text = docs.serialize(M)
    assert docs.parse(text) == M
    assert docs.serialize(docs.parse(text)) == text


@given(matroids(6))
@settings(max_examples=40, deadline=None)
def test_roundtrip_random(M):
    assert docs.parse(docs.serialize(M)) == M


def test_serialize_u42():
    d = json.loads(docs.serialize(uniform(4, 2)))
    assert d == {"format": "matroid/v1", "n": 4, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}


def test_export_dot():
    G = build(uniform(4, 2))
    text = docs.export_dot(G)
    assert text.count("--") == 12 == G.edge_count
    assert text.count("[label=") == 6
    assert text == docs.export_dot(build(uniform(4, 2)))
    single = docs.export_dot(build(uniform(2, 2)))
    assert single.count("[label=") == 1 and "--" not in single


def test_split_report_is_self_contained():
    M = uniform(5, 2)
    cand = search_splits(M)[0]
    report = docs.split_report(M, cand, verify_candidate(M, cand))
    text = json.dumps(report)
    M2, p1, p2, H = docs.parse_report(text)
    assert M2 == M and H == cand.hyperplane
    assert [tuple(b) for b in p1] == list(cand.part1_bases)
    assert report["input_digest"] == docs.digest(M)
    assert report["verification"]["verdict"] is True


def test_parse_report_rejects_digest_mismatch():
    M = uniform(4, 2)
    cand = search_splits(M)[0]
    report = docs.split_report(M, cand, verify_candidate(M, cand))
    report["input_digest"] = "0" * 64
    with pytest.raises(ParseError):
        docs.parse_report(json.dumps(report))
