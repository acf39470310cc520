"""Acceptance gate: twelve end-to-end criteria, one test each.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
from itertools import combinations, combinations_with_replacement
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from corpus import AG32_ROWS, GRAPHIC_NAMES, corpus  # noqa: E402
from matroid_splits import base_graph as bg  # noqa: E402
from matroid_splits import matroid as mt  # noqa: E402
from matroid_splits import polytope as pt  # noqa: E402
from matroid_splits import splits as sp  # noqa: E402
from matroid_splits.zoo import ZIGZAG_SPEC, catalog, from_gf2_matrix, lattice_path, transversal, uniform  # noqa: E402


def fam(*bases):
    return {tuple(b) for b in bases}


def bases_of(cand):
    return set(cand.part1_bases), set(cand.part2_bases), set(cand.intersection_bases)


# 1 ---------------------------------------------------------------------------


def test_criterion_01_u42_split():
    M = uniform(4, 2)
    cand = sp.construct_split(M, sp.is_good_partition(M, {1, 2}, 1, 1))
    p1, p2, w = bases_of(cand)
    assert p1 == fam((1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert p2 == fam((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
    assert w == fam((1, 3), (1, 4), (2, 3), (2, 4))
    report = sp.verify_candidate(M, cand)
    assert all(report.checks[t] for t in ("i", "ii", "iii", "iv", "v", "vi", "vii"))
    assert report.overall


# 2 ---------------------------------------------------------------------------

K4_CASES = [
    # E1, (a1, a2), failing family, (B1, B2, e)
    ({1, 2, 3}, (1, 2), "part2", ((1, 3, 5), (1, 2, 4), 3)),
    ({1, 2, 5}, (1, 1), "part1", ((1, 3, 4), (2, 4, 6), 3)),
    ({1, 2}, (1, 1), "part2", ((2, 4, 6), (1, 3, 6), 2)),
    ({1, 3}, (1, 1), "part2", ((1, 4, 5), (3, 4, 6), 1)),
]


def test_criterion_02_k4_negative():
    K4 = catalog("m_k4")
    assert sp.search_splits(K4) == []
    for E1, (a1, a2), part, witness in K4_CASES:
        with pytest.raises(sp.PartitionRejected) as info:
            sp.is_good_partition(K4, E1, a1, a2)
        rej = info.value
        assert rej.reason == "P2"
        assert witness in rej.exchange_violations.get(part, []), (E1, part, witness)
        B1, B2, e = witness
        forced = [tuple(sorted((set(B1) - {e}) | {f})) for f in set(B2) - set(B1)]
        assert not any(b in K4.bases and _in_family(K4, E1, a1, a2, part, b) for b in forced)


def _in_family(M, E1, a1, a2, part, b):
    r1 = mt.rank_of(M, E1)
    r2 = mt.rank_of(M, set(range(1, M.n + 1)) - set(E1))
    p1, p2 = sp.level_families(M, E1, r1 - a1, r2 - a2)
    return mt.to_mask(b) in (p1 if part == "part1" else p2)


# 3 ---------------------------------------------------------------------------


def test_criterion_03_w3_split():
    W3 = mt.relax(catalog("m_k4"), [3, 4, 5])
    assert len(W3) == 17
    cand = sp.construct_split(W3, sp.is_good_partition(W3, {1, 2, 6}, 2, 1))
    p1, p2, w = bases_of(cand)
    assert p1 == fam(
        (1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6)
    )
    assert p2 == fam(
        (1, 2, 3), (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 5, 6),
        (2, 3, 4), (2, 3, 5), (2, 4, 5), (2, 4, 6), (2, 5, 6), (3, 4, 6), (3, 5, 6), (4, 5, 6),
    )
    assert w == fam((1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6))
    assert (len(p1), len(p2), len(w)) == (10, 16, 9)
    assert sp.verify_candidate(W3, cand).overall


# 4 ---------------------------------------------------------------------------

ZIGZAG_LISTED = fam(
    (1, 3, 5, 7), (1, 3, 6, 7), (1, 4, 5, 7), (1, 4, 6, 7), (1, 5, 6, 7), (2, 3, 5, 7), (2, 3, 6, 7),
    (2, 4, 5, 7), (2, 4, 6, 7), (2, 5, 6, 7), (3, 4, 5, 7), (3, 5, 6, 7), (4, 5, 6, 7),
)
ZIGZAG_PART1 = fam(
    (1, 4, 5, 7), (1, 4, 6, 7), (1, 5, 6, 7), (2, 4, 5, 7), (2, 4, 6, 7), (2, 5, 6, 7), (3, 4, 5, 7), (3, 5, 6, 7),
    (4, 5, 6, 7),
)
ZIGZAG_PART2 = ZIGZAG_LISTED - fam((4, 5, 6, 7))
ZIGZAG_INTER = ZIGZAG_PART1 - fam((4, 5, 6, 7))
ZIGZAG_PRESENTATIONS = {
    "part1": [[1, 2, 3, 4], [4, 5, 6], [5, 6], [7]],
    "part2": [[1, 2, 3], [3, 4, 5, 6], [5, 6], [7]],
    "intersection": [[1, 2, 3], [4, 5], [5, 6], [7]],
}


def test_criterion_04_lattice_path():
    M = lattice_path(ZIGZAG_SPEC)
    (cand,) = sp.lattice_path_splits(ZIGZAG_SPEC)
    p1, p2, w = bases_of(cand)
    checks = {
        "split point (x, j) = (3, 1)": (cand.presentations["x"], cand.presentations["j"]) == (3, 1),
        "verified split": sp.verify_candidate(M, cand).overall,
        "presentations realize the families": all(
            set(transversal(pres, 7).bases) == fams
            for pres, fams in zip(ZIGZAG_PRESENTATIONS.values(), (p1, p2, w))
        ),
        "(P2) witness ({3}, {4,5,6})": ((3,), (4, 5, 6)) in set(sp.p2_violations(M, {1, 2, 3}, 1, 1)),
        "(P2') witness ({1,4,5,7}, {4,5,6})": ("part1", (1, 4, 5, 7), (4, 5, 6))
        in set(sp.p2_weak_violations(M, {1, 2, 3}, 1, 1)),
        "exactly the 13 listed bases": set(M.bases) == ZIGZAG_LISTED,
        "9/12/8 listed families": (p1, p2, w) == (ZIGZAG_PART1, ZIGZAG_PART2, ZIGZAG_INTER),
    }
    failed = [name for name, ok in checks.items() if not ok]
    extra = sorted(set(M.bases) - ZIGZAG_LISTED)
    assert not failed, f"failed: {failed}; computed {len(M)} bases, {len(p1)}/{len(p2)}/{len(w)}, unlisted {extra}"


# 5 ---------------------------------------------------------------------------


@pytest.mark.parametrize("n,r", [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)])
def test_criterion_05_uniform_bound(n, r):
    family = sp.uniform_split_family(n, r)
    M = uniform(n, r)
    keys = set()
    for group in family.values():
        for cand in group:
            assert sp.verify_candidate(M, cand).overall
            keys.add(sp.split_distinctness_key(cand))
    assert len(keys) >= n // 2 - 1


# 6 ---------------------------------------------------------------------------


def test_criterion_06_binary():
    C = corpus()
    assert bg.is_binary(catalog("fano")) and bg.is_binary(catalog("m_k4"))
    assert all(bg.is_binary(C[name]) for name in GRAPHIC_NAMES)
    assert not bg.is_binary(uniform(4, 2))
    binary = []
    for M in C.values():
        b = bg.is_binary(M)
        if M.n <= 7:
            assert b == oracles.gf2_representable(M.bases, M.n)
        if b:
            binary.append(M)
    binary.append(from_gf2_matrix(AG32_ROWS))
    assert all(sp.search_splits(M) == [] for M in binary)


# 7 ---------------------------------------------------------------------------


def test_criterion_07_unique_empty_square():
    for M in corpus().values():
        if len(M) > 60 or not bg.is_binary(M):
            continue
        G = bg.build(M)
        for i, j in G.distance_two_pairs():
            assert len(bg.empty_squares(G, G.vertices[i], G.vertices[j])) == 1
    G = bg.build(uniform(4, 2))
    assert len(bg.empty_squares(G, [1, 2], [3, 4])) == 2


# 8 ---------------------------------------------------------------------------


def _small_components():
    return [(k, M) for k, M in sorted(corpus().items()) if M.n <= 6 and "+" not in k]


def test_criterion_08_direct_sums():
    comps = _small_components()
    splits_of = {k: sp.search_splits(M) for k, M in comps}
    for (k1, M1), (k2, M2) in combinations_with_replacement(comps, 2):
        if M1.n + M2.n > 8:
            continue
        S = mt.direct_sum(M1, M2)
        assert bool(sp.search_splits(S)) == bool(splits_of[k1] or splits_of[k2]), (k1, k2)
        for split in splits_of[k1]:
            k, back = sp.project_split_direct_sum(sp.lift_split_direct_sum(split, M1, M2), M1, M2)
            assert k == 1 and back.unordered == split.unordered
        for split in splits_of[k2]:
            k, back = sp.project_split_direct_sum(sp.lift_split_direct_sum(split, M2, M1), M2, M1)
            assert k == 1 and back.unordered == split.unordered


# 9 ---------------------------------------------------------------------------


@pytest.mark.parametrize("d", [2, 3, 4])
def test_criterion_09_hypercube(d):
    M = uniform(2, 1)
    for _ in range(d - 1):
        M = mt.direct_sum(M, uniform(2, 1))
    certs = {c.kind: c for c in sp.indecomposability_certificates(M)}
    cert = certs[sp.DEGREE_INDECOMPOSABLE]
    assert cert.evidence["degree"] == cert.evidence["dimension"] == d == pt.dimension(M)
    assert sp.verify_certificate(M, cert)


# 10 --------------------------------------------------------------------------


def test_criterion_10_m_star():
    M = catalog("m_star")
    report = sp.verify_split(M, [(1, 2), (2, 3), (2, 4)], [(1, 3), (2, 3), (3, 4)])
    assert all(report.checks[t] for t in ("i", "ii", "iii", "iv", "v"))
    assert report.checks["vii"] is False and report.crossing_edge is not None
    assert not report.overall


# 11 --------------------------------------------------------------------------


def test_criterion_11_dimension():
    for M in list(corpus().values()) + [from_gf2_matrix(AG32_ROWS)]:
        assert M.n <= 10
        d = pt.dimension(M)
        assert d == M.n - len(mt.connected_components(M))
        assert d == oracles.affine_dimension(pt.vertices(M).tolist())


# 12 --------------------------------------------------------------------------


def _closed_neighbourhood_forces_everything(M) -> bool:
    G = bg.build(M)
    everything = set(range(len(M)))
    for k in range(1, len(M)):
        for sub in combinations(range(len(M)), k):
            chosen = set(sub)
            if not any(set(G.adjacency[x]) <= chosen for x in chosen):
                continue
            if mt.is_base_family(M.n, [M.masks[i] for i in sub]) and chosen != everything:
                return False
    return True


def test_criterion_12_properties():
    C = corpus()
    for M in C.values():
        n = M.n
        for X in (set(s) for k in range(n + 1) for s in combinations(range(1, n + 1), k)):
            cX = mt.closure(M, X)
            assert X <= cX and mt.closure(M, cX) == cX
            for e in set(range(1, n + 1)) - X:
                assert cX <= mt.closure(M, X | {e})
            if X and n <= 6:
                assert oracles.is_matroid(mt.restriction(M, X).bases)
    small = [M for M in C.values() if M.n <= 4]
    for M1 in small:
        for M2 in small:
            S = mt.direct_sum(M1, M2)
            for k in range(S.n + 1):
                for X in combinations(range(1, S.n + 1), k):
                    left = [e for e in X if e <= M1.n]
                    right = [e - M1.n for e in X if e > M1.n]
                    assert mt.rank_of(S, X) == mt.rank_of(M1, left) + mt.rank_of(M2, right)
    binary_small = [M for M in C.values() if len(M) <= 12 and bg.is_binary(M)]
    assert binary_small
    assert all(_closed_neighbourhood_forces_everything(M) for M in binary_small)


CRITERIA = [
    test_criterion_01_u42_split,
    test_criterion_02_k4_negative,
    test_criterion_03_w3_split,
    test_criterion_04_lattice_path,
    lambda: [test_criterion_05_uniform_bound(n, r) for n, r in [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)]],
    test_criterion_06_binary,
    test_criterion_07_unique_empty_square,
    test_criterion_08_direct_sums,
    lambda: [test_criterion_09_hypercube(d) for d in (2, 3, 4)],
    test_criterion_10_m_star,
    test_criterion_11_dimension,
    test_criterion_12_properties,
]


if __name__ == "__main__":
    failures = 0
    for i, check in enumerate(CRITERIA, 1):
        try:
            check()
            print(f"criterion {i:2d}: PASS")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"criterion {i:2d}: FAIL  {type(exc).__name__}: {exc}")
    sys.exit(1 if failures else 0)
