"""Hyperplane splits of base polytopes: construction, search, verification, certificates.

A split is built from a bipartition ``(E1, E2)`` of the ground set with
integers ``a1, a2``: the two parts are the bases meeting ``E1`` in at most
``r1 - a1`` elements and those meeting ``E2`` in at most ``r2 - a2``
elements, where ``r_i`` is the rank of ``E_i``. :func:`verify_split` is the
judge for any pair of base families, whatever produced them.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .base_graph import BaseGraph, find_octahedron, neighborhood_census
from .errors import (
    MatroidError,
    NoSplitPoint,
    PartNotMatroid,
    PreconditionViolation,
    ProductFormViolation,
    ValidationError,
)
from .matroid import (
    Matroid,
    Subset,
    check_guard,
    direct_sum,
    exchange_violations,
    from_bases,
    popcount,
    rank_of,
    relax,
    to_mask,
    to_tuple,
)
from .polytope import (
    FacetCheck,
    SplitHyperplane,
    crossing_edges,
    dimension,
    facet_check,
    separating_hyperplane,
    theorem1_hyperplane,
)
from .zoo import LatticePathSpec, binary_representation, transversal, uniform

log = logging.getLogger(__name__)

P2 = "P2"
P2_WEAK = "P2'"
DIRECT = "direct"


# -- data -------------------------------------------------------------------


@dataclass(frozen=True)
class GoodPartition:
    E1: frozenset[int]
    E2: frozenset[int]
    r1: int
    r2: int
    a1: int
    a2: int
    p2_mode: str  # P2, P2' or direct (families validated directly)

    @property
    def level1(self) -> int:
        return self.r1 - self.a1

    @property
    def level2(self) -> int:
        return self.r2 - self.a2


class PartitionRejected(MatroidError):
    """``is_good_partition`` said no. ``reason`` names the first failed condition.

    ``exchange_witness`` is filled when both union conditions fail and one of
    the resulting families is not a base family: ``(part, (B1, B2, e))``.
    ``exchange_violations`` lists every such failure, per family.
    """

    def __init__(self, reason: str, message: str, *, witness=None, p2_witness=None,
                 p2_weak_witness=None, exchange_witness=None, families=None, ranks=None):
        self.reason = reason
        self.witness = witness
        self.p2_witness = p2_witness
        self.p2_weak_witness = p2_weak_witness
        self.exchange_witness = exchange_witness
        self._families = families
        self.ranks = ranks
        super().__init__(f"{reason}: {message}")

    @cached_property
    def exchange_violations(self) -> dict[str, list[tuple]]:
        return _all_violations(*self._families) if self._families else {}


@dataclass
class VerificationReport:
    """The seven split conditions plus the facet test."""

    union_covers: bool
    proper_subfamilies: bool
    not_in_intersection: bool
    intersection_nonempty: bool
    all_matroids: bool
    hyperplane_exists: bool
    edges_preserved: bool
    facet: FacetCheck | None = None
    hyperplane: SplitHyperplane | None = None
    exchange_witnesses: dict[str, tuple] = field(default_factory=dict)
    crossing_edge: tuple | None = None

    CHECK_NAMES = (
        ("i", "union_covers"),
        ("ii", "proper_subfamilies"),
        ("iii", "not_in_intersection"),
        ("iv", "intersection_nonempty"),
        ("v", "all_matroids"),
        ("vi", "hyperplane_exists"),
        ("vii", "edges_preserved"),
    )

    @property
    def checks(self) -> dict[str, bool]:
        out = {tag: getattr(self, name) for tag, name in self.CHECK_NAMES}
        out["facet"] = bool(self.facet)
        return out

    @property
    def overall(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.overall


@dataclass(frozen=True)
class SplitCandidate:
    n: int
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    intersection: tuple[int, ...]
    hyperplane: SplitHyperplane | None
    source: str  # good-partition, lattice-path, direct-sum-lift, direct-sum-projection, manual
    partition: GoodPartition | None = None
    presentations: dict | None = field(default=None, compare=False, hash=False)

    @property
    def part1_bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(to_tuple(b) for b in self.part1)

    @property
    def part2_bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(to_tuple(b) for b in self.part2)

    @property
    def intersection_bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(to_tuple(b) for b in self.intersection)

    @property
    def unordered(self) -> frozenset[tuple[int, ...]]:
        return frozenset((self.part1, self.part2))

    def sort_key(self):
        return tuple(sorted((self.part1_bases, self.part2_bases)))


def make_candidate(n, part1, part2, hyperplane=None, source="manual", partition=None, presentations=None):
    p1 = _canon(part1)
    p2 = _canon(part2)
    inter = _canon(set(p1) & set(p2))
    return SplitCandidate(n, p1, p2, inter, hyperplane, source, partition, presentations)


def _canon(family: Iterable[Subset]) -> tuple[int, ...]:
    return tuple(sorted({to_mask(b) for b in family}, key=to_tuple))


@dataclass(frozen=True)
class Certificate:
    kind: str  # SplitVerified, NoGoodPartition, BinaryNoHyperplaneSplit, DegreeIndecomposable
    evidence: dict


SPLIT_VERIFIED = "SplitVerified"
NO_GOOD_PARTITION = "NoGoodPartition"
BINARY_NO_SPLIT = "BinaryNoHyperplaneSplit"
DEGREE_INDECOMPOSABLE = "DegreeIndecomposable"


# -- caches keyed on the (hashable, immutable) matroid ----------------------


@lru_cache(maxsize=64)
def _graph(M: Matroid) -> BaseGraph:
    return BaseGraph(M)


@lru_cache(maxsize=64)
def _dimension(M: Matroid) -> int:
    return dimension(M)


# -- good partitions --------------------------------------------------------


def _independent_in(M: Matroid, within: int, size: int) -> list[int]:
    return sorted(
        (x for x in M.independent_sets if x & ~within == 0 and popcount(x) == size), key=to_tuple
    )


def level_families(M: Matroid, E1: Subset, level1: int, level2: int) -> tuple[list[int], list[int]]:
    """Bases with ``|B & E1| <= level1`` and bases with ``|B & E2| <= level2``."""
    e1 = to_mask(E1)
    e2 = M.ground & ~e1
    part1 = [b for b in M.masks if popcount(b & e1) <= level1]
    part2 = [b for b in M.masks if popcount(b & e2) <= level2]
    return part1, part2


def p2_violations(M: Matroid, E1: Subset, a1: int, a2: int) -> Iterator[tuple[tuple, tuple]]:
    """Pairs ``(X, Y)`` of small independent sets on each side whose union is dependent.

    Only ``|X| = r1 - a1`` and ``|Y| = r2 - a2`` need checking, since smaller
    independent sets extend inside their side.
    """
    e1 = to_mask(E1)
    e2 = M.ground & ~e1
    r1, r2 = rank_of(M, e1), rank_of(M, e2)
    ind = M.independent_sets
    xs = _independent_in(M, e1, r1 - a1)
    ys = _independent_in(M, e2, r2 - a2)
    for x in xs:
        for y in ys:
            if (x | y) not in ind:
                yield to_tuple(x), to_tuple(y)


def p2_weak_violations(M: Matroid, E1: Subset, a1: int, a2: int) -> Iterator[tuple[str, tuple, tuple]]:
    """Failures ``(side, B, Y)`` of the weaker union condition; ``side`` is ``"part1"`` or ``"part2"``."""
    e1 = to_mask(E1)
    e2 = M.ground & ~e1
    r1, r2 = rank_of(M, e1), rank_of(M, e2)
    ind = M.independent_sets
    part1, part2 = level_families(M, e1, r1 - a1, r2 - a2)
    ys2 = _independent_in(M, e2, r2 - a2)
    for b in part1:
        for y in ys2:
            if ((b & e1) | y) not in ind:
                yield "part1", to_tuple(b), to_tuple(y)
    ys1 = _independent_in(M, e1, r1 - a1)
    for b in part2:
        for y in ys1:
            if ((b & e2) | y) not in ind:
                yield "part2", to_tuple(b), to_tuple(y)


def _families(part1: list[int], part2: list[int]):
    inter = sorted(set(part1) & set(part2))
    return (("part1", part1), ("part2", part2), ("intersection", inter))


def _first_violation(part1: list[int], part2: list[int]):
    for name, fam in _families(part1, part2):
        bad = next(exchange_violations(fam), None) if fam else None
        if bad is not None:
            b1, b2, e = bad
            return name, (to_tuple(b1), to_tuple(b2), to_tuple(e)[0])
    return None


def _all_violations(part1: list[int], part2: list[int]) -> dict[str, list[tuple]]:
    out = {}
    for name, fam in _families(part1, part2):
        bad = [(to_tuple(b1), to_tuple(b2), to_tuple(e)[0]) for b1, b2, e in exchange_violations(fam)] if fam else []
        if bad:
            out[name] = bad
    return out


def is_good_partition(M: Matroid, E1: Subset, a1: int, a2: int) -> GoodPartition:
    """Check rank, range, (P1) and then the union conditions, strongest first.

    Raises :class:`PartitionRejected` carrying the first violated condition.
    """
    e1 = to_mask(E1)
    e2 = M.ground & ~e1
    if e1 == 0 or e2 == 0 or e1 & ~M.ground:
        raise PreconditionViolation("E1 must be a nonempty proper subset of the ground set")
    r1, r2 = rank_of(M, e1), rank_of(M, e2)
    ranks = (r1, r2)
    if r1 <= 1 or r2 <= 1:
        raise PartitionRejected("rank", f"restriction ranks {ranks} must both exceed 1", ranks=ranks)
    if not (0 < a1 < r1 and 0 < a2 < r2):
        raise PartitionRejected("range", f"need 0 < a_i < r_i, got a=({a1}, {a2}), r={ranks}", ranks=ranks)
    if r1 + r2 != M.r + a1 + a2:
        raise PartitionRejected("P1", f"{r1} + {r2} != {M.r} + {a1} + {a2}", ranks=ranks)
    E1s = frozenset(to_tuple(e1))
    E2s = frozenset(to_tuple(e2))
    p2_bad = next(p2_violations(M, e1, a1, a2), None)
    if p2_bad is None:
        return GoodPartition(E1s, E2s, r1, r2, a1, a2, P2)
    weak_bad = next(p2_weak_violations(M, e1, a1, a2), None)
    if weak_bad is None:
        return GoodPartition(E1s, E2s, r1, r2, a1, a2, P2_WEAK)
    part1, part2 = level_families(M, e1, r1 - a1, r2 - a2)
    raise PartitionRejected(
        "P2",
        f"union condition fails for X={set(p2_bad[0])}, Y={set(p2_bad[1])}",
        witness=p2_bad,
        p2_witness=p2_bad,
        p2_weak_witness=weak_bad,
        exchange_witness=_first_violation(part1, part2),
        families=(part1, part2),
        ranks=ranks,
    )


def admit(M: Matroid, E1: Subset, a1: int, a2: int) -> GoodPartition | None:
    """Three routes in order: (P2), (P2'), then validating the families directly."""
    try:
        return is_good_partition(M, E1, a1, a2)
    except PartitionRejected as rej:
        if rej.reason != "P2" or rej.exchange_witness is not None:
            return None
        e1 = to_mask(E1)
        r1, r2 = rej.ranks
        part1, _ = level_families(M, e1, r1 - a1, r2 - a2)
        if not part1:
            return None
        return GoodPartition(
            frozenset(to_tuple(e1)), frozenset(to_tuple(M.ground & ~e1)), r1, r2, a1, a2, DIRECT
        )


def admissible_a_values(r: int, r1: int, r2: int) -> list[tuple[int, int]]:
    total = r1 + r2 - r
    return [(a1, total - a1) for a1 in range(1, r1) if 0 < total - a1 < r2]


# -- building and judging splits --------------------------------------------


def construct_split(M: Matroid, gp: GoodPartition) -> SplitCandidate:
    part1, part2 = level_families(M, gp.E1, gp.level1, gp.level2)
    inter = sorted(set(part1) & set(part2))
    for name, fam in (("part1", part1), ("part2", part2), ("intersection", inter)):
        try:
            from_bases(M.n, fam)
        except ValidationError as exc:
            raise PartNotMatroid(name, exc) from None
    H = theorem1_hyperplane(gp.E1, gp.r1, gp.a1, M.n)
    return make_candidate(M.n, part1, part2, H, "good-partition", gp)


def verify_split(
    M: Matroid,
    part1: Iterable[Subset],
    part2: Iterable[Subset],
    hyperplane: SplitHyperplane | None = None,
) -> VerificationReport:
    """Judge an arbitrary pair of base families as a hyperplane split of ``M``.

    ``hyperplane`` is tried first for (vi); when absent or not separating, an
    exact search looks for one.
    """
    p1 = {to_mask(b) for b in part1}
    p2 = {to_mask(b) for b in part2}
    everything = set(M.masks)
    W = p1 & p2
    union_covers = (p1 | p2) == everything
    proper = p1 < everything and p2 < everything
    not_in_w = not p1 <= W and not p2 <= W
    witnesses = {}
    for name, fam in (("part1", p1), ("part2", p2), ("intersection", W)):
        if not fam:
            witnesses[name] = None
            continue
        bad = next(exchange_violations(fam), None)
        if bad is not None:
            witnesses[name] = (to_tuple(bad[0]), to_tuple(bad[1]), to_tuple(bad[2])[0])
    all_matroids = not witnesses

    H = None
    if W and not_in_w and p1 <= everything and p2 <= everything:
        if hyperplane is not None and _separates(hyperplane, p1, p2):
            H = hyperplane
        else:
            H = separating_hyperplane(M.n, M.masks, p1, p2)
    G = _graph(M)
    crossing = None
    if p1 <= everything and p2 <= everything:
        crossing = next(crossing_edges(G, p1, p2), None)
    facet = None
    if H is not None and union_covers:
        facet = facet_check(M, p1, p2, H, G)
    return VerificationReport(
        union_covers=union_covers,
        proper_subfamilies=proper,
        not_in_intersection=not_in_w,
        intersection_nonempty=bool(W),
        all_matroids=all_matroids,
        hyperplane_exists=H is not None,
        edges_preserved=crossing is None and p1 <= everything and p2 <= everything,
        facet=facet,
        hyperplane=H,
        exchange_witnesses=witnesses,
        crossing_edge=None if crossing is None else (to_tuple(crossing[0]), to_tuple(crossing[1])),
    )


def _separates(H: SplitHyperplane, p1: set[int], p2: set[int]) -> bool:
    W = p1 & p2
    return (
        all(H.value(b) == H.level for b in W)
        and all(H.value(b) < H.level for b in p1 - W)
        and all(H.value(b) > H.level for b in p2 - W)
    )


def verify_candidate(M: Matroid, cand: SplitCandidate) -> VerificationReport:
    return verify_split(M, cand.part1, cand.part2, cand.hyperplane)


# -- exhaustive search ------------------------------------------------------


@dataclass
class SearchStats:
    partitions: int = 0
    degenerate: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    tried: int = 0
    admitted: dict[str, int] = field(default_factory=lambda: {P2: 0, P2_WEAK: 0, DIRECT: 0})
    verified: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.partitions += other.partitions
        self.degenerate.extend(other.degenerate)
        self.tried += other.tried
        for k, v in other.admitted.items():
            self.admitted[k] += v
        self.verified += other.verified

    def as_dict(self) -> dict:
        return {
            "partitions": self.partitions,
            "degenerate_partitions": len(self.degenerate),
            "a_values_tried": self.tried,
            "admitted": dict(self.admitted),
            "verified": self.verified,
        }


def _partition_masks(M: Matroid) -> list[int]:
    # E1 always contains element 1; E2 is the (nonempty) complement
    rest = M.ground & ~1
    out = []
    sub = rest
    while True:
        e1 = sub | 1
        if e1 != M.ground:
            out.append(e1)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return sorted(out)


def _search_chunk(M: Matroid, e1_masks: Sequence[int], first: bool) -> tuple[list[SplitCandidate], SearchStats]:
    stats = SearchStats()
    found: list[SplitCandidate] = []
    for e1 in e1_masks:
        stats.partitions += 1
        e2 = M.ground & ~e1
        r1, r2 = rank_of(M, e1), rank_of(M, e2)
        if r1 <= 1 or r2 <= 1:
            # reported only: no integer a_i fits strictly between 0 and r_i
            stats.degenerate.append((to_tuple(e1), r1, r2))
            continue
        for a1, a2 in admissible_a_values(M.r, r1, r2):
            stats.tried += 1
            gp = admit(M, e1, a1, a2)
            if gp is None:
                continue
            stats.admitted[gp.p2_mode] += 1
            try:
                cand = construct_split(M, gp)
            except PartNotMatroid:
                continue
            report = verify_candidate(M, cand)
            if report.overall:
                stats.verified += 1
                found.append(cand)
                if first:
                    return found, stats
    return found, stats


def _dedupe(cands: Iterable[SplitCandidate]) -> list[SplitCandidate]:
    seen = {}
    for c in cands:
        seen.setdefault(c.unordered, c)
    return sorted(seen.values(), key=SplitCandidate.sort_key)


def search_splits(
    M: Matroid,
    *,
    first: bool = False,
    workers: int = 1,
    stats: SearchStats | None = None,
) -> list[SplitCandidate]:
    """Every verified split arising from a bipartition of the ground set.

    Each unordered bipartition is visited once (``E1`` holds element 1) and all
    admissible ``(a1, a2)`` are swept, which covers both orientations. Results
    are deduplicated by the unordered pair of parts and sorted canonically, so
    the output does not depend on ``workers``.
    """
    check_guard(M.n)
    masks = _partition_masks(M) if M.n >= 2 else []
    if workers > 1 and len(masks) > workers:
        chunks = [masks[i::workers] for i in range(workers)]
        total = SearchStats()
        found = []
        with ProcessPoolExecutor(workers) as pool:
            for cands, st in pool.map(_search_chunk, [M] * workers, chunks, [first] * workers):
                found.extend(cands)
                total.merge(st)
    else:
        found, total = _search_chunk(M, masks, first)
    if stats is not None:
        stats.merge(total)
    for e1, r1, r2 in total.degenerate:
        log.debug("non-conforming partition E1=%s (r1=%d, r2=%d)", e1, r1, r2)
    out = _dedupe(found)
    return out[:1] if first else out


# -- constructed split families --------------------------------------------


def uniform_split_family(n: int, r: int) -> dict[int, list[SplitCandidate]]:
    """For ``k = 2..n//2`` split ``U(n, r)`` along ``{1..k}`` with every admissible ``(a1, a2)``."""
    if not n >= r + 2 >= 4:
        raise PreconditionViolation(f"need n >= r + 2 >= 4, got n={n}, r={r}")
    M = uniform(n, r)
    out: dict[int, list[SplitCandidate]] = {}
    for k in range(2, n // 2 + 1):
        e1 = (1 << k) - 1
        r1, r2 = min(k, r), min(n - k, r)
        group = []
        for a1, a2 in admissible_a_values(r, r1, r2):
            gp = is_good_partition(M, e1, a1, a2)
            cand = construct_split(M, gp)
            if not verify_candidate(M, cand).overall:
                raise MatroidError(f"uniform split k={k}, a=({a1},{a2}) failed verification")
            group.append(cand)
        out[k] = group
    return out


def lattice_split_points(spec: LatticePathSpec) -> list[tuple[int, int]]:
    """All ``(x, j)`` with ``x`` strictly inside interval ``j`` and ``x + 1`` strictly inside interval ``j + 1``."""
    iv = spec.intervals
    pts = []
    for j in range(1, spec.r):
        lo1, hi1 = iv[j - 1]
        lo2, hi2 = iv[j]
        for x in range(1, spec.size):
            if lo1 < x < hi1 and lo2 < x + 1 < hi2:
                pts.append((x, j))
    return pts


def lattice_path_splits(spec: LatticePathSpec) -> list[SplitCandidate]:
    """One verified split per split point, each realized through transversal presentations."""
    from .zoo import lattice_path

    points = lattice_split_points(spec)
    if not points:
        raise NoSplitPoint("no x, j with both intervals strictly containing x, x+1")
    M = lattice_path(spec)
    n = spec.size
    out = []
    for x, j in points:
        e1 = (1 << x) - 1
        E1 = set(range(1, x + 1))
        E2 = set(range(x + 1, n + 1))
        r1, r2 = rank_of(M, e1), rank_of(M, M.ground & ~e1)
        a1, a2 = r1 - j, r2 - (spec.r - j)
        intervals = [set(range(lo, hi + 1)) for lo, hi in spec.intervals]
        pres1 = [N if i < j else N & E2 for i, N in enumerate(intervals)]
        pres2 = [N & E1 if i < j else N for i, N in enumerate(intervals)]
        pres12 = [A & B for A, B in zip(pres1, pres2)]
        part1, part2 = level_families(M, e1, j, spec.r - j)
        realized = {}
        for name, pres, fam in (
            ("part1", pres1, part1),
            ("part2", pres2, part2),
            ("intersection", pres12, sorted(set(part1) & set(part2))),
        ):
            T = transversal([sorted(p) for p in pres], n)
            if set(T.masks) != set(fam):
                raise MatroidError(f"presentation for {name} at x={x}, j={j} does not realize the family")
            realized[name] = tuple(tuple(sorted(p)) for p in pres)
        gp = GoodPartition(frozenset(E1), frozenset(E2), r1, r2, a1, a2, _mode(M, e1, a1, a2))
        H = theorem1_hyperplane(e1, r1, a1, n) if 0 < a1 < r1 else None
        cand = make_candidate(n, part1, part2, H, "lattice-path", gp, {"x": x, "j": j, **realized})
        if not verify_candidate(M, cand).overall:
            raise MatroidError(f"lattice-path split at x={x}, j={j} failed verification")
        out.append(cand)
    return out


def _mode(M: Matroid, e1: int, a1: int, a2: int) -> str:
    try:
        return is_good_partition(M, e1, a1, a2).p2_mode
    except MatroidError:
        return DIRECT


def relaxation_split(M: Matroid, gp: GoodPartition, X: Subset) -> SplitCandidate:
    """Reuse ``gp``'s bipartition and ``a`` values on the relaxation of ``M`` at ``X``."""
    relaxed = relax(M, X)
    gp2 = admit(relaxed, gp.E1, gp.a1, gp.a2)
    if gp2 is None:
        raise PreconditionViolation("the partition is no longer admissible after relaxation")
    cand = construct_split(relaxed, gp2)
    if not verify_candidate(relaxed, cand).overall:
        raise MatroidError("relaxed split failed verification")
    return cand


# -- direct sums --------------------------------------------------------------


def lift_split_direct_sum(split: SplitCandidate, M1: Matroid, M2: Matroid) -> SplitCandidate:
    """``part_i x B(M2)`` on ``M1 + M2``; the hyperplane ignores the new coordinates."""
    shift = M1.n
    S = direct_sum(M1, M2)
    part1 = [x | (y << shift) for x in split.part1 for y in M2.masks]
    part2 = [x | (y << shift) for x in split.part2 for y in M2.masks]
    H = split.hyperplane
    if H is None:
        H = separating_hyperplane(M1.n, M1.masks, set(split.part1), set(split.part2))
    cand = make_candidate(S.n, part1, part2, H.extended(M2.n) if H else None, "direct-sum-lift")
    if not verify_candidate(S, cand).overall:
        raise MatroidError("lifted split failed verification")
    return cand


def _product_factors(family: Sequence[int], n1: int, n: int) -> tuple[set[int], set[int]]:
    low = (1 << n1) - 1
    A1 = {b & low for b in family}
    A2 = {b >> n1 for b in family}
    if len(A1) * len(A2) != len(set(family)) or {x | (y << n1) for x in A1 for y in A2} != set(family):
        raise ProductFormViolation("family is not a product of component families")
    return A1, A2


def project_split_direct_sum(split: SplitCandidate, M1: Matroid, M2: Matroid) -> tuple[int, SplitCandidate]:
    """Recover the component split behind a split of ``M1 + M2``.

    Returns ``(k, split)`` where ``k`` in ``{1, 2}`` names the component that
    carries the split; on the other component both parts are everything.
    """
    n1 = M1.n
    A1, A2 = _product_factors(split.part1, n1, split.n)
    C1, C2 = _product_factors(split.part2, n1, split.n)
    full1, full2 = set(M1.masks), set(M2.masks)
    if A2 == C2 == full2:
        k, M, p1, p2 = 1, M1, A1, C1
    elif A1 == C1 == full1:
        k, M, p1, p2 = 2, M2, A2, C2
    else:
        raise ProductFormViolation("neither component is left whole by both parts")
    H = separating_hyperplane(M.n, M.masks, p1, p2)
    if split.hyperplane is not None:
        coeffs = split.hyperplane.coefficients
        own = coeffs[:n1] if k == 1 else coeffs[n1:]
        other = coeffs[n1:] if k == 1 else coeffs[:n1]
        fixed = M2.masks[0] if k == 1 else M1.masks[0]
        offset = sum(c for i, c in enumerate(other) if (fixed >> i) & 1)
        restricted = SplitHyperplane(tuple(own), split.hyperplane.level - offset)
        if _separates(restricted, p1, p2):
            H = restricted
    cand = make_candidate(M.n, p1, p2, H, "direct-sum-projection")
    if not verify_candidate(M, cand).overall:
        raise MatroidError("projected split failed verification")
    return k, cand


# -- invariants and certificates -------------------------------------------


def _fingerprint(n: int, family: Sequence[int], intersection_count: int) -> tuple:
    part = from_bases(n, family) if family else None
    degrees = tuple(sorted(_graph(part).degree(i) for i in range(len(part)))) if part else ()
    return (len(family), degrees, intersection_count)


def split_distinctness_key(split: SplitCandidate) -> tuple:
    """Sound distinguisher: different keys mean inequivalent splits; equal keys decide nothing."""
    w = len(split.intersection)
    a = _fingerprint(split.n, split.part1, w)
    b = _fingerprint(split.n, split.part2, w)
    return tuple(sorted((a, b)))


def indecomposability_certificates(M: Matroid, *, exhaustive: bool | None = None) -> list[Certificate]:
    """Binary matroids have no split; add the degree certificate when a vertex has degree ``dim``.

    With ``exhaustive`` (default for ``n <= 10``) the binary certificate also
    embeds the transcript of a full split search.
    """
    check_guard(M.n)
    G = _graph(M)
    if find_octahedron(G) is not None:
        return []
    rows = binary_representation(M)
    census = neighborhood_census(G)
    evidence = {"gf2_rows": list(rows) if rows is not None else None, "neighborhoods": census}
    if exhaustive is None:
        exhaustive = M.n <= 10
    if exhaustive:
        stats = SearchStats()
        found = search_splits(M, stats=stats)
        evidence["search"] = stats.as_dict()
        if found:
            raise AssertionError("binary matroid admitted a split; octahedron test is inconsistent")
    certs = [Certificate(BINARY_NO_SPLIT, evidence)]
    d = _dimension(M)
    for i in range(len(G)):
        if G.degree(i) == d:
            certs.append(
                Certificate(
                    DEGREE_INDECOMPOSABLE,
                    {
                        "vertex": list(to_tuple(G.vertices[i])),
                        "degree": G.degree(i),
                        "dimension": d,
                        "gf2_rows": evidence["gf2_rows"],
                    },
                )
            )
            break
    return certs


def classify(M: Matroid) -> list[Certificate]:
    """Indecomposability certificates, else a verified split, else a no-good-partition transcript."""
    certs = indecomposability_certificates(M)
    if certs:
        return certs
    stats = SearchStats()
    found = search_splits(M, first=True, stats=stats)
    if found:
        return [split_certificate(M, found[0])]
    return [Certificate(NO_GOOD_PARTITION, {"search": stats.as_dict()})]


def split_certificate(M: Matroid, cand: SplitCandidate) -> Certificate:
    report = verify_candidate(M, cand)
    H = report.hyperplane
    return Certificate(
        SPLIT_VERIFIED,
        {
            "part1": [list(b) for b in cand.part1_bases],
            "part2": [list(b) for b in cand.part2_bases],
            "hyperplane": None if H is None else {"coefficients": list(H.coefficients), "level": H.level},
        },
    )


def verify_certificate(M: Matroid, cert: Certificate) -> bool:
    """Re-check a certificate from its evidence alone."""
    from .zoo import from_gf2_matrix

    ev = cert.evidence
    if cert.kind == SPLIT_VERIFIED:
        H = None
        if ev.get("hyperplane"):
            H = SplitHyperplane(tuple(ev["hyperplane"]["coefficients"]), ev["hyperplane"]["level"])
        return verify_split(M, ev["part1"], ev["part2"], H).overall
    if cert.kind in (BINARY_NO_SPLIT, DEGREE_INDECOMPOSABLE):
        rows = ev.get("gf2_rows")
        if not rows or from_gf2_matrix(rows) != M:
            return False
        if cert.kind == BINARY_NO_SPLIT:
            return True
        G = _graph(M)
        i = G.vertex(ev["vertex"])
        return G.degree(i) == ev["degree"] == _dimension(M) == ev["dimension"]
    if cert.kind == NO_GOOD_PARTITION:
        stats = SearchStats()
        return not search_splits(M, stats=stats) and stats.as_dict() == ev["search"]
    return False
