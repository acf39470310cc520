"""Matroids stored as explicit base families.

Elements are labelled ``1..n``. Internally a subset is an ``int`` bitmask with
bit ``i - 1`` standing for element ``i``; the public functions accept any
iterable of element labels and return frozensets or sorted tuples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import (
    DeskScaleError,
    ElementOutOfRange,
    EmptyFamily,
    ExchangeAxiomViolation,
    MixedCardinality,
    NotCircuitHyperplane,
)

Subset = Union[int, Iterable[int]]

_DEFAULT_MAX_N = 20
GUARD_ENV = "MATROID_SPLITS_MAX_N"


def max_ground_size() -> int:
    """Desk-scale limit on ``n``; override with the ``MATROID_SPLITS_MAX_N`` variable."""
    raw = os.environ.get(GUARD_ENV)
    return int(raw) if raw else _DEFAULT_MAX_N


def check_guard(n: int, what: str = "ground set") -> None:
    limit = max_ground_size()
    if n > limit:
        raise DeskScaleError(f"{what} of size {n} exceeds desk-scale limit {limit}")


# -- bitmask helpers --------------------------------------------------------


def to_mask(elements: Subset) -> int:
    if isinstance(elements, int):
        return elements
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def elements_of(mask: int) -> Iterator[int]:
    """Yield the single-bit masks making up ``mask``."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_order(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort lexicographically by sorted element list."""
    return tuple(sorted(set(masks), key=to_tuple))


# -- the matroid type -------------------------------------------------------


@dataclass(frozen=True)
class Matroid:
    """An immutable matroid on ``{1..n}`` given by its bases.

    ``masks`` holds the bases in canonical order. ``labels[i]`` is the label
    element ``i + 1`` carried before a restriction or relabelling; it does not
    take part in equality.
    """

    n: int
    r: int
    masks: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))

    @property
    def bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(to_tuple(b) for b in self.masks)

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def base_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @cached_property
    def independent_sets(self) -> frozenset[int]:
        """All subsets of bases, as masks."""
        seen: set[int] = set()
        for b in self.masks:
            sub = b
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return frozenset(seen)

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.masks)})"


def exchange_violations(masks: Iterable[int]) -> Iterator[tuple[int, int, int]]:
    """Yield every ``(b1, b2, e)`` (as masks) breaking the basis exchange axiom."""
    fam = canonical_order(masks)
    members = set(fam)
    for b1 in fam:
        for b2 in fam:
            if b1 == b2:
                continue
            out = b1 & ~b2
            into = list(elements_of(b2 & ~b1))
            for e in elements_of(out):
                stripped = b1 ^ e
                if not any((stripped | f) in members for f in into):
                    yield b1, b2, e


def from_bases(n: int, candidate_bases: Iterable[Subset], labels: tuple[int, ...] = ()) -> Matroid:
    """Validate ``candidate_bases`` exhaustively and build the matroid."""
    check_guard(n)
    masks = [to_mask(b) for b in candidate_bases]
    if not masks:
        raise EmptyFamily("a matroid needs at least one base")
    ground = (1 << n) - 1
    for m in masks:
        if m & ~ground or m < 0:
            raise ElementOutOfRange(f"{to_tuple(m)} is not a subset of 1..{n}")
    sizes = {popcount(m) for m in masks}
    if len(sizes) > 1:
        raise MixedCardinality(f"bases have sizes {sorted(sizes)}")
    fam = canonical_order(masks)
    for b1, b2, e in exchange_violations(fam):
        raise ExchangeAxiomViolation(to_tuple(b1), to_tuple(b2), to_tuple(e)[0])
    return Matroid(n, sizes.pop(), fam, labels)


def is_base_family(n: int, family: Iterable[Subset]) -> bool:
    try:
        from_bases(n, family)
    except (EmptyFamily, MixedCardinality, ElementOutOfRange, ExchangeAxiomViolation):
        return False
    return True


def _unchecked(n: int, masks: Iterable[int], labels: tuple[int, ...] = ()) -> Matroid:
    # for constructions whose output is a matroid by theorem (restriction, direct sum)
    fam = canonical_order(masks)
    return Matroid(n, popcount(fam[0]), fam, labels)


# -- rank machinery ---------------------------------------------------------


def is_independent(M: Matroid, X: Subset) -> bool:
    return to_mask(X) in M.independent_sets


def rank_of(M: Matroid, X: Subset) -> int:
    """Greedy rank: grow an independent set one element at a time."""
    x = to_mask(X)
    ind = M.independent_sets
    cur = 0
    for e in elements_of(x):
        if (cur | e) in ind:
            cur |= e
    return popcount(cur)


def restriction(M: Matroid, A: Subset) -> Matroid:
    """``M|A`` relabelled to ``1..|A|`` in increasing order; ``labels`` maps back."""
    a = to_mask(A)
    members = to_tuple(a)
    k = rank_of(M, a)
    pos = {1 << (e - 1): i for i, e in enumerate(members)}
    new = set()
    for b in M.masks:
        inter = b & a
        if popcount(inter) == k:
            new.add(sum(1 << pos[bit] for bit in elements_of(inter)))
    labels = tuple(M.labels[e - 1] for e in members)
    return _unchecked(len(members), new, labels)


def closure(M: Matroid, X: Subset) -> frozenset[int]:
    x = to_mask(X)
    k = rank_of(M, x)
    cl = x
    for e in elements_of(M.ground & ~x):
        if rank_of(M, x | e) == k:
            cl |= e
    return frozenset(to_tuple(cl))


def is_circuit(M: Matroid, X: Subset) -> bool:
    x = to_mask(X)
    if x == 0 or is_independent(M, x):
        return False
    return all(is_independent(M, x ^ e) for e in elements_of(x))


def is_hyperplane(M: Matroid, X: Subset) -> bool:
    x = to_mask(X)
    return rank_of(M, x) == M.r - 1 and to_mask(closure(M, x)) == x


def is_circuit_hyperplane(M: Matroid, X: Subset) -> bool:
    return is_circuit(M, X) and is_hyperplane(M, X)


def relax(M: Matroid, X: Subset) -> Matroid:
    x = to_mask(X)
    if not is_circuit_hyperplane(M, x):
        raise NotCircuitHyperplane(f"{to_tuple(x)} is not a circuit-hyperplane")
    return from_bases(M.n, M.masks + (x,), M.labels)


def fundamental_circuit(M: Matroid, base: int, f: int) -> int:
    """Unique circuit in ``base + f`` for ``f`` outside ``base`` (single-bit masks)."""
    members = M.base_set
    circ = f
    for e in elements_of(base):
        if ((base ^ e) | f) in members:
            circ |= e
    return circ


def connected_components(M: Matroid) -> list[frozenset[int]]:
    """Blocks of the finest direct-sum decomposition, ordered by smallest element.

    Two elements share a block iff some circuit contains both; the fundamental
    circuits of one base already generate that relation.
    """
    parent = list(range(M.n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    b = M.masks[0]
    for f in elements_of(M.ground & ~b):
        circ = fundamental_circuit(M, b, f)
        idx = [bit.bit_length() - 1 for bit in elements_of(circ)]
        for j in idx[1:]:
            parent[find(j)] = find(idx[0])
    blocks: dict[int, int] = {}
    for i in range(M.n):
        blocks[find(i)] = blocks.get(find(i), 0) | (1 << i)
    comps = sorted(blocks.values(), key=lambda m: (m & -m))
    if sum(rank_of(M, c) for c in comps) != M.r:
        raise AssertionError("component ranks do not add up to the matroid rank")
    return [frozenset(to_tuple(c)) for c in comps]


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Bases ``B1 | B2``; element ``e`` of ``M2`` becomes ``e + M1.n``."""
    n = M1.n + M2.n
    check_guard(n)
    shift = M1.n
    masks = [b1 | (b2 << shift) for b1 in M1.masks for b2 in M2.masks]
    return _unchecked(n, masks)


def relabel(M: Matroid, perm: dict[int, int]) -> Matroid:
    """Apply an element bijection ``perm`` (old label -> new label)."""
    masks = [to_mask(perm[e] for e in to_tuple(b)) for b in M.masks]
    return _unchecked(M.n, masks)


def subsets_of_size(ground: int, k: int) -> Iterator[int]:
    bits = list(elements_of(ground))
    for combo in combinations(bits, k):
        yield sum(combo)
