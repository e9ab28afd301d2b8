"""True-biased closure search for k-antiresolving sets and bases.

The closure operator repeatedly absorbs every equivalence class smaller than k
into the candidate set until it reaches a fixed point (possibly all of V).
Level 1 of the search closes every singleton; each further level joins all
incomparable pairs of the previous level through the closure.  A positive
answer is always correct; a negative answer carries a saturation certificate
(every explored closure equals V); anything else is reported unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import DistanceMatrix, Graph, all_pairs_distances
from .partition import class_masks, from_mask, to_mask

__all__ = [
    "Verdict",
    "SearchOutcome",
    "BasisOutcome",
    "closure_f",
    "find_antiresolving_set",
    "find_antiresolving_basis",
    "AdimBound",
    "adim_upper_bound",
    "DEFAULT_FRONTIER_CAP",
]

# Frontier sizes are worst-case double exponential in the level count; past
# this cap the verdict degrades to UNKNOWN instead of exhausting memory.
DEFAULT_FRONTIER_CAP = 2_000_000


class Verdict(enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    witness: tuple[int, ...] | None
    witness_k: int | None
    frontier_sizes: tuple[int, ...]
    capped: bool = False

    @property
    def found(self) -> bool:
        return self.verdict is Verdict.FOUND


@dataclass(frozen=True)
class BasisOutcome(SearchOutcome):
    min_frontier_card: int | None = None


def _closure_mask(dm: DistanceMatrix, s_mask: int, k: int, full: int) -> int:
    while s_mask != full:
        absorb = 0
        for cm in class_masks(dm, s_mask):
            if cm.bit_count() < k:
                absorb |= cm
        if not absorb:
            return s_mask
        s_mask |= absorb
    return full


def closure_f(dm: DistanceMatrix, s, k: int) -> tuple[int, ...]:
    """Fixed point of the small-class absorption operator, as a sorted tuple.

    Returns all of V when the candidate saturates (a dead end for the search).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    members = tuple(sorted(set(s)))
    if not members:
        raise ValueError("vertex set must be non-empty")
    full = (1 << dm.n) - 1
    return from_mask(_closure_mask(dm, to_mask(members), k, full))


def _k_of(dm: DistanceMatrix, s_mask: int) -> int:
    return min(m.bit_count() for m in class_masks(dm, s_mask))


def _prepare(g: Graph, k: int, m: int, dm: DistanceMatrix | None) -> DistanceMatrix:
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    return dm if dm is not None else all_pairs_distances(g)


def _level_one(dm: DistanceMatrix, k: int, full: int) -> list[int]:
    frontier: list[int] = []
    seen: set[int] = set()
    for v in range(dm.n):
        s = _closure_mask(dm, 1 << v, k, full)
        if s not in seen:
            seen.add(s)
            frontier.append(s)
    return frontier


def _next_level(
    dm: DistanceMatrix, frontier: list[int], k: int, full: int, cap: int
) -> list[int] | None:
    """Join all incomparable pairs through the closure; None when the cap trips."""
    out: list[int] = []
    seen: set[int] = set()
    for i, si in enumerate(frontier):
        for sj in frontier[i + 1 :]:
            meet = si & sj
            if meet == si or meet == sj:
                continue
            s = _closure_mask(dm, si | sj, k, full)
            if s not in seen:
                seen.add(s)
                out.append(s)
                if len(out) > cap:
                    return None
    return out


def find_antiresolving_set(
    g: Graph,
    k: int,
    m: int,
    *,
    max_frontier: int = DEFAULT_FRONTIER_CAP,
    dm: DistanceMatrix | None = None,
) -> SearchOutcome:
    """Search for any k-antiresolving set, exploring m closure-join levels."""
    dm = _prepare(g, k, m, dm)
    full = (1 << dm.n) - 1
    frontier = _level_one(dm, k, full)
    sizes = [len(frontier)]
    for s in frontier:
        if s != full and _k_of(dm, s) == k:
            return SearchOutcome(Verdict.FOUND, from_mask(s), k, tuple(sizes))
    for _ in range(2, m + 1):
        nxt = _next_level(dm, frontier, k, full, max_frontier)
        if nxt is None:
            return SearchOutcome(Verdict.UNKNOWN, None, None, tuple(sizes), capped=True)
        if not nxt:
            break  # all pairs comparable: the closure space is exhausted
        sizes.append(len(nxt))
        for s in nxt:
            if s != full and _k_of(dm, s) == k:
                return SearchOutcome(Verdict.FOUND, from_mask(s), k, tuple(sizes))
        frontier = nxt
    if all(s == full for s in frontier):
        return SearchOutcome(Verdict.ABSENT, None, None, tuple(sizes))
    return SearchOutcome(Verdict.UNKNOWN, None, None, tuple(sizes))


def find_antiresolving_basis(
    g: Graph,
    k: int,
    m: int,
    *,
    max_frontier: int = DEFAULT_FRONTIER_CAP,
    dm: DistanceMatrix | None = None,
) -> BasisOutcome:
    """Search for a k-antiresolving basis (minimum-cardinality set).

    FOUND requires a minimality certificate: the witness is no larger than the
    smallest closure in the current level, scanning every level explored so
    far.  The smallest level-1 closure never exceeds the true antidimension
    (a k-antiresolving basis is a fixed point of the absorption operator, so
    its singletons close inside it), which anchors the certificate.
    """
    dm = _prepare(g, k, m, dm)
    full = (1 << dm.n) - 1
    levels: list[list[int]] = [_level_one(dm, k, full)]
    sizes = [len(levels[0])]
    min_card = min(s.bit_count() for s in levels[0])
    # Once any k-antiresolving closure has been seen, a terminal saturation
    # certificate cannot be trusted as an impossibility proof; a too-large
    # witness degrades ABSENT to UNKNOWN instead.
    seen_k_set = False

    def scan() -> BasisOutcome | None:
        nonlocal seen_k_set
        best: int | None = None
        for level in levels:
            for s in level:
                if s != full and _k_of(dm, s) == k:
                    seen_k_set = True
                    if s.bit_count() <= min_card and (best is None or s.bit_count() < best.bit_count()):
                        best = s
        if best is None:
            return None
        return BasisOutcome(
            Verdict.FOUND, from_mask(best), k, tuple(sizes), min_frontier_card=min_card
        )

    hit = scan()
    if hit is not None:
        return hit
    for _ in range(2, m + 1):
        nxt = _next_level(dm, levels[-1], k, full, max_frontier)
        if nxt is None:
            return BasisOutcome(
                Verdict.UNKNOWN, None, None, tuple(sizes), capped=True, min_frontier_card=min_card
            )
        if not nxt:
            break
        levels.append(nxt)
        sizes.append(len(nxt))
        min_card = min(s.bit_count() for s in nxt)
        hit = scan()
        if hit is not None:
            return hit
    if not seen_k_set and all(s == full for s in levels[-1]):
        return BasisOutcome(Verdict.ABSENT, None, None, tuple(sizes), min_frontier_card=min_card)
    return BasisOutcome(Verdict.UNKNOWN, None, None, tuple(sizes), min_frontier_card=min_card)


@dataclass(frozen=True)
class AdimBound:
    """Upper bound on the k-metric antidimension extracted from the search."""

    value: int
    certified: bool  # True: exact (basis search); False: upper bound only
    witness: tuple[int, ...]


def adim_upper_bound(
    g: Graph,
    k: int,
    m: int,
    *,
    max_frontier: int = DEFAULT_FRONTIER_CAP,
    dm: DistanceMatrix | None = None,
) -> AdimBound | None:
    """Exact adim_k when the basis search succeeds, else a witnessed upper bound."""
    dm = _prepare(g, k, m, dm)
    basis = find_antiresolving_basis(g, k, m, max_frontier=max_frontier, dm=dm)
    if basis.found:
        assert basis.witness is not None
        return AdimBound(len(basis.witness), True, basis.witness)
    outcome = find_antiresolving_set(g, k, m, max_frontier=max_frontier, dm=dm)
    if outcome.found:
        assert outcome.witness is not None
        return AdimBound(len(outcome.witness), False, outcome.witness)
    return None
