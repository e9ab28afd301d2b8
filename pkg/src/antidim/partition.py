"""Metric representations and the equivalence-class partition a vertex set induces.

Vertex sets cross the public API as sorted tuples of vertex indices; the hot
paths work on integer bitmasks.  Representation vectors use the ascending-index
order of the set, which is canonical here: any fixed order yields the same
partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DistanceMatrix

__all__ = [
    "MetricPartition",
    "representation",
    "partition",
    "antiresolving_k",
    "is_k_antiresolving",
    "to_mask",
    "from_mask",
    "class_masks",
    "min_class_size",
]


def to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class MetricPartition:
    """Equivalence classes of V-S under equal metric representation w.r.t. S."""

    base_set: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def k_value(self) -> int | None:
        """Smallest class cardinality; None when V-S is empty."""
        if not self.classes:
            return None
        return min(len(c) for c in self.classes)


def _check_set(dm: DistanceMatrix, s) -> tuple[int, ...]:
    members = tuple(sorted(set(s)))
    if not members:
        raise ValueError("vertex set must be non-empty")
    if members[0] < 0 or members[-1] >= dm.n:
        raise ValueError("vertex index out of range")
    return members

def representation(dm: DistanceMatrix, v: int, s) -> tuple[int, ...]:
    """Distance vector from ``v`` to the members of ``s`` in ascending index order."""
    members = _check_set(dm, s)
    row = dm.rows[v]
    return tuple(row[u] for u in members)


def class_masks(dm: DistanceMatrix, s_mask: int, cache: bool = True) -> tuple[int, ...]:
    """Bitmasks of the equivalence classes of V-S, in first-vertex order.

    Cached on the matrix by default; pass ``cache=False`` for sweeps over many
    sets (e.g. the brute-force oracle) where the cache would not pay off.
    """
    if cache:
        hit = dm.class_cache.get(s_mask)
        if hit is not None:
            return hit
    rows = dm.rows
    members = from_mask(s_mask)
    groups: dict[tuple[int, ...], int] = {}
    for v in range(dm.n):
        if (s_mask >> v) & 1:
            continue
        row = rows[v]
        key = tuple(row[u] for u in members)
        groups[key] = groups.get(key, 0) | (1 << v)
    result = tuple(groups.values())
    if cache:
        dm.class_cache[s_mask] = result
    return result


def min_class_size(dm: DistanceMatrix, s_mask: int, cache: bool = True) -> int | None:
    """Smallest class size of the partition induced by ``s_mask``; None for s = V."""
    masks = class_masks(dm, s_mask, cache=cache)
    if not masks:
        return None
    return min(m.bit_count() for m in masks)


def partition(dm: DistanceMatrix, s) -> MetricPartition:
    """Partition V-S by exact representation-vector equality.

    Classes are ordered by their representation vector (lexicographically) for
    determinism; ``s`` must be a proper non-empty subset of V.
    """
    members = _check_set(dm, s)
    if len(members) == dm.n:
        raise ValueError("empty complement: s must be a proper subset")
    s_mask = to_mask(members)
    rows = dm.rows
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(dm.n):
        if (s_mask >> v) & 1:
            continue
        row = rows[v]
        groups.setdefault(tuple(row[u] for u in members), []).append(v)
    classes = tuple(tuple(groups[key]) for key in sorted(groups))
    return MetricPartition(base_set=members, classes=classes)


def antiresolving_k(dm: DistanceMatrix, s) -> int:
    """The unique k for which ``s`` is a k-antiresolving set (its min class size)."""
    k = partition(dm, s).k_value
    assert k is not None
    return k


def is_k_antiresolving(dm: DistanceMatrix, s, k: int) -> bool:
    """True iff the min class size is exactly ``k`` (not merely at least ``k``)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return antiresolving_k(dm, s) == k
