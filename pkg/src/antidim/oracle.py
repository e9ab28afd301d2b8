"""Brute-force ground truth on small graphs.

Exact k-metric antidimension by exhaustive subset enumeration, the full
antidimensional spectrum, and a labelled connected-graph enumerator used by
the property tests.  Size limits are hard errors: the oracle never returns an
approximate answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, all_pairs_distances
from .partition import min_class_size, to_mask

__all__ = [
    "ORACLE_MAX_N",
    "AntidimSpectrum",
    "brute_adim",
    "spectrum",
    "enumerate_connected_graphs",
]

ORACLE_MAX_N = 20


def _guard(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise ValueError(f"oracle size limit: n={g.n} exceeds {max_n}")


def brute_adim(g: Graph, k: int, max_n: int = ORACLE_MAX_N) -> tuple[int, tuple[int, ...]] | None:
    """Exact adim_k with a canonical basis, or None when no k-antiresolving set exists.

    Subsets are enumerated in cardinality-then-lexicographic order, so the
    returned basis is the lexicographically least one of minimum size.
    """
    _guard(g, max_n)
    if k < 1:
        raise ValueError("k must be >= 1")
    dm = all_pairs_distances(g)
    for size in range(1, g.n):
        for s in combinations(range(g.n), size):
            if min_class_size(dm, to_mask(s), cache=False) == k:
                return size, s
    return None


@dataclass(frozen=True)
class AntidimSpectrum:
    """Per-k antidimension table: k -> (adim_k, canonical basis)."""

    per_k: dict[int, tuple[int, tuple[int, ...]]]

    @property
    def antidimensional_k(self) -> int:
        return max(self.per_k)


def spectrum(g: Graph, max_n: int = ORACLE_MAX_N) -> AntidimSpectrum:
    """Complete adim_k table over every k that admits a k-antiresolving set.

    One pass over all proper subsets in cardinality order; the largest
    achievable k is capped by the maximum degree, which bounds the scan.
    """
    _guard(g, max_n)
    dm = all_pairs_distances(g)
    per_k: dict[int, tuple[int, tuple[int, ...]]] = {}
    delta = g.max_degree
    for size in range(1, g.n):
        if all(kk in per_k for kk in range(1, delta + 1)):
            break
        for s in combinations(range(g.n), size):
            kv = min_class_size(dm, to_mask(s), cache=False)
            if kv not in per_k:
                per_k[kv] = (size, s)
    return AntidimSpectrum(per_k=per_k)


def enumerate_connected_graphs(n: int):
    """Yield every labelled connected simple graph on n vertices exactly once.

    Deterministic order: ascending edge-set bitmask over the pairs
    (0,1),(0,2),...,(n-2,n-1).  Bounded at n <= 8 (labelled enumeration).
    """
    if n < 1 or n > 8:
        raise ValueError("enumerator supports 1 <= n <= 8")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        # quick connectivity reject via adjacency bitmask flood fill
        nbr = [0] * n
        for u, v in edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= nbr[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~reach
            reach |= nxt
        if reach == (1 << n) - 1:
            yield Graph(n=n, adj=tuple(
                tuple(v for v in range(n) if (nbr[u] >> v) & 1) for u in range(n)
            ))
