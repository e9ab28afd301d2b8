"""Branch structure of trees and the antidimension bounds it yields.

A branch of a tree at an internal vertex x is the component of T - x hanging
off one neighbor, together with the distance from x into it (its branch
eccentricity).  Counting equal-eccentricity branches gives xi(x) and the tree
parameter xi(T); combined with phi this lower-bounds the largest achievable k
and drives an explicit upper-bound construction for adim_k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DistanceMatrix, Graph, all_pairs_distances
from .partition import antiresolving_k
from .structure import eccentricity_profile

__all__ = [
    "Branch",
    "BranchProfile",
    "TreeUpperBound",
    "is_tree",
    "branch_profile",
    "xi_of_tree",
    "tree_antidimensional_bound",
    "tree_adim_upper_bound",
]


def is_tree(g: Graph) -> bool:
    from .graph import is_connected

    return g.m == g.n - 1 and is_connected(g)


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise ValueError("graph is not a tree")


@dataclass(frozen=True)
class Branch:
    """One branch at a root: the neighbor it starts with, its vertex set
    (excluding the root, so branches at a vertex partition the rest of the
    tree), and the root's eccentricity inside it."""

    neighbor: int
    vertices: tuple[int, ...]
    ecc: int


@dataclass(frozen=True)
class BranchProfile:
    root: int
    branches: tuple[Branch, ...]
    xi: int  # largest family of branches sharing one eccentricity
    l_xi: int  # that shared eccentricity (ties: the smallest such value)


def branch_profile(t: Graph, x: int, dm: DistanceMatrix | None = None) -> BranchProfile:
    """Branches of a tree at an internal vertex, with xi(x) and l_xi(x)."""
    _require_tree(t)
    if t.degree(x) < 2:
        raise ValueError(f"vertex {x} has degree < 2")
    if dm is None:
        dm = all_pairs_distances(t)
    row = dm.rows[x]
    branches = []
    for y in t.adj[x]:
        # component of T - x containing y: walk away from x
        comp = [y]
        prev = {y: x}
        i = 0
        while i < len(comp):
            u = comp[i]
            i += 1
            for w in t.adj[u]:
                if w != prev[u]:
                    prev[w] = u
                    comp.append(w)
        members = tuple(sorted(comp))
        branches.append(Branch(neighbor=y, vertices=members, ecc=max(row[u] for u in members)))
    counts: dict[int, int] = {}
    for b in branches:
        counts[b.ecc] = counts.get(b.ecc, 0) + 1
    xi = max(counts.values())
    l_xi = min(e for e, c in counts.items() if c == xi)
    return BranchProfile(root=x, branches=tuple(branches), xi=xi, l_xi=l_xi)


def _internal_profiles(t: Graph, dm: DistanceMatrix) -> list[BranchProfile]:
    return [branch_profile(t, x, dm) for x in range(t.n) if t.degree(x) >= 2]


def xi_of_tree(t: Graph, dm: DistanceMatrix | None = None) -> int:
    """xi(T): the maximum of xi(x) over internal vertices."""
    _require_tree(t)
    if dm is None:
        dm = all_pairs_distances(t)
    profiles = _internal_profiles(t, dm)
    if not profiles:
        raise ValueError("tree has no internal vertex")
    return max(p.xi for p in profiles)


def tree_antidimensional_bound(t: Graph) -> int:
    """max(phi(T), xi(T)): a lower bound on the largest k admitting a
    k-antiresolving set.  Not always tight."""
    _require_tree(t)
    dm = all_pairs_distances(t)
    phi_g = eccentricity_profile(dm).phi_g
    profiles = _internal_profiles(t, dm)
    xi_t = max((p.xi for p in profiles), default=0)
    return max(phi_g, xi_t)


@dataclass(frozen=True)
class TreeUpperBound:
    """Constructive upper bound on adim_k: the set S, its size, and the exact
    k' >= k for which S is k'-antiresolving."""

    bound: int
    vertex_set: tuple[int, ...]
    witness_k: int


def tree_adim_upper_bound(t: Graph, k: int) -> TreeUpperBound:
    """Upper bound on adim_k(T) from the branch construction.

    S keeps everything except, around each vertex v with xi(v) >= k: the
    vertices of branches strictly shallower than l_xi(v), and the k largest
    equal-depth branches at l_xi(v) (branches at one vertex are disjoint, so
    the maximum-cardinality union of k of them is the k largest; ties broken
    by lowest neighbor index).  The result records the exact k' >= k that S
    antiresolves.
    """
    _require_tree(t)
    if k < 2:
        raise ValueError("k must be >= 2")
    dm = all_pairs_distances(t)
    profiles = [p for p in _internal_profiles(t, dm) if p.xi >= k]
    if not profiles:
        raise ValueError(f"no vertex with ξ(v) >= {k}")
    removed: set[int] = set()
    for p in profiles:
        for b in p.branches:
            if b.ecc < p.l_xi:
                removed.update(b.vertices)
        equal = sorted(
            (b for b in p.branches if b.ecc == p.l_xi),
            key=lambda b: (-len(b.vertices), b.neighbor),
        )
        for b in equal[:k]:
            removed.update(b.vertices)
    s = tuple(v for v in range(t.n) if v not in removed)
    if not s:
        raise ValueError("construction removed every vertex")
    return TreeUpperBound(bound=len(s), vertex_set=s, witness_k=antiresolving_k(dm, s))
