"""Eccentricity machinery, twins, and closed-form antidimension values.

The per-vertex quantity phi(v) is the smallest distance-shell size around v;
a singleton {v} is always a phi(v)-antiresolving set, which makes phi(G) a
lower bound on the largest k admitting a k-antiresolving set.  Twin classes
give a second lower bound.  Closed forms cover the generated families
(complete, complete bipartite, star, odd path and cycle) and are keyed on
generator provenance, not structural recognition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DistanceMatrix, Graph

__all__ = [
    "EccentricityProfile",
    "eccentricity_profile",
    "twin_classes",
    "antidimensional_lower_bound",
    "closed_form_adim",
]


@dataclass(frozen=True)
class EccentricityProfile:
    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]
    phi: tuple[int, ...]
    phi_g: int


def eccentricity_profile(dm: DistanceMatrix) -> EccentricityProfile:
    ecc = []
    phi = []
    for v in range(dm.n):
        row = dm.rows[v]
        shells: dict[int, int] = {}
        for u in range(dm.n):
            if u != v:
                d = row[u]
                shells[d] = shells.get(d, 0) + 1
        if shells:
            ecc.append(max(shells))
            phi.append(min(shells.values()))
        else:  # single-vertex graph
            ecc.append(0)
            phi.append(0)
    radius = min(ecc)
    return EccentricityProfile(
        eccentricity=tuple(ecc),
        radius=radius,
        diameter=max(ecc),
        center=tuple(v for v in range(dm.n) if ecc[v] == radius),
        phi=tuple(phi),
        phi_g=max(phi),
    )


def _are_twins(nbr_masks: list[int], u: int, v: int) -> bool:
    # true twins: N[u] = N[v]; false twins: N(u) = N(v).  Both collapse to
    # N(u) - {v} = N(v) - {u}.
    return nbr_masks[u] & ~(1 << v) == nbr_masks[v] & ~(1 << u)


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Maximal classes of pairwise twin vertices (true or false); singletons omitted."""
    masks = [0] * g.n
    for u in range(g.n):
        for v in g.adj[u]:
            masks[u] |= 1 << v
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _are_twins(masks, u, v):
                parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = [tuple(members) for members in groups.values() if len(members) > 1]
    for cls in classes:  # the relation is an equivalence; keep it honest
        assert all(_are_twins(masks, a, b) for a in cls for b in cls if a < b)
    return sorted(classes)


def antidimensional_lower_bound(g: Graph) -> int:
    """Lower bound on the largest k admitting a k-antiresolving set.

    Combines the smallest-shell bound phi(G) with the largest twin class
    (removing everything but a twin class leaves one indistinguishable class).
    The twin contribution caps at n-1: an antiresolving set needs a non-empty
    complement, and any n-1 twins remain one class relative to the last one.
    """
    from .graph import all_pairs_distances

    profile = eccentricity_profile(all_pairs_distances(g))
    twins = twin_classes(g)
    largest_twin = max((len(c) for c in twins), default=1)
    return max(profile.phi_g, min(largest_twin, g.n - 1)) if g.n > 1 else 0


def closed_form_adim(family: tuple, k: int) -> int | None:
    """Exact adim_k for a generated family instance, or None outside the
    formula's k-range.

    ``family`` is the provenance tuple a generator stamped on its graph, e.g.
    ``("cycle", 8)``.  Stars are handled as complete bipartite K_{n-1,1}.

    For K_{r,t} (r >= t) every achievable k in [1, r] has a closed form.  A
    set with j part-U and i part-V vertices splits the rest into classes of
    sizes r-j and t-i, so its min class is the smaller of the two; minimising
    j+i subject to that minimum being exactly k gives t-k for k < t, a
    singleton for k = t < r, one whole part (r vertices) for k = t = r, and
    r+t-k for k > t.  Cross-checked exhaustively against brute force.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    name, *args = family
    if name == "complete":
        (n,) = args
        return n - k if 1 <= k <= n - 1 else None
    if name in ("complete_bipartite", "star"):
        if name == "star":
            r, t = args[0] - 1, 1
        else:
            r, t = args
        if r < t:
            r, t = t, r
        if not 1 <= k <= r:
            return None
        if k < t:
            return t - k
        if k == t:
            return 1 if r > t else r
        return r + t - k
    if name == "path":
        (n,) = args
        if k == 2 and n % 2 == 1 and n >= 3:
            return 1
        return None
    if name == "cycle":
        (n,) = args
        if k == 2:
            return 1 if n % 2 == 1 else 2
        return None
    raise ValueError(f"no closed form for family {name!r}")
