"""Eccentricities, the smallest-shell parameter, twins, and closed forms."""

from __future__ import annotations

import pytest

from antidim.graph import (
    all_pairs_distances,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    star_graph,
)
from antidim.oracle import brute_adim, enumerate_connected_graphs, spectrum
from antidim.structure import (
    antidimensional_lower_bound,
    closed_form_adim,
    eccentricity_profile,
    twin_classes,
)


def test_profile_of_path():
    p = eccentricity_profile(all_pairs_distances(path_graph(5)))
    assert p.center == (2,)
    assert (p.radius, p.diameter) == (2, 4)
    assert p.phi == (1, 1, 2, 1, 1)
    assert p.phi_g == 2


def test_profile_of_complete_graph():
    p = eccentricity_profile(all_pairs_distances(complete_graph(6)))
    assert set(p.eccentricity) == {1}
    assert p.phi_g == 5


def test_profile_of_even_cycle():
    p = eccentricity_profile(all_pairs_distances(cycle_graph(6)))
    assert set(p.eccentricity) == {3}
    assert set(p.phi) == {1}  # the antipode is unique


def test_radius_diameter_inequality_exhaustive():
    for g in enumerate_connected_graphs(5):
        p = eccentricity_profile(all_pairs_distances(g))
        assert p.radius <= p.diameter <= 2 * p.radius


def test_twin_classes_of_bipartite_parts():
    assert twin_classes(complete_bipartite_graph(3, 2)) == [(0, 1, 2), (3, 4)]


def test_twin_classes_edge_cases():
    assert twin_classes(cycle_graph(6)) == []
    assert twin_classes(complete_graph(4)) == [(0, 1, 2, 3)]
    # mixed: star leaves are false twins
    assert twin_classes(star_graph(5)) == [(1, 2, 3, 4)]


def test_lower_bound_on_known_graphs():
    assert antidimensional_lower_bound(complete_bipartite_graph(4, 3)) == 4
    assert antidimensional_lower_bound(cycle_graph(7)) == 2
    # universal vertex forces n-1
    assert antidimensional_lower_bound(star_graph(6)) == 5


def test_lower_bound_never_exceeds_truth_exhaustive():
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            assert antidimensional_lower_bound(g) <= spectrum(g).antidimensional_k


def test_singleton_center_forces_k_at_least_two():
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            p = eccentricity_profile(all_pairs_distances(g))
            if len(p.center) == 1:
                assert spectrum(g).antidimensional_k >= 2


@pytest.mark.parametrize(
    "family, k, expected",
    [
        (("complete", 7), 4, 3),
        (("complete", 7), 7, None),
        (("complete_bipartite", 4, 3), 4, 3),
        (("complete_bipartite", 4, 3), 3, 1),
        (("complete_bipartite", 4, 3), 2, 1),
        (("complete_bipartite", 4, 3), 1, 2),
        (("complete_bipartite", 4, 3), 5, None),
        (("complete_bipartite", 3, 3), 3, 3),
        (("star", 5), 4, 1),
        (("star", 5), 1, 1),
        (("path", 9), 2, 1),
        (("path", 8), 2, None),
        (("path", 9), 3, None),
        (("cycle", 9), 2, 1),
        (("cycle", 8), 2, 2),
        (("cycle", 8), 3, None),
    ],
)
def test_closed_forms(family, k, expected):
    assert closed_form_adim(family, k) == expected


def test_bipartite_closed_form_matches_oracle_exhaustively():
    # every achievable k on every K_{r,t} with r, t <= 5, plus None beyond r
    for r in range(1, 6):
        for t in range(1, r + 1):
            if (r, t) == (1, 1):
                continue
            g = complete_bipartite_graph(r, t)
            for k in range(1, r + 1):
                assert closed_form_adim(g.family, k) == brute_adim(g, k)[0], (r, t, k)
            assert brute_adim(g, r + 1) is None
            assert closed_form_adim(g.family, r + 1) is None


def test_closed_form_rejects_unknown_family():
    with pytest.raises(ValueError, match="no closed form"):
        closed_form_adim(("petersen",), 2)
    with pytest.raises(ValueError):
        closed_form_adim(("complete", 5), 0)


def test_tree_phi_remark_cross_check():
    # in a tree, any vertex with phi(x) = t >= 2 makes {x} a t-antiresolving set
    t = from_edge_list([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    p = eccentricity_profile(all_pairs_distances(t))
    for x in range(t.n):
        if p.phi[x] >= 2:
            assert brute_adim(t, p.phi[x])[0] == 1
