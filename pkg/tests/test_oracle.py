"""Brute-force oracle: exact antidimension values and graph enumeration."""

from __future__ import annotations

import itertools

import pytest

from antidim.graph import (
    all_pairs_distances,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
    star_graph,
)
from antidim.oracle import (
    ORACLE_MAX_N,
    brute_adim,
    enumerate_connected_graphs,
    spectrum,
)
from antidim.partition import antiresolving_k


def test_brute_adim_on_known_families():
    assert brute_adim(complete_graph(6), 2) == (4, (0, 1, 2, 3))
    assert brute_adim(cycle_graph(9), 2)[0] == 1
    assert brute_adim(cycle_graph(8), 2)[0] == 2
    assert brute_adim(path_graph(7), 2)[0] == 1


def test_brute_adim_absent_cases():
    assert brute_adim(path_graph(5), 3) is None  # paths admit no k >= 3
    assert brute_adim(cycle_graph(6), 3) is None


def test_brute_adim_returns_lexicographically_least_basis():
    # C_7: every singleton is 2-antiresolving, so the basis must be {0}
    assert brute_adim(cycle_graph(7), 2) == (1, (0,))


def test_brute_adim_witness_reverifies():
    g = star_graph(6)
    for k in range(1, g.max_degree + 1):
        hit = brute_adim(g, k)
        if hit is not None:
            size, basis = hit
            assert len(basis) == size
            assert antiresolving_k(all_pairs_distances(g), basis) == k


def test_brute_adim_guards():
    with pytest.raises(ValueError, match="size limit"):
        brute_adim(complete_graph(ORACLE_MAX_N + 1), 1)
    with pytest.raises(ValueError):
        brute_adim(path_graph(3), 0)


def test_spectrum_matches_per_k_brute_force():
    for g in (path_graph(6), cycle_graph(6), star_graph(5), complete_graph(5)):
        spec = spectrum(g)
        for k in range(1, g.n + 1):
            hit = brute_adim(g, k)
            if hit is None:
                assert k not in spec.per_k
            else:
                assert spec.per_k[k] == hit
        assert spec.antidimensional_k <= g.max_degree


def test_spectrum_star_ends_at_max_degree():
    spec = spectrum(star_graph(5))
    assert spec.antidimensional_k == 4
    assert spec.per_k[4] == (1, (0,))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_graph_counts(n, count):
    """Labeled connected graph counts match the known sequence."""
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == count
    assert all(is_connected(g) for g in graphs)


def test_enumeration_is_duplicate_free():
    seen = set()
    for g in enumerate_connected_graphs(4):
        key = tuple(g.adj)
        assert key not in seen
        seen.add(key)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(9))
