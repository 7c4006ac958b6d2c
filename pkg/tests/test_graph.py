"""Graph container, traversal, and connectivity against subset oracles."""
from __future__ import annotations

import random

import pytest

from starcut.families import complete, complete_bipartite, cycle, path_graph, petersen
from starcut.graph import (
    Graph,
    global_min_cut,
    induced_subgraph,
    internally_disjoint_paths,
    local_connectivity,
    min_vertex_cut,
    vertex_connectivity,
)

from _oracles import brute_vertex_connectivity


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 2)])
    assert g.n == 4
    assert g.m == 3  # duplicate edge collapses
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degree(1) == 2
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.adj_mask(0) == 0b0010


def test_vertex_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, []).degree(5)


def test_from_masks_roundtrip():
    g = cycle(5)
    h = Graph.from_masks([g.adj_mask(v) for v in range(5)])
    assert h == g
    with pytest.raises(ValueError):
        Graph.from_masks([0b010, 0b000])  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_masks([0b001, 0b000])  # self-loop


def test_joint_neighborhood():
    g = path_graph(5)
    assert g.joint_neighborhood([1, 3]) == frozenset({0, 2, 4})
    assert g.joint_neighborhood([0]) == frozenset({1})
    with pytest.raises(ValueError):
        g.joint_neighborhood([])


def test_components_and_connectivity_predicates():
    g = Graph(5, [(0, 1), (2, 3)])
    comps = g.components()
    assert sorted(sorted(c) for c in comps) == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    assert g.is_connected(within=[0, 1])
    assert not g.is_connected(within=[1, 2])
    assert cycle(6).is_connected()
    assert not g.is_connected(within=[])


def test_distance_eccentricity_diameter():
    p = path_graph(6)
    assert p.distance(0, 5) == 5
    assert p.distance(2, 2) == 0
    assert p.eccentricity(0) == 5
    assert p.eccentricity(2) == 3
    assert p.diameter() == 5
    assert cycle(8).diameter() == 4
    two = Graph(2, [])
    assert two.distance(0, 1) == float("inf")
    assert two.diameter() == float("inf")


def test_without_edge():
    g = cycle(4)
    h = g.without_edge(0, 1)
    assert h.m == 3 and not h.has_edge(0, 1)
    assert g.m == 4  # original untouched


def test_is_complete():
    assert complete(4).is_complete()
    assert not cycle(4).is_complete()
    assert Graph(1, []).is_complete()


def test_induced_subgraph_relabels():
    g = petersen()
    h, order = induced_subgraph(g, [5, 0, 4])
    assert order == [0, 4, 5]
    assert h.n == 3
    assert sorted(h.edges()) == [(0, 1), (0, 2)]  # 0-4, 0-5 survive
    with pytest.raises(ValueError):
        induced_subgraph(g, [0, 99])


def test_local_connectivity_known_values():
    g = cycle(6)
    assert local_connectivity(g, 0, 3) == 2
    k = complete(5)
    assert local_connectivity(k, 0, 4) == 4
    b = complete_bipartite(2, 3)
    assert local_connectivity(b, 0, 1) == 3  # same side, through the other
    assert local_connectivity(b, 0, 2) == 2  # adjacent: the edge plus one path


def test_internally_disjoint_paths_are_disjoint_and_real():
    g = petersen()
    paths = internally_disjoint_paths(g, 0, 7)
    assert len(paths) == 3
    seen: set[int] = set()
    for p in paths:
        assert p.is_path_in(g)
        assert p.vertices[0] == 0 and p.vertices[-1] == 7
        inner = set(p.interior())
        assert not (inner & seen)
        seen |= inner


def test_min_vertex_cut_separates():
    g = cycle(6)
    cut = min_vertex_cut(g, 0, 3)
    assert len(cut) == 2
    assert not g.is_connected(within=[v for v in range(6) if v not in cut])
    with pytest.raises(ValueError):
        min_vertex_cut(g, 0, 1)  # adjacent pair has no vertex cut


def test_vertex_connectivity_known_values():
    assert vertex_connectivity(path_graph(5)) == 1
    assert vertex_connectivity(cycle(9)) == 2
    assert vertex_connectivity(complete(6)) == 5
    assert vertex_connectivity(complete_bipartite(3, 4)) == 3
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(Graph(4, [(0, 1), (1, 2), (2, 3)])) == 1
    assert vertex_connectivity(Graph(3, [(0, 1)])) == 0


def test_global_min_cut_is_minimum_and_separating():
    for g in (cycle(7), petersen(), complete_bipartite(2, 4)):
        cut = global_min_cut(g)
        assert len(cut) == vertex_connectivity(g)
        rest = [v for v in range(g.n) if v not in cut]
        assert not g.is_connected(within=rest)


def test_connectivity_matches_oracle_on_random_graphs():
    rng = random.Random(20240817)
    for _ in range(60):
        n = rng.randint(2, 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice((0.3, 0.5, 0.8))
        ]
        g = Graph(n, edges)
        assert vertex_connectivity(g) == brute_vertex_connectivity(g)


def test_connectivity_matches_oracle_on_all_n5(corpus):
    for g in corpus(5):
        assert vertex_connectivity(g) == brute_vertex_connectivity(g)
