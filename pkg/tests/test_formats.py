"""graph6 and edge-list round trips, golden strings, malformed input."""
from __future__ import annotations

import random

import pytest

from starcut.families import complete, cycle, path_graph, petersen
from starcut.formats import from_graph6, read_edge_list, read_graph6_lines, to_graph6
from starcut.graph import Graph


def test_golden_strings():
    assert to_graph6(complete(4)) == "C~"
    assert to_graph6(cycle(5)) == "Dhc"  # 0-1-2-3-4-0 in this labeling
    assert to_graph6(Graph(1, [])) == "@"
    assert to_graph6(Graph(2, [(0, 1)])) == "A_"
    assert from_graph6("C~") == complete(4)
    assert from_graph6("G~~~~{") == complete(8)


def test_header_roundtrip():
    g = petersen()
    with_header = to_graph6(g, header=True)
    assert with_header.startswith(">>graph6<<")
    assert from_graph6(with_header) == g
    with pytest.raises(ValueError):
        from_graph6(">>sparse6<<:Cdv")


def test_roundtrip_over_corpus(corpus):
    for n in range(2, 7):
        for g in corpus(n):
            assert from_graph6(to_graph6(g)) == g


def test_roundtrip_random_including_disconnected():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 20)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.25
        ]
        g = Graph(n, edges)
        assert from_graph6(to_graph6(g)) == g


def test_large_order_size_prefix():
    g = Graph(70, [(0, 69), (1, 2)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g


def test_malformed_graph6():
    for bad in ["", "   ", "C~~", "C", "Cx\x19", "C~ extra"]:
        with pytest.raises(ValueError):
            from_graph6(bad)
    # nonzero padding bits
    with pytest.raises(ValueError):
        from_graph6("A" + chr(63 + 1))


def test_read_graph6_lines_skips_blanks():
    text = "C~\n\nDhc\n"
    graphs = read_graph6_lines(text)
    assert [g.n for g in graphs] == [4, 5]


def test_edge_list_parses_comments_and_validates():
    text = "# triangle plus pendant\n4 4\n0 1\n1 2 # inner\n2 0\n2 3\n"
    g = read_edge_list(text)
    assert g.n == 4 and g.m == 4
    assert g.has_edge(2, 3)
    with pytest.raises(ValueError):
        read_edge_list("")
    with pytest.raises(ValueError):
        read_edge_list("2\n0 1\n")
    with pytest.raises(ValueError):
        read_edge_list("2 1\n0 1\n0 1\n")  # duplicate edge
    with pytest.raises(ValueError):
        read_edge_list("2 2\n0 1\n")  # count mismatch
    with pytest.raises(ValueError):
        read_edge_list("2 1\n0 2\n")  # vertex out of range
