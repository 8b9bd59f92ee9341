from __future__ import annotations

import pytest
from hypothesis import assume, given

from conftest import graphs
from oracles import brute_line_graph, perm_isomorphic
from recongraph.errors import NotConnected, NotLineGraph
from recongraph.graph import Graph, complete_graph, cycle_graph, is_connected, path_graph, star_graph
from recongraph.iso import is_isomorphic
from recongraph.linegraph import krausz_partitions, line_graph_roots


def brute_roots(l: Graph, pool: list[Graph]) -> list[Graph]:
    """Classes H in ``pool`` without isolated vertices and with L(H) isomorphic to ``l``."""
    return [
        h
        for h in pool
        if h.m == l.n and min(h.degrees(), default=1) > 0 and perm_isomorphic(brute_line_graph(h), l)
    ]


def test_examples():
    k3 = line_graph_roots(complete_graph(3))
    assert len(k3) == 2
    assert {(h.n, h.m) for h in k3} == {(3, 3), (4, 3)}
    assert is_isomorphic(k3[1], star_graph(3)) is not None
    [c5] = line_graph_roots(cycle_graph(5))
    assert is_isomorphic(c5, cycle_graph(5)) is not None
    [p4] = line_graph_roots(path_graph(3))
    assert is_isomorphic(p4, path_graph(4)) is not None


def test_errors():
    with pytest.raises(NotLineGraph):
        line_graph_roots(star_graph(3))
    with pytest.raises(NotConnected):
        line_graph_roots(Graph(2))
    with pytest.raises(NotConnected):
        line_graph_roots(Graph(0))


def test_single_vertex_root_is_an_edge():
    [root] = line_graph_roots(Graph(1))
    assert root == complete_graph(2)


def test_agrees_with_exhaustive_root_search(small_catalog, catalog5):
    for l in small_catalog:
        if l.n == 0 or not is_connected(l):
            continue
        expected = brute_roots(l, catalog5)
        if not expected:
            with pytest.raises(NotLineGraph):
                line_graph_roots(l)
            continue
        ours = line_graph_roots(l)
        assert len(ours) == len(expected)
        for h in ours:
            assert sum(perm_isomorphic(h, e) for e in expected) == 1


@given(graphs(min_n=2, max_n=7))
def test_roots_of_line_graphs(h):
    h = h.induced([v for v in range(h.n) if h.degree(v) > 0])
    assume(h.m > 0 and is_connected(h))
    l = brute_line_graph(h)
    roots = line_graph_roots(l)
    assert any(is_isomorphic(r, h) is not None for r in roots)
    for r in roots:
        assert is_isomorphic(brute_line_graph(r), l) is not None
    assert len(roots) == (2 if (l.n, l.m) == (3, 3) else 1)


def test_krausz_partitions_cover_edges_once():
    l = brute_line_graph(complete_graph(4))
    for parts in krausz_partitions(l):
        covered = [frozenset(e) for q in parts for e in ((a, b) for i, a in enumerate(q) for b in q[i + 1:])]
        assert len(covered) == len(set(covered)) == l.m
        assert all(sum(v in q for q in parts) <= 2 for v in range(l.n))
