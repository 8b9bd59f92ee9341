"""Recovering G from independent-set reconfiguration graphs."""

from __future__ import annotations

from functools import reduce

from ..errors import EmptyInput, InvalidComponent, NotConnected, UnsupportedCase
from ..graph import Graph, complement, complete_join, connected_components, cycle_graph, empty_graph
from ..iso import is_isomorphic
from ..linegraph import line_graph_roots
from ..reconfig import Kind, build_token
from .layering import find_layering


def reconstruct_tar0(r: Graph) -> Graph:
    """Recover G from its TAR graph with no minimum token count.

    A maximum-degree vertex I has one neighbour per vertex of G; two of those
    are adjacent in G iff they share no neighbour other than I.
    """
    if r.n == 0:
        raise EmptyInput("TAR graph has no vertices")
    if len(connected_components(r)) != 1:
        raise NotConnected("TAR graph with k=0 is always connected")
    bits = r.bitsets()
    hub = max(range(r.n), key=lambda v: (r.degree(v), -v))
    around = list(r.adj[hub])
    skip = ~(1 << hub)
    edges = [
        (i, j)
        for i in range(len(around))
        for j in range(i + 1, len(around))
        if bits[around[i]] & bits[around[j]] & skip == 0
    ]
    return Graph.from_edges(len(around), edges)


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(a) == 2 for a in g.adj)


def tar1_factor(component: Graph, self_check: bool = False) -> Graph:
    """The join factor of G whose TAR graph (k=1) is this connected component."""
    if component.n == 1:
        factor = Graph(1)
    elif _is_cycle(component) and component.n % 2 == 0:
        half = component.n // 2
        if half < 4:
            raise InvalidComponent(f"cycle of length {component.n} is not a TAR graph")
        factor = complement(cycle_graph(half))
    else:
        layering = find_layering(component)
        singles = layering.layers[0]
        pairs = layering.layers[1] if len(layering.layers) > 1 else ()
        bits = component.bitsets()
        upper = 0
        for v in pairs:
            upper |= 1 << v
        edges = [
            (i, j)
            for i in range(len(singles))
            for j in range(i + 1, len(singles))
            if bits[singles[i]] & bits[singles[j]] & upper == 0
        ]
        factor = Graph.from_edges(len(singles), edges)
    if self_check and is_isomorphic(build_token(factor, 1, Kind.TAR).graph, component) is None:
        raise InvalidComponent("rebuilt TAR graph of the factor does not match the component")
    return factor


def reconstruct_tar1(r: Graph, self_check: bool = False) -> Graph:
    """Recover G from its TAR graph on independent sets of size at least one.

    Components correspond to complete-join factors of G and are solved one by
    one.
    """
    factors = [tar1_factor(comp, self_check) for comp, _ in connected_components(r)]
    return reduce(complete_join, factors, empty_graph(0))


def reconstruct_tj2(r: Graph) -> list[Graph]:
    """Graphs whose 2-token jumping graph is ``r``: the complements of its line-graph roots.

    Two graphs are returned only when ``r`` is a triangle.
    """
    if r.n == 0 or len(connected_components(r)) != 1:
        raise NotConnected("TJ reconstruction needs a connected graph")
    return [complement(root) for root in line_graph_roots(r)]


def reconstruct_token_trivial(r: Graph, rule: Kind | str, k: int) -> Graph:
    """Dispatch for the cases where the reconfiguration graph pins G down."""
    rule = Kind(rule)
    if rule is Kind.TS and k == 1:
        return r
    if rule is Kind.TAR and k == 0:
        return reconstruct_tar0(r)
    if rule is Kind.TAR and k == 1:
        return reconstruct_tar1(r)
    raise UnsupportedCase(f"G is not determined by its {rule.value} graph with k={k}")
