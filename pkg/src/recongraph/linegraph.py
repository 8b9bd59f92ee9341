"""Recovering a graph from its line graph (Krausz partitions)."""

from __future__ import annotations

from typing import Iterator

from .errors import NotConnected, NotLineGraph, ResourceCap, RootAmbiguityDefect
from .graph import Graph, connected_components
from .iso import is_isomorphic

DEFAULT_PARTITION_CAP = 100_000


def krausz_partitions(l: Graph, cap: int = DEFAULT_PARTITION_CAP) -> Iterator[list[tuple[int, ...]]]:
    """Yield every partition of E(l) into cliques with each vertex in at most two.

    Each partition is produced once: the clique holding the first uncovered
    edge is chosen at every step.
    """
    edges = l.edges()
    bits = l.bitsets()
    covered: set[tuple[int, int]] = set()
    load = [0] * l.n
    cliques: list[tuple[int, ...]] = []
    produced = 0

    def free(a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) not in covered

    def mark(q: tuple[int, ...], on: bool) -> None:
        for i, a in enumerate(q):
            load[a] += 1 if on else -1
            for b in q[i + 1:]:
                e = (min(a, b), max(a, b))
                if on:
                    covered.add(e)
                else:
                    covered.discard(e)

    def extensions(base: list[int], cand: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(sorted(base))
        for i, w in enumerate(cand):
            rest = [x for x in cand[i + 1:] if bits[w] >> x & 1 and free(w, x)]
            yield from extensions(base + [w], rest)

    def recurse(start: int) -> Iterator[list[tuple[int, ...]]]:
        nonlocal produced
        while start < len(edges) and edges[start] in covered:
            start += 1
        if start == len(edges):
            produced += 1
            if produced > cap:
                raise ResourceCap(f"more than {cap} Krausz partitions")
            yield list(cliques)
            return
        u, v = edges[start]
        if load[u] >= 2 or load[v] >= 2:
            return
        common = bits[u] & bits[v]
        cand = [w for w in range(l.n) if common >> w & 1 and load[w] < 2 and free(u, w) and free(v, w)]
        for q in extensions([u, v], cand):
            mark(q, True)
            cliques.append(q)
            yield from recurse(start + 1)
            cliques.pop()
            mark(q, False)

    yield from recurse(0)


def root_from_partition(l: Graph, cliques: list[tuple[int, ...]]) -> Graph:
    """Build the root whose edges are the vertices of ``l``."""
    ends: list[list[int]] = [[] for _ in range(l.n)]
    for i, q in enumerate(cliques):
        for x in q:
            ends[x].append(i)
    nodes = len(cliques)
    root_edges = []
    for x in range(l.n):
        while len(ends[x]) < 2:
            ends[x].append(nodes)
            nodes += 1
        root_edges.append((ends[x][0], ends[x][1]))
    return Graph.from_edges(nodes, root_edges)


def line_graph_roots(l: Graph) -> list[Graph]:
    """Every root of the connected graph ``l`` up to isomorphism.

    Returns a single graph in all cases but the triangle, for which both the
    triangle and the claw are returned (in that order).
    """
    if l.n == 0 or len(connected_components(l)) != 1:
        raise NotConnected("line graph roots need a connected non-empty input")
    roots: list[Graph] = []
    for part in krausz_partitions(l):
        r = root_from_partition(l, part)
        if not any(is_isomorphic(r, s) is not None for s in roots):
            roots.append(r)
    if not roots:
        raise NotLineGraph("no Krausz partition exists")
    if len(roots) == 1:
        return roots
    if l.n == 3 and l.m == 3 and len(roots) == 2:
        return sorted(roots, key=lambda r: r.n)
    raise RootAmbiguityDefect(f"{len(roots)} non-isomorphic roots for a {l.n}-vertex line graph")
