"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ResourceCap

DEFAULT_SET_CAP = 10**7


class Graph:
    """Simple undirected graph stored as sorted neighbour tuples.

    Instances are hashable and compare by value, so two graphs are equal
    exactly when they have the same labelled edge set.
    """

    __slots__ = ("n", "adj", "_hash", "_bits")

    def __init__(self, n: int, adj: Sequence[Sequence[int]] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if adj is None:
            adj = [()] * n
        if len(adj) != n:
            raise ValueError(f"expected {n} neighbour lists, got {len(adj)}")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self._hash = None
        self._bits = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    @classmethod
    def from_edge_array(cls, n: int, edges: np.ndarray) -> Graph:
        """Vectorised constructor for large graphs; ``edges`` is an (m, 2) array."""
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(edges) == 0:
            return cls(n)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        keep = np.ones(len(src), dtype=bool)
        keep[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
        src, dst = src[keep], dst[keep]
        if np.any(src == dst):
            raise ValueError("loop in edge array")
        bounds = np.searchsorted(src, np.arange(n + 1))
        flat = dst.tolist()
        b = bounds.tolist()
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(tuple(flat[b[i]:b[i + 1]]) for i in range(n))
        g._hash = None
        g._bits = None
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def bitsets(self) -> list[int]:
        """Neighbourhoods as Python int bitmasks (cached)."""
        if self._bits is None:
            bits = []
            for a in self.adj:
                b = 0
                for v in a:
                    b |= 1 << v
                bits.append(b)
            self._bits = bits
        return self._bits

    def is_valid(self) -> bool:
        for u, a in enumerate(self.adj):
            if any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
                return False
            for v in a:
                if v == u or not 0 <= v < self.n or not self.has_edge(v, u):
                    return False
        return True

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new_adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, a in enumerate(self.adj):
            new_adj[perm[u]] = sorted(perm[v] for v in a)
        return Graph(self.n, new_adj)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            [sorted(index[w] for w in self.adj[v] if w in index) for v in vertices],
        )

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, self.edges() + list(edges))

    def add_vertex(self, neighbours: Iterable[int]) -> Graph:
        return Graph.from_edges(self.n + 1, self.edges() + [(self.n, v) for v in neighbours])


# -- named graphs ----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [[v for v in range(n) if v != u] for u in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.adj) + [tuple(v + shift for v in a) for a in h.adj])


# -- structural operations -------------------------------------------------

def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(n, [[v for v in range(n) if v != u and not g.has_edge(u, v)] for u in range(n)])


def complete_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` (in that order) plus every cross edge."""
    ng, nh = g.n, h.n
    adj = [tuple(a) + tuple(range(ng, ng + nh)) for a in g.adj]
    adj += [tuple(range(ng)) + tuple(v + ng for v in a) for a in h.adj]
    return Graph(ng + nh, adj)


def connected_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Components in order of their smallest vertex, each with its back-map.

    ``back[i]`` is the original index of vertex ``i`` of the component.
    """
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        out.append((g.induced(comp), comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def independent_sets(g: Graph, min_size: int = 0, cap: int = DEFAULT_SET_CAP) -> list[tuple[int, ...]]:
    """All independent sets with at least ``min_size`` vertices.

    Sets are sorted tuples, ordered by size and then lexicographically.
    """
    bits = g.bitsets()
    found: list[tuple[int, ...]] = []

    def extend(current: list[int], allowed: int, start: int) -> None:
        if len(current) >= min_size:
            found.append(tuple(current))
            if len(found) > cap:
                raise ResourceCap(f"more than {cap} independent sets")
        for v in range(start, g.n):
            if allowed >> v & 1:
                current.append(v)
                extend(current, allowed & ~bits[v], v + 1)
                current.pop()

    extend([], (1 << g.n) - 1, 0)
    found.sort(key=lambda s: (len(s), s))
    return found


def independence_number(g: Graph) -> int:
    best = 0
    bits = g.bitsets()

    def grow(size: int, allowed: int) -> None:
        nonlocal best
        if size + bin(allowed).count("1") <= best:
            return
        if not allowed:
            best = max(best, size)
            return
        v = allowed.bit_length() - 1
        grow(size + 1, allowed & ~bits[v] & ~(1 << v))
        grow(size, allowed & ~(1 << v))

    grow(0, (1 << g.n) - 1)
    return best


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph and the edge each of its vertices stands for."""
    edges = g.edges()
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        by_vertex[u].append(i)
        by_vertex[v].append(i)
    pairs = set()
    for inc in by_vertex:
        pairs.update(combinations(inc, 2))
    return Graph.from_edges(len(edges), pairs), edges
