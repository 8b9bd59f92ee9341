"""Slow, obviously-correct reference implementations used by the tests.

Nothing here calls into the library beyond the ``Graph`` value type.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations, permutations, product

from recongraph.graph import Graph


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def perm_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = edge_set(h)
    edges = g.edges()
    return any(all(frozenset((p[u], p[v])) in target for u, v in edges) for p in permutations(range(g.n)))


def perm_subgraph(small: Graph, big: Graph) -> bool:
    """Is ``small`` isomorphic to a (not necessarily induced) subgraph of ``big``?"""
    target = edge_set(big)
    return any(
        all(frozenset((p[u], p[v])) in target for u, v in small.edges())
        for p in permutations(range(big.n), small.n)
    )


def brute_colourings(g: Graph, k: int) -> list[tuple[int, ...]]:
    edges = g.edges()
    return [c for c in product(range(1, k + 1), repeat=g.n) if all(c[u] != c[v] for u, v in edges)]


def chromatic_polynomial(n: int, edges: frozenset[frozenset[int]], k: int) -> int:
    """P(G, k) by deletion-contraction on a vertex count and a set of 2-sets."""
    return _dc(n, edges, k)


@lru_cache(maxsize=None)
def _dc(n: int, edges: frozenset[frozenset[int]], k: int) -> int:
    if not edges:
        return k**n
    e = min(edges, key=sorted)
    u, v = sorted(e)
    deleted = edges - {e}
    # contract v into u, then drop loops and merge parallels
    contracted = frozenset(
        frozenset(u if x == v else x for x in f) for f in deleted
    )
    contracted = frozenset(f for f in contracted if len(f) == 2)
    return _dc(n, deleted, k) - _dc(n - 1, contracted, k)


def poly_chromatic_number(g: Graph) -> int:
    es = frozenset(edge_set(g))
    k = 0
    while chromatic_polynomial(g.n, es, k) == 0:
        k += 1
    return k


def brute_single_edges(g: Graph, k: int) -> set[frozenset[tuple[int, ...]]]:
    cols = brute_colourings(g, k)
    return {
        frozenset((a, b))
        for a, b in combinations(cols, 2)
        if sum(x != y for x, y in zip(a, b)) == 1
    }


def brute_kempe_image(g: Graph, c: tuple[int, ...], v: int, j: int) -> tuple[int, ...]:
    a = c[v]
    if a == j:
        return c
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen and c[y] in (a, j):
                seen.add(y)
                queue.append(y)
    swap = {a: j, j: a}
    return tuple(swap[c[x]] if x in seen else c[x] for x in range(g.n))


def brute_kempe_edges(g: Graph, k: int) -> set[frozenset[tuple[int, ...]]]:
    out = set()
    for c in brute_colourings(g, k):
        for v in range(g.n):
            for j in range(1, k + 1):
                d = brute_kempe_image(g, c, v, j)
                if d != c:
                    out.add(frozenset((c, d)))
    return out


def brute_independent_sets(g: Graph) -> list[frozenset[int]]:
    es = edge_set(g)
    return [
        frozenset(s)
        for r in range(g.n + 1)
        for s in combinations(range(g.n), r)
        if not any(frozenset(p) in es for p in combinations(s, 2))
    ]


def brute_token_edges(g: Graph, k: int, rule: str) -> tuple[set[frozenset[int]], set[frozenset[frozenset[int]]]]:
    es = edge_set(g)
    sets = brute_independent_sets(g)
    if rule == "tar":
        verts = {s for s in sets if len(s) >= k}
    else:
        verts = {s for s in sets if len(s) == k}
    edges = set()
    for a, b in combinations(verts, 2):
        diff = a ^ b
        if rule == "tar":
            ok = len(diff) == 1
        elif rule == "tj":
            ok = len(diff) == 2
        else:
            ok = len(diff) == 2 and diff in es
        if ok:
            edges.add(frozenset((a, b)))
    return verts, edges


def brute_is_layering(g: Graph, levels: tuple[int, ...]) -> bool:
    """The four layering conditions, checked literally."""
    es = edge_set(g)
    layers: dict[int, list[int]] = {}
    for v, l in enumerate(levels):
        layers.setdefault(l, []).append(v)
    if sorted(layers) != list(range(1, max(layers) + 1)):
        return False
    for u, v in combinations(range(g.n), 2):
        if frozenset((u, v)) in es and abs(levels[u] - levels[v]) != 1:
            return False
    for v in range(g.n):
        i = levels[v]
        if i >= 2 and sum(1 for w in layers[i - 1] if frozenset((v, w)) in es) != i:
            return False
    for i, members in layers.items():
        for u, v in combinations(members, 2):
            for side in (i - 1, i + 1):
                common = [w for w in layers.get(side, []) if frozenset((u, w)) in es and frozenset((v, w)) in es]
                if len(common) > 1:
                    return False
    return True


def brute_layerings(g: Graph, top: int | None = None) -> list[tuple[int, ...]]:
    top = g.n if top is None else top
    return [lv for lv in product(range(1, top + 1), repeat=g.n) if brute_is_layering(g, lv)]


def brute_line_graph(g: Graph) -> Graph:
    edges = g.edges()
    return Graph.from_edges(
        len(edges), [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])]
    )
