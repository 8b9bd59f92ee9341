"""Exact chromatic number by iterative deepening over k."""

from __future__ import annotations

from .errors import ResourceCap
from .graph import Graph

DEFAULT_NODE_BUDGET = 5_000_000


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from high-degree vertices."""
    if g.n == 0:
        return []
    bits = g.bitsets()
    best: list[int] = []
    for start in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        clique = [start]
        cand = bits[start]
        while cand:
            v = max((u for u in range(g.n) if cand >> u & 1), key=lambda u: (bin(cand & bits[u]).count("1"), -u))
            clique.append(v)
            cand &= bits[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def find_colouring(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A proper colouring with colours ``1..k``, or None if none exists.

    Vertices are coloured in order of descending degree; a vertex may open at
    most one new colour, which removes colour-permutation symmetry.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    colour = [0] * n
    nodes = 0

    def place(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        nodes += 1
        if nodes > budget:
            raise ResourceCap(f"colourability search exceeded {budget} nodes")
        v = order[i]
        blocked = {colour[w] for w in g.adj[v]}
        for c in range(1, min(used + 1, k) + 1):
            if c in blocked:
                continue
            colour[v] = c
            if place(i + 1, max(used, c)):
                return True
        colour[v] = 0
        return False

    return list(colour) if place(0, 0) else None


def chromatic_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    if g.n == 0:
        return 0
    k = max(1, len(greedy_clique(g)))
    while find_colouring(g, k, budget) is None:
        k += 1
    return k
