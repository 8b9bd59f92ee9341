"""Graph isomorphism by joint colour refinement and individualisation.

Both graphs are refined together so that colour ids mean the same thing on
each side; a branch survives only while the two colour histograms agree.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .graph import Graph

Witness = tuple[int, ...]


def _refine(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> tuple[list[int], list[int]] | None:
    classes = len(set(cg) | set(ch))
    while True:
        sig_g = [(cg[v], tuple(sorted(cg[w] for w in g.adj[v]))) for v in range(g.n)]
        sig_h = [(ch[v], tuple(sorted(ch[w] for w in h.adj[v]))) for v in range(h.n)]
        if Counter(sig_g) != Counter(sig_h):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(sig_g)))}
        cg = [ids[s] for s in sig_g]
        ch = [ids[s] for s in sig_h]
        if len(ids) == classes:
            return cg, ch
        classes = len(ids)


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> Witness | None:
    refined = _refine(g, h, cg, ch)
    if refined is None:
        return None
    cg, ch = refined
    counts = Counter(cg)
    target = min((c for c, k in counts.items() if k > 1), key=lambda c: (counts[c], c), default=None)
    if target is None:
        where = {c: w for w, c in enumerate(ch)}
        mapping = tuple(where[c] for c in cg)
        return mapping if verify_isomorphism(g, h, mapping) else None
    v = cg.index(target)
    fresh = len(counts)
    for w in (u for u in range(h.n) if ch[u] == target):
        cg2 = list(cg)
        ch2 = list(ch)
        cg2[v] = fresh
        ch2[w] = fresh
        found = _search(g, h, cg2, ch2)
        if found is not None:
            return found
    return None


def is_isomorphic(g: Graph, h: Graph) -> Witness | None:
    """Return a vertex map ``g -> h`` preserving edges and non-edges, or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    return _search(g, h, [0] * g.n, [0] * h.n)


def verify_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    if g.n != h.n or len(mapping) != g.n or sorted(mapping) != list(range(g.n)):
        return False
    if g.m != h.m:
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def isomorphism_invariant(g: Graph) -> tuple:
    """Cheap invariant for bucketing: equal graphs up to iso give equal keys."""
    c = [0] * g.n
    for _ in range(3):
        sig = [(c[v], tuple(sorted(c[w] for w in g.adj[v]))) for v in range(g.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sig)))}
        c = [ids[s] for s in sig]
    return g.n, g.m, tuple(sorted(Counter(sig).items()))
