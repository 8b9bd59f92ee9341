"""Proper colourings, single-vertex moves, Kempe swaps and colour predicates.

A colouring is a tuple of colours in ``1..k`` indexed by vertex. Bulk
enumeration works on an ``(N, n)`` numpy array whose rows are colourings in
lexicographic order; the tuple-level helpers are for individual colourings.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

import numpy as np

from .chromatic import chromatic_number
from .errors import ImproperInput, NoColourings, ResourceCap
from .graph import Graph

Colouring = tuple[int, ...]

DEFAULT_COLOURING_CAP = 10**7


def _placement_order(g: Graph) -> list[int]:
    placed: list[int] = []
    links = [0] * g.n
    remaining = set(range(g.n))
    while remaining:
        v = max(remaining, key=lambda u: (links[u], g.degree(u), -u))
        remaining.discard(v)
        placed.append(v)
        for w in g.adj[v]:
            links[w] += 1
    return placed


def colouring_array(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> np.ndarray:
    """All proper k-colourings as rows of an array, lexicographically sorted.

    Vertices are placed in a connectivity-first order so partial colourings
    stay small; columns are restored to vertex order before sorting.
    """
    if k < 1:
        raise ValueError("k must be positive")
    dtype = np.uint8 if k < 256 else np.int32
    n = g.n
    if n == 0:
        return np.zeros((1, 0), dtype=dtype)
    order = _placement_order(g)
    pos = {v: i for i, v in enumerate(order)}
    palette = np.arange(1, k + 1, dtype=dtype)
    partial = np.zeros((1, 0), dtype=dtype)
    for i, v in enumerate(order):
        earlier = [pos[w] for w in g.adj[v] if pos[w] < i]
        ext = np.repeat(partial, k, axis=0)
        col = np.tile(palette, len(partial))
        ok = np.ones(len(ext), dtype=bool)
        for j in earlier:
            ok &= ext[:, j] != col
        partial = np.concatenate([ext[ok], col[ok, None]], axis=1)
        if len(partial) > cap:
            raise ResourceCap(f"more than {cap} partial {k}-colourings")
        if len(partial) == 0:
            return np.zeros((0, n), dtype=dtype)
    arr = partial[:, [pos[v] for v in range(n)]]
    return arr[np.lexsort(arr.T[::-1])]


def enumerate_colourings(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> list[Colouring]:
    return [tuple(row) for row in colouring_array(g, k, cap).tolist()]


def is_proper(g: Graph, c: Sequence[int], k: int | None = None) -> bool:
    if len(c) != g.n:
        return False
    if k is not None and any(not 1 <= x <= k for x in c):
        return False
    return all(c[u] != c[v] for u, v in g.edges())


def _require_proper(g: Graph, c: Sequence[int], k: int | None = None) -> None:
    if not is_proper(g, c, k):
        raise ImproperInput(f"{format_colouring(c)} is not a proper colouring")


def single_vertex_moves(g: Graph, c: Sequence[int], k: int) -> list[tuple[int, int, Colouring]]:
    """Every proper colouring differing from ``c`` at exactly one vertex."""
    _require_proper(g, c, k)
    moves = []
    for v in range(g.n):
        blocked = {c[w] for w in g.adj[v]}
        blocked.add(c[v])
        for j in range(1, k + 1):
            if j not in blocked:
                new = list(c)
                new[v] = j
                moves.append((v, j, tuple(new)))
    return moves


def kempe_chain(g: Graph, c: Sequence[int], v: int, j: int) -> list[int]:
    """Vertices of the component of ``v`` in the subgraph coloured ``{c[v], j}``."""
    pair = (c[v], j)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen and c[w] in pair:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def kempe_swap(g: Graph, c: Sequence[int], v: int, j: int) -> Colouring:
    _require_proper(g, c)
    if j < 1:
        raise ImproperInput(f"colour {j} out of range")
    a = c[v]
    if j == a:
        return tuple(c)
    new = list(c)
    for u in kempe_chain(g, c, v, j):
        new[u] = j if c[u] == a else a
    return tuple(new)


def kempe_moves(g: Graph, c: Sequence[int], k: int) -> set[Colouring]:
    """Distinct colourings one Kempe swap away from ``c`` (``c`` excluded)."""
    _require_proper(g, c, k)
    c = tuple(c)
    out: set[Colouring] = set()
    done: set[tuple[int, int, int]] = set()
    for v in range(g.n):
        for j in range(1, k + 1):
            if j == c[v]:
                continue
            # a chain is fixed by its smallest vertex and its colour pair
            chain = kempe_chain(g, c, v, j)
            key = (chain[0], min(c[v], j), max(c[v], j))
            if key in done:
                continue
            done.add(key)
            new = list(c)
            for u in chain:
                new[u] = j if c[u] == c[v] else c[v]
            out.add(tuple(new))
    return out


def _colourings_or_raise(g: Graph, k: int, cap: int) -> np.ndarray:
    arr = colouring_array(g, k, cap)
    if len(arr) == 0:
        raise NoColourings(f"graph has no proper {k}-colouring")
    return arr


def recolourable_mask(g: Graph, arr: np.ndarray, k: int) -> np.ndarray:
    """Boolean ``(N, n)`` array: can vertex v change colour in colouring i."""
    full = (1 << k) - 1
    bit = np.left_shift(np.uint64(1), arr.astype(np.uint64) - np.uint64(1))
    out = np.zeros(arr.shape, dtype=bool)
    for v in range(g.n):
        seen = bit[:, v].copy()
        for w in g.adj[v]:
            seen |= bit[:, w]
        out[:, v] = seen != full
    return out


def frozen_vertices(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> set[int]:
    """Vertices whose closed neighbourhood uses all k colours in every k-colouring."""
    if k > 63:
        return set()
    arr = _colourings_or_raise(g, k, cap)
    movable = recolourable_mask(g, arr, k).any(axis=0)
    return {v for v in range(g.n) if not movable[v]}


def always_distinct_pairs(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> set[tuple[int, int]]:
    """Non-adjacent pairs that never share a colour in any proper k-colouring."""
    arr = _colourings_or_raise(g, k, cap)
    out = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not np.any(arr[:, u] == arr[:, v]):
                out.add((u, v))
    return out


def unique_colour_property(g: Graph, cap: int = DEFAULT_COLOURING_CAP) -> bool:
    """True iff each vertex is alone in its colour class in some chi-colouring."""
    if g.n == 0:
        return True
    arr = colouring_array(g, chromatic_number(g), cap)
    for v in range(g.n):
        same = (arr == arr[:, v:v + 1]).sum(axis=1)
        if not np.any(same == 1):
            return False
    return True


def format_colouring(c: Sequence[int]) -> str:
    return ",".join(str(x) for x in c)


def parse_colouring(text: str) -> Colouring:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()
