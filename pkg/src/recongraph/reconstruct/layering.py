"""Layerings of token addition/removal graphs.

A layering is an ordered partition V_1..V_p where every layer is
independent, edges join consecutive layers only, a vertex of layer i >= 2
has exactly i neighbours in layer i-1, and two vertices of one layer share
at most one neighbour in the layer below and one in the layer above.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from ..errors import AmbiguousLayering, NoLayering, ResourceCap
from ..graph import Graph

DEFAULT_LAYERING_BUDGET = 1_000_000


@dataclass(frozen=True)
class Layering:
    layers: tuple[tuple[int, ...], ...]

    @classmethod
    def from_levels(cls, levels: Sequence[int]) -> Layering:
        p = max(levels, default=0)
        return cls(tuple(tuple(v for v, l in enumerate(levels) if l == i) for i in range(1, p + 1)))

    def levels(self, n: int) -> list[int]:
        out = [0] * n
        for i, layer in enumerate(self.layers, start=1):
            for v in layer:
                out[v] = i
        return out


def layering_violations(g: Graph, levels: Sequence[int]) -> list[str]:
    """Reasons ``levels`` (1-based layer per vertex) is not a layering of ``g``."""
    problems = []
    if any(l < 1 for l in levels):
        problems.append("every vertex needs a layer >= 1")
        return problems
    for u, v in g.edges():
        if abs(levels[u] - levels[v]) != 1:
            problems.append(f"edge {u}-{v} joins layers {levels[u]} and {levels[v]}")
    for v in range(g.n):
        i = levels[v]
        down = sum(1 for w in g.adj[v] if levels[w] == i - 1)
        if i >= 2 and down != i:
            problems.append(f"vertex {v} in layer {i} has {down} neighbours below")
    shared: dict[tuple[int, int, int], int] = defaultdict(int)
    for w in range(g.n):
        groups: dict[int, list[int]] = defaultdict(list)
        for x in g.adj[w]:
            groups[levels[x]].append(x)
        for members in groups.values():
            for x, y in combinations(members, 2):
                key = (x, y, levels[w])
                shared[key] += 1
                if shared[key] == 2:
                    problems.append(f"vertices {x},{y} share two neighbours in layer {levels[w]}")
    return problems


def is_layering(g: Graph, levels: Sequence[int]) -> bool:
    return not layering_violations(g, levels)


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.nodes = 0

    def _propagate(self, level: list[int], pending: list[int]) -> bool:
        g = self.g
        while True:
            while pending:
                v = pending.pop()
                i = level[v]
                need = i if i >= 2 else 0
                down = 0
                free = []
                for w in g.adj[v]:
                    lw = level[w]
                    if lw == 0:
                        free.append(w)
                    elif lw == i - 1:
                        down += 1
                    elif lw != i + 1:
                        return False
                if down > need or down + len(free) < need:
                    return False
                if free and (down == need or down + len(free) == need):
                    value = i + 1 if down == need else i - 1
                    for w in free:
                        if not self._set(level, w, value, pending):
                            return False
            forced = False
            for w in range(g.n):
                if level[w]:
                    continue
                dom = self._domain(level, w)
                if dom is None:
                    continue
                if not dom:
                    return False
                if len(dom) == 1:
                    if not self._set(level, w, dom[0], pending):
                        return False
                    forced = True
            if not forced:
                return self._pairs_ok(level)

    def _domain(self, level: list[int], w: int) -> list[int] | None:
        dom = None
        for u in self.g.adj[w]:
            if level[u]:
                opts = {level[u] - 1, level[u] + 1}
                dom = opts if dom is None else dom & opts
        if dom is None:
            return None
        cap = max(1, self.g.degree(w))
        return sorted(x for x in dom if 1 <= x <= cap)

    def _set(self, level: list[int], w: int, value: int, pending: list[int]) -> bool:
        if value < 1 or value > max(1, self.g.degree(w)):
            return False
        level[w] = value
        pending.append(w)
        pending.extend(u for u in self.g.adj[w] if level[u])
        return True

    def _pairs_ok(self, level: list[int]) -> bool:
        seen: set[tuple[int, int, int]] = set()
        for w in range(self.g.n):
            if not level[w]:
                continue
            groups: dict[int, list[int]] = defaultdict(list)
            for x in self.g.adj[w]:
                if level[x]:
                    groups[level[x]].append(x)
            for members in groups.values():
                for x, y in combinations(members, 2):
                    key = (x, y, level[w])
                    if key in seen:
                        return False
                    seen.add(key)
        return True

    def solutions(self) -> Iterator[list[int]]:
        g = self.g
        root = min(range(g.n), key=lambda v: (g.degree(v), v))
        for start in range(1, max(1, g.degree(root)) + 1):
            level = [0] * g.n
            pending: list[int] = []
            if self._set(level, root, start, pending) and self._propagate(level, pending):
                yield from self._branch(level)

    def _branch(self, level: list[int]) -> Iterator[list[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceCap(f"layering search exceeded {self.budget} nodes")
        best = None
        for w in range(self.g.n):
            if level[w]:
                continue
            dom = self._domain(level, w)
            if dom is not None and (best is None or len(dom) < len(best[1])):
                best = (w, dom)
        if best is None:
            if is_layering(self.g, level):
                yield list(level)
            return
        w, dom = best
        for value in dom:
            trial = list(level)
            pending: list[int] = []
            if self._set(trial, w, value, pending) and self._propagate(trial, pending):
                yield from self._branch(trial)


def all_layerings(g: Graph, limit: int | None = None, budget: int = DEFAULT_LAYERING_BUDGET) -> list[Layering]:
    """Layerings of a connected graph (up to ``limit`` of them)."""
    found = []
    if g.n == 0:
        return found
    for levels in _Search(g, budget).solutions():
        found.append(Layering.from_levels(levels))
        if limit is not None and len(found) >= limit:
            break
    return found


def find_layering(component: Graph, budget: int = DEFAULT_LAYERING_BUDGET) -> Layering:
    """The unique layering of a connected graph.

    Raises :class:`NoLayering` if none exists and :class:`AmbiguousLayering`
    if the search finds a second one (as it does for even cycles).
    """
    found = all_layerings(component, limit=2, budget=budget)
    if not found:
        raise NoLayering("graph admits no layering")
    if len(found) > 1:
        raise AmbiguousLayering("graph admits more than one layering")
    return found[0]
