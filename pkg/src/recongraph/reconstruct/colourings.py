"""Recovering G from an unlabelled recolouring or Kempe-recolouring graph.

Every vertex c of the input yields a candidate graph built from the cliques
in its neighbourhood. Candidates are subgraphs of the hidden graph, so the
candidate with the most vertices, then edges, is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from ..errors import EmptyInput, NotCliquePartition
from ..graph import Graph

Neighbours = Callable[[int], int]


@dataclass(frozen=True)
class CandidateGraph:
    graph: Graph
    source_vertex: int
    cliques: tuple[tuple[int, ...], ...]

    @property
    def clique_sizes(self) -> tuple[int, ...]:
        return tuple(len(q) for q in self.cliques)

    @property
    def size(self) -> tuple[int, int]:
        return self.graph.n, self.graph.m


def _bits_of(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _local_neighbours(r: Graph, c: int, visited: set[int] | None = None) -> Neighbours:
    """Neighbour masks restricted to the ball of radius two around ``c``."""
    ball = {c, *r.adj[c]}
    for a in r.adj[c]:
        ball.update(r.adj[a])
    inside = _mask(ball)
    cache: dict[int, int] = {}

    def nb(v: int) -> int:
        if v not in cache:
            if visited is not None:
                visited.add(v)
            cache[v] = _mask(r.adj[v]) & inside
        return cache[v]

    return nb


def _neighbourhood_components(nb: Neighbours, c: int) -> list[tuple[int, ...]]:
    left = nb(c)
    comps = []
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for v in _bits_of(frontier):
                grow |= nb(v)
            frontier = grow & left & ~comp
            comp |= frontier
        left &= ~comp
        comps.append(tuple(_bits_of(comp)))
    return comps


def _require_clique(nb: Neighbours, comp: tuple[int, ...], c: int) -> None:
    whole = _mask(comp)
    for v in comp:
        if (nb(v) | 1 << v) & whole != whole:
            raise NotCliquePartition(f"neighbourhood component {comp} of vertex {c} is not a clique")


def _star_fails(nb: Neighbours, c: int, a_side: Iterable[int], b_side: Iterable[int]) -> bool:
    skip = ~(1 << c)
    b_side = tuple(b_side)
    return any(nb(a) & nb(b) & skip == 0 for a in a_side for b in b_side)


def _tstar_fails(nb: Neighbours, c: int, a: int, b: int) -> bool:
    skip = ~(1 << c)
    na, nbb = nb(a), nb(b)
    for x in _bits_of(na & nbb & skip):
        # triangles {x, a, a'} and {x, b, b'} with a', b' distinct from c
        nx = nb(x) & skip
        if na & nx and nbb & nx:
            return False
    return True


def _candidate(
    nb: Neighbours, c: int, *, drop_singletons: bool, edge_rule: Callable[[tuple[int, ...], tuple[int, ...]], bool]
) -> CandidateGraph:
    comps = _neighbourhood_components(nb, c)
    if drop_singletons:
        comps = [q for q in comps if len(q) >= 2]
    for q in comps:
        _require_clique(nb, q, c)
    edges = [
        (i, j)
        for i in range(len(comps))
        for j in range(i + 1, len(comps))
        if edge_rule(comps[i], comps[j])
    ]
    return CandidateGraph(Graph.from_edges(len(comps), edges), c, tuple(comps))


def neighbourhood_cliques(r: Graph, c: int) -> list[tuple[int, ...]]:
    """Components of the neighbourhood of ``c``, each checked to be a clique."""
    nb = r.bitsets().__getitem__
    comps = _neighbourhood_components(nb, c)
    for q in comps:
        _require_clique(nb, q, c)
    return comps


def star_fails(r: Graph, c: int, a_side: Iterable[int], b_side: Iterable[int]) -> bool:
    """True iff some ``a``, ``b`` from the two cliques share no neighbour besides ``c``."""
    return _star_fails(r.bitsets().__getitem__, c, a_side, b_side)


def tstar_fails(r: Graph, c: int, a: int, b: int) -> bool:
    """True iff no common neighbour ``x != c`` of ``a``, ``b`` closes two triangles.

    The triangles are ``{x, a, a'}`` and ``{x, b, b'}`` for some ``a'``, ``b'``
    other than ``c``; on a genuine Kempe graph this says that ``x`` is a
    single-vertex move from both ``a`` and ``b`` with a second option for
    that vertex on each side.
    """
    return _tstar_fails(r.bitsets().__getitem__, c, a, b)


def _single_with(nb: Neighbours, c: int) -> CandidateGraph:
    return _candidate(nb, c, drop_singletons=False, edge_rule=lambda p, q: _star_fails(nb, c, p, q))


def _kempe_with(nb: Neighbours, c: int) -> CandidateGraph:
    def rule(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        return any(_tstar_fails(nb, c, a, b) for a in p for b in q)

    return _candidate(nb, c, drop_singletons=True, edge_rule=rule)


def candidate_single(r: Graph, c: int) -> CandidateGraph:
    return _single_with(r.bitsets().__getitem__, c)


def candidate_kempe(r: Graph, c: int) -> CandidateGraph:
    """Candidate from the cliques of size at least two around ``c``.

    Isolated neighbours may be non-trivial Kempe swaps and are discarded.
    """
    return _kempe_with(r.bitsets().__getitem__, c)


def candidate_single_fast(r: Graph, c: int, visited: set[int] | None = None) -> Graph:
    """Same graph as :func:`candidate_single`, computed inside the radius-2 ball of ``c``.

    If ``visited`` is given it collects the vertices whose neighbour lists
    were read.
    """
    return _single_with(_local_neighbours(r, c, visited), c).graph


def candidate_kempe_fast(r: Graph, c: int, visited: set[int] | None = None) -> Graph:
    return _kempe_with(_local_neighbours(r, c, visited), c).graph


def _best(cands: Iterable[CandidateGraph]) -> CandidateGraph:
    best = None
    for cand in cands:
        if best is None or cand.size > best.size:
            best = cand
    assert best is not None
    return best


def all_candidates_single(r: Graph) -> list[CandidateGraph]:
    nb = r.bitsets().__getitem__
    return [_single_with(nb, c) for c in range(r.n)]


def all_candidates_kempe(r: Graph) -> list[CandidateGraph]:
    nb = r.bitsets().__getitem__
    return [_kempe_with(nb, c) for c in range(r.n)]


def best_candidate_single(r: Graph) -> CandidateGraph:
    if r.n == 0:
        raise EmptyInput("recolouring graph has no vertices")
    return _best(all_candidates_single(r))


def best_candidate_kempe(r: Graph) -> CandidateGraph:
    if r.n == 0:
        raise EmptyInput("Kempe-recolouring graph has no vertices")
    return _best(all_candidates_kempe(r))


def reconstruct_single(r: Graph) -> Graph:
    """Recover G from its k-recolouring graph; exact whenever k > chi(G)."""
    return best_candidate_single(r).graph


def reconstruct_kempe(r: Graph) -> Graph:
    """Recover G from its k-Kempe-recolouring graph; exact whenever k > chi(G) + 1."""
    return best_candidate_kempe(r).graph


def reconstruct_single_fast(r: Graph, c: int = 0) -> Graph:
    if r.n == 0:
        raise EmptyInput("recolouring graph has no vertices")
    return candidate_single_fast(r, c)


def reconstruct_kempe_fast(r: Graph, c: int = 0) -> Graph:
    if r.n == 0:
        raise EmptyInput("Kempe-recolouring graph has no vertices")
    return candidate_kempe_fast(r, c)
