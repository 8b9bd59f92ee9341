"""Graph families whose reconfiguration graphs fail to determine them.

Includes the Mycielskian, frozen twins, the two block constructions with
equal chi-recolouring graphs, join padding for token graphs, and a checker
that compares the reconfiguration graphs of two graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Any

import numpy as np

from .chromatic import chromatic_number
from .colouring import frozen_vertices
from .errors import NoFrozenVertex, PreconditionViolated
from .graph import Graph, complete_join, cycle_graph, independence_number
from .iso import is_isomorphic
from .reconfig import Kind, ReconfigGraph, build


def mycielskian(g: Graph) -> Graph:
    """Vertices ``v_0..v_{n-1}``, then shadows ``u_0..u_{n-1}``, then the apex ``w``."""
    n = g.n
    edges = list(g.edges())
    for i, j in g.edges():
        edges += [(n + i, j), (i, n + j)]
    edges += [(2 * n, n + i) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def iterated_mycielskian(g: Graph, times: int) -> Graph:
    for _ in range(times):
        g = mycielskian(g)
    return g


def frozen_twin(g: Graph, k: int) -> Graph:
    """Add a non-adjacent copy of the smallest frozen vertex; C_k is unchanged."""
    frozen = frozen_vertices(g, k)
    if not frozen:
        raise NoFrozenVertex(f"no vertex is frozen in every {k}-colouring")
    return g.add_vertex(g.adj[min(frozen)])


@dataclass
class FamilySpec:
    """Parameters of the four-block family.

    ``extra_edges`` holds pairs ``(a, b)`` with ``a`` a vertex of ``h0`` and
    ``b`` a vertex of ``h3``, in the local numbering of each block.
    """

    chi: int
    p: int
    h0: Graph
    h3: Graph
    extra_edges: list[tuple[int, int]] = field(default_factory=list)

    def validate(self) -> None:
        if self.chi < 6:
            raise PreconditionViolated(f"chi={self.chi} must be at least 6")
        if not 3 <= self.p <= self.chi - 3:
            raise PreconditionViolated(f"p={self.p} must lie in [3, {self.chi - 3}]")
        if chromatic_number(self.h0) >= self.chi - self.p:
            raise PreconditionViolated(f"chi(h0) must be below {self.chi - self.p}")
        if chromatic_number(self.h3) >= self.p:
            raise PreconditionViolated(f"chi(h3) must be below {self.p}")
        for a, b in self.extra_edges:
            if not (0 <= a < self.h0.n and 0 <= b < self.h3.n):
                raise PreconditionViolated(f"extra edge ({a}, {b}) is not between h0 and h3")


@dataclass(frozen=True)
class Blocks:
    h0: range
    h1: range
    h2: range
    h3: range


def construction_one_blocks(spec: FamilySpec) -> Blocks:
    n1 = iterated_mycielskian(cycle_graph(5), spec.p - 3).n
    n2 = iterated_mycielskian(cycle_graph(5), spec.chi - spec.p - 3).n
    a = spec.h0.n
    return Blocks(range(0, a), range(a, a + n1), range(a + n1, a + n1 + n2), range(a + n1 + n2, a + n1 + n2 + spec.h3.n))


def construction_one(spec: FamilySpec) -> Graph:
    """Member of the family: blocks H0..H3 in order, consecutive blocks fully joined.

    H1 and H2 are iterated Mycielskians of C5 with chromatic numbers p and
    chi - p; ``extra_edges`` adds edges between H0 and H3.
    """
    spec.validate()
    parts = [
        spec.h0,
        iterated_mycielskian(cycle_graph(5), spec.p - 3),
        iterated_mycielskian(cycle_graph(5), spec.chi - spec.p - 3),
        spec.h3,
    ]
    offsets = np.cumsum([0] + [h.n for h in parts]).tolist()
    edges = []
    for h, off in zip(parts, offsets):
        edges += [(u + off, v + off) for u, v in h.edges()]
    for i in range(3):
        edges += [(a, b) for a in range(offsets[i], offsets[i + 1]) for b in range(offsets[i + 1], offsets[i + 2])]
    edges += [(offsets[0] + a, offsets[3] + b) for a, b in spec.extra_edges]
    return Graph.from_edges(offsets[4], edges)


def construction_one_family(chi: int, p: int, h0: Graph, h3: Graph) -> list[Graph]:
    """Every member up to isomorphism, ordered by number of extra edges."""
    cross = [(a, b) for a in range(h0.n) for b in range(h3.n)]
    members: list[Graph] = []
    subsets = chain.from_iterable(combinations(cross, r) for r in range(len(cross) + 1))
    for extra in subsets:
        g = construction_one(FamilySpec(chi, p, h0, h3, list(extra)))
        if not any(g.m == h.m and is_isomorphic(g, h) is not None for h in members):
            members.append(g)
    return members


def construction_two(chi: int, i: int) -> Graph:
    """H = M^(chi-4)(C5) on v-vertices, a u-vertex per v joined to all other v's, then i apexes over H."""
    if chi < 4:
        raise PreconditionViolated(f"chi={chi} must be at least 4")
    if i < 0:
        raise PreconditionViolated("i must be non-negative")
    h = iterated_mycielskian(cycle_graph(5), chi - 4)
    n = h.n
    edges = list(h.edges())
    edges += [(n + a, b) for a in range(n) for b in range(n) if a != b]
    edges += [(2 * n + t, b) for t in range(i) for b in range(n)]
    return Graph.from_edges(2 * n + i, edges)


def join_padding(g: Graph, k: int, h: Graph) -> Graph:
    """``g`` joined with ``h``; token graphs with at least k tokens cannot see ``h``."""
    if k < 2:
        raise PreconditionViolated("join padding needs k >= 2")
    if independence_number(h) >= k:
        raise PreconditionViolated(f"padding graph has an independent set of size {k}")
    return complete_join(g, h)


@dataclass
class SameReconfigReport:
    """Outcome of comparing two reconfiguration graphs.

    ``relation`` is one of ``identical`` (same labels and edges),
    ``restriction`` (labels of the larger graph restrict bijectively onto the
    smaller one's and edges correspond), ``isomorphic`` or ``different``.
    ``witness`` maps vertices of the first graph to the second.
    """

    relation: str
    sizes: tuple[tuple[int, int], tuple[int, int]]
    witness: list[int] | None = None
    digests: tuple[str, str] | None = None

    @property
    def same(self) -> bool:
        return self.relation != "different"

    def to_json(self) -> dict[str, Any]:
        return {
            "relation": self.relation,
            "sizes": [list(s) for s in self.sizes],
            "digests": list(self.digests) if self.digests else None,
            "witness": self.witness,
        }


def _restriction_map(big: ReconfigGraph, small: ReconfigGraph, keep: int) -> list[int] | None:
    if big.n != small.n or big.m != small.m or big.labels is None or small.labels is None:
        return None
    index = {lab: i for i, lab in enumerate(small.labels)}
    mapping = []
    for lab in big.labels:
        j = index.get(tuple(lab[:keep]))
        if j is None:
            return None
        mapping.append(j)
    if len(set(mapping)) != len(mapping):
        return None
    image = np.sort(np.asarray(mapping, dtype=np.int64)[big.edges], axis=1) if big.m else big.edges
    if big.m and not np.array_equal(np.unique(image, axis=0), small.edges):
        return None
    return mapping


def compare_reconfig(a: ReconfigGraph, b: ReconfigGraph, ga: Graph, gb: Graph) -> SameReconfigReport:
    sizes = ((a.n, a.m), (b.n, b.m))
    digests = (a.digest(), b.digest())
    if a.labels is not None and a.labels == b.labels and np.array_equal(a.edges, b.edges):
        return SameReconfigReport("identical", sizes, list(range(a.n)), digests)
    if a.n != b.n or a.m != b.m:
        return SameReconfigReport("different", sizes, None, digests)
    if gb.n <= ga.n and a.kind.is_colouring:
        mapping = _restriction_map(a, b, gb.n)
        if mapping is not None:
            return SameReconfigReport("restriction", sizes, mapping, digests)
    if ga.n < gb.n and a.kind.is_colouring:
        inverse = _restriction_map(b, a, ga.n)
        if inverse is not None:
            mapping = [0] * a.n
            for i, j in enumerate(inverse):
                mapping[j] = i
            return SameReconfigReport("restriction", sizes, mapping, digests)
    witness = is_isomorphic(a.graph, b.graph)
    if witness is not None:
        return SameReconfigReport("isomorphic", sizes, list(witness), digests)
    return SameReconfigReport("different", sizes, None, digests)


def verify_same_reconfig(g: Graph, h: Graph, kind: Kind | str, k: int) -> SameReconfigReport:
    """Build the reconfiguration graphs of ``g`` and ``h`` and compare them."""
    return compare_reconfig(build(g, kind, k), build(h, kind, k), g, h)
