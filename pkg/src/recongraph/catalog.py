"""One representative per isomorphism class of small graphs."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from .errors import ResourceCap
from .graph import Graph
from .graphio import from_graph6, to_graph6
from .iso import is_isomorphic, isomorphism_invariant

MAX_GENERATED = 6


@lru_cache(maxsize=None)
def _classes_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    buckets: dict[tuple, list[Graph]] = {}
    for base in _classes_on(n - 1):
        # every n-vertex graph is some (n-1)-vertex class plus one vertex
        for mask in range(1 << (n - 1)):
            g = base.add_vertex(v for v in range(n - 1) if mask >> v & 1)
            bucket = buckets.setdefault(isomorphism_invariant(g), [])
            if not any(is_isomorphic(g, h) is not None for h in bucket):
                bucket.append(g)
    reps = [g for bucket in buckets.values() for g in bucket]
    reps.sort(key=lambda g: (g.m, sorted(g.degrees(), reverse=True), to_graph6(g)))
    return tuple(reps)


def graphs_on(n: int) -> list[Graph]:
    if n > MAX_GENERATED:
        raise ResourceCap(f"catalog generation stops at {MAX_GENERATED} vertices; supply a graph6 file")
    return list(_classes_on(n))


def catalog(n_max: int) -> list[Graph]:
    """All graphs on 0..n_max vertices up to isomorphism, by vertex count."""
    out: list[Graph] = []
    for n in range(n_max + 1):
        out += graphs_on(n)
    return out


def load_catalog(path: str | Path) -> list[Graph]:
    lines = Path(path).read_text().splitlines()
    return [from_graph6(line) for line in lines if line.strip()]
