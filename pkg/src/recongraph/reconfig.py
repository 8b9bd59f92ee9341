"""Labelled reconfiguration graphs and label stripping."""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .colouring import DEFAULT_COLOURING_CAP, colouring_array, format_colouring, kempe_moves, parse_colouring
from .graph import DEFAULT_SET_CAP, Graph, independent_sets


class Kind(str, Enum):
    SINGLE = "single"
    KEMPE = "kempe"
    TJ = "tj"
    TS = "ts"
    TAR = "tar"

    @property
    def is_colouring(self) -> bool:
        return self in (Kind.SINGLE, Kind.KEMPE)


@dataclass
class ReconfigGraph:
    """A reconfiguration graph with optional per-vertex labels.

    ``edges`` is an ``(m, 2)`` int64 array of pairs ``i < j`` in lexicographic
    order; the adjacency-list :class:`Graph` is built on first access.
    """

    kind: Kind
    k: int
    n: int
    edges: np.ndarray
    labels: list[tuple[int, ...]] | None = None
    _graph: Graph | None = field(default=None, repr=False, compare=False)

    @property
    def graph(self) -> Graph:
        if self._graph is None:
            self._graph = Graph.from_edge_array(self.n, self.edges)
        return self._graph

    @property
    def m(self) -> int:
        return len(self.edges)

    def canonical_bytes(self) -> bytes:
        head = json.dumps({"kind": self.kind.value, "k": self.k, "n": self.n}, sort_keys=True).encode()
        parts = [head, b"\0", self.edges.astype("<i8").tobytes()]
        if self.labels is not None:
            parts += [b"\0", "\n".join(format_colouring(x) for x in self.labels).encode()]
        return b"".join(parts)

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "kind": self.kind.value,
            "params": {"k": self.k},
            "n": self.n,
            "edges": self.edges.tolist(),
        }
        if self.labels is not None:
            if self.kind.is_colouring:
                doc["labels"] = [format_colouring(x) for x in self.labels]
            else:
                doc["labels"] = [list(x) for x in self.labels]
        return doc

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> ReconfigGraph:
        kind = Kind(doc["kind"])
        labels = doc.get("labels")
        if labels is not None:
            if kind.is_colouring:
                labels = [parse_colouring(x) for x in labels]
            else:
                labels = [tuple(x) for x in labels]
        return cls(kind, int(doc["params"]["k"]), int(doc["n"]), _edge_array(doc["edges"]), labels)


def _edge_array(pairs) -> np.ndarray:
    arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if len(arr):
        arr = np.sort(arr, axis=1)
        arr = np.unique(arr, axis=0)
    return arr


# colourings are packed as base-k integers in int64 below this bound
_CODE_LIMIT = 2**62


def build_single(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> ReconfigGraph:
    """The k-recolouring graph: colourings joined when they differ at one vertex."""
    arr = colouring_array(g, k, cap)
    labels = [tuple(row) for row in arr.tolist()]
    n = g.n
    if n == 0 or len(arr) == 0:
        return ReconfigGraph(Kind.SINGLE, k, len(arr), np.zeros((0, 2), dtype=np.int64), labels)
    if k**n < _CODE_LIMIT:
        weights = np.array([k ** (n - 1 - v) for v in range(n)], dtype=np.int64)
        codes = (arr.astype(np.int64) - 1) @ weights
        src, dst = [], []
        for v in range(n):
            cv = arr[:, v].astype(np.int64)
            for j in range(2, k + 1):
                # only raise colours so each edge is emitted once
                mask = cv < j
                for w in g.adj[v]:
                    mask &= arr[:, w] != j
                rows = np.nonzero(mask)[0]
                if len(rows) == 0:
                    continue
                target = codes[rows] + (j - cv[rows]) * weights[v]
                src.append(rows)
                dst.append(np.searchsorted(codes, target))
        edges = np.stack([np.concatenate(src), np.concatenate(dst)], axis=1) if src else np.zeros((0, 2), np.int64)
    else:
        index = {c: i for i, c in enumerate(labels)}
        pairs = []
        for i, c in enumerate(labels):
            for v in range(n):
                blocked = {c[w] for w in g.adj[v]}
                for j in range(c[v] + 1, k + 1):
                    if j not in blocked:
                        pairs.append((i, index[c[:v] + (j,) + c[v + 1:]]))
        edges = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return ReconfigGraph(Kind.SINGLE, k, len(arr), edges[order], labels)


def build_kempe(g: Graph, k: int, cap: int = DEFAULT_COLOURING_CAP) -> ReconfigGraph:
    """The k-Kempe-recolouring graph on the same vertex set as :func:`build_single`."""
    labels = [tuple(row) for row in colouring_array(g, k, cap).tolist()]
    index = {c: i for i, c in enumerate(labels)}
    pairs = []
    for i, c in enumerate(labels):
        for d in kempe_moves(g, c, k):
            j = index[d]
            if i < j:
                pairs.append((i, j))
    return ReconfigGraph(Kind.KEMPE, k, len(labels), _edge_array(pairs), labels)


def build_token(g: Graph, k: int, rule: Kind | str, cap: int = DEFAULT_SET_CAP) -> ReconfigGraph:
    """Independent-set reconfiguration graph under token jumping/sliding/addition-removal.

    TJ and TS use the independent sets of size exactly ``k``; TAR uses all
    sets of size at least ``k``.
    """
    rule = Kind(rule)
    if rule.is_colouring:
        raise ValueError(f"{rule.value} is not a token rule")
    sets = independent_sets(g, k, cap)
    if rule is not Kind.TAR:
        sets = [s for s in sets if len(s) == k]
    masks = [sum(1 << v for v in s) for s in sets]
    bits = g.bitsets()
    pairs = []
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            diff = a ^ masks[j]
            if rule is Kind.TAR:
                if diff & (diff - 1) == 0:
                    pairs.append((i, j))
            elif bin(diff).count("1") == 2:
                if rule is Kind.TJ:
                    pairs.append((i, j))
                else:
                    out = (a & diff).bit_length() - 1
                    into = (masks[j] & diff).bit_length() - 1
                    if bits[out] >> into & 1:
                        pairs.append((i, j))
    return ReconfigGraph(rule, k, len(sets), _edge_array(pairs), sets)


def build(g: Graph, kind: Kind | str, k: int) -> ReconfigGraph:
    kind = Kind(kind)
    if kind is Kind.SINGLE:
        return build_single(g, k)
    if kind is Kind.KEMPE:
        return build_kempe(g, k)
    return build_token(g, k, kind)


def strip(r: ReconfigGraph, seed: int) -> Graph:
    """Erase labels and relabel vertices by a permutation drawn from ``seed``."""
    perm = list(range(r.n))
    random.Random(seed).shuffle(perm)
    if r.m == 0:
        return Graph(r.n)
    p = np.asarray(perm, dtype=np.int64)
    return Graph.from_edge_array(r.n, p[r.edges])
