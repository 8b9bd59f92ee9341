"""End-to-end build, strip, reconstruct and compare pipelines."""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

from .chromatic import chromatic_number
from .errors import EmptyInput
from .graph import Graph, connected_components
from .graphio import to_edgelist, to_graph6
from .iso import is_isomorphic
from .reconfig import Kind, build, strip
from .reconstruct import (
    all_candidates_kempe,
    all_candidates_single,
    reconstruct_kempe_fast,
    reconstruct_single_fast,
    reconstruct_tj2,
    reconstruct_token_trivial,
)

METHODS = ("single", "single-fast", "kempe", "kempe-fast", "tj", "ts", "tar")


def _fast_bound(g: Graph) -> int:
    return min(g.n, 2 * g.max_degree)


def resolve_k(g: Graph, rule: str | int) -> int:
    """Turn a rule such as ``chi+1``, ``min+2`` or ``3`` into a colour/token count."""
    if isinstance(rule, int):
        return rule
    rule = rule.strip()
    if rule.isdigit():
        return int(rule)
    base, _, extra = rule.partition("+")
    offset = int(extra) if extra else 0
    if base == "chi":
        return max(1, chromatic_number(g) + offset)
    if base == "min":
        return _fast_bound(g) + offset
    raise ValueError(f"unknown k rule {rule!r}")


def expected_to_reconstruct(g: Graph, method: str, k: int) -> bool:
    """Whether a round trip is covered by one of the recovery guarantees."""
    if method == "single":
        return k > chromatic_number(g)
    if method == "kempe":
        return k > chromatic_number(g) + 1
    if method == "single-fast":
        return k > _fast_bound(g)
    if method == "kempe-fast":
        return k > _fast_bound(g) + 1
    if method == "tar":
        return k in (0, 1)
    if method == "ts":
        return k == 1
    if method == "tj":
        if k != 2:
            return False
        r = build(g, Kind.TJ, 2).graph
        universal = any(g.degree(v) == g.n - 1 for v in range(g.n))
        return r.n > 0 and len(connected_components(r)) == 1 and not (r.n == 3 and r.m == 3) and not universal
    raise ValueError(f"unknown method {method!r}")


def input_hash(r: Graph) -> str:
    return hashlib.sha256(to_edgelist(r).encode()).hexdigest()


@dataclass
class ReconstructionReport:
    input_hash: str
    algorithm: str
    chosen_vertex: int | None
    candidate_sizes: list[list[int]] | None
    outputs: list[Graph]
    isomorphic_to_expected: bool | None = None

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "input_hash": self.input_hash,
            "algorithm": self.algorithm,
            "chosen_vertex": self.chosen_vertex,
            "candidate_sizes": self.candidate_sizes,
            "output_graph6": to_graph6(self.outputs[0]) if len(self.outputs) == 1 else None,
        }
        if len(self.outputs) > 1:
            doc["ambiguous_graph6"] = [to_graph6(h) for h in self.outputs]
        if self.isomorphic_to_expected is not None:
            doc["isomorphic_to_expected"] = self.isomorphic_to_expected
        return doc


def reconstruct(r: Graph, method: str, k: int | None = None, expected: Graph | None = None) -> ReconstructionReport:
    """Run one reconstruction algorithm on an unlabelled reconfiguration graph.

    ``k`` is only consulted by the token methods, where it selects the rule.
    """
    chosen = None
    sizes = None
    if method in ("single", "kempe"):
        if r.n == 0:
            raise EmptyInput("reconfiguration graph has no vertices")
        cands = all_candidates_single(r) if method == "single" else all_candidates_kempe(r)
        sizes = [list(c.size) for c in cands]
        best = max(cands, key=lambda c: c.size)  # first maximiser wins ties
        outputs, chosen = [best.graph], best.source_vertex
    elif method == "single-fast":
        outputs, chosen = [reconstruct_single_fast(r)], 0
    elif method == "kempe-fast":
        outputs, chosen = [reconstruct_kempe_fast(r)], 0
    elif method == "tj" and k == 2:
        outputs = reconstruct_tj2(r)
    elif method in ("tj", "ts", "tar"):
        outputs = [reconstruct_token_trivial(r, method, -1 if k is None else k)]
    else:
        raise ValueError(f"unknown method {method!r}")
    if chosen is not None and sizes is None:
        sizes = [[outputs[0].n, outputs[0].m]]
    match = None
    if expected is not None:
        match = len(outputs) == 1 and is_isomorphic(outputs[0], expected) is not None
    return ReconstructionReport(input_hash(r), method, chosen, sizes, outputs, match)


def _kind_of(method: str) -> Kind:
    return Kind(method.split("-")[0])


@dataclass
class RoundTripRecord:
    graph6: str
    n: int
    chi: int
    kind: str
    k: int
    seed: int
    expected: bool
    reconstructed: bool | None = None
    error: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        doc = asdict(self)
        if not timings:
            doc.pop("elapsed")
        return doc

    @property
    def unexpected_failure(self) -> bool:
        return self.expected and not self.reconstructed


def roundtrip(g: Graph, method: str, k: int | str, seed: int) -> RoundTripRecord:
    """Build the reconfiguration graph of ``g``, strip it with ``seed``, reconstruct, compare."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    k = resolve_k(g, k)
    rec = RoundTripRecord(to_graph6(g), g.n, chromatic_number(g), method, k, seed, expected_to_reconstruct(g, method, k))
    start = time.perf_counter()
    try:
        r = strip(build(g, _kind_of(method), k), seed)
        rec.reconstructed = bool(reconstruct(r, method, k, expected=g).isomorphic_to_expected)
    except Exception as exc:  # failures are data here
        rec.error = f"{type(exc).__name__}: {exc}"
    rec.elapsed = time.perf_counter() - start
    return rec


@dataclass
class SweepReport:
    method: str
    k_rule: str
    records: list[RoundTripRecord]

    @property
    def counts(self) -> dict[str, int]:
        return {
            "total": len(self.records),
            "reconstructed": sum(1 for r in self.records if r.reconstructed),
            "not_reconstructed": sum(1 for r in self.records if r.reconstructed is False),
            "errors": sum(1 for r in self.records if r.error is not None),
            "unexpected_failures": sum(1 for r in self.records if r.unexpected_failure),
        }

    @property
    def ok(self) -> bool:
        return self.counts["unexpected_failures"] == 0

    def to_json(self, timings: bool = False) -> dict[str, Any]:
        return {
            "method": self.method,
            "k_rule": self.k_rule,
            "counts": self.counts,
            "records": [r.to_json(timings) for r in self.records],
        }


def _run(job: tuple[Graph, str, str, int]) -> RoundTripRecord:
    return roundtrip(*job)


def sweep(method: str, k_rule: str, graphs: Sequence[Graph], seeds: Sequence[int], jobs: int = 1) -> SweepReport:
    """Round-trip every graph under every seed; record order follows the input order."""
    work = [(g, method, k_rule, s) for g in graphs for s in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(_run, work, chunksize=4))
    else:
        records = [_run(job) for job in work]
    return SweepReport(method, str(k_rule), records)
