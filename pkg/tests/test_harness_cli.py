from __future__ import annotations

import io
import json
import sys
from itertools import combinations, product

import pytest

from oracles import perm_isomorphic
from recongraph import cli
from recongraph.catalog import catalog, graphs_on, load_catalog
from recongraph.errors import ResourceCap
from recongraph.graph import Graph, complete_graph, path_graph
from recongraph.graphio import to_graph6
from recongraph.harness import resolve_k, roundtrip, sweep
from recongraph.reconfig import build_single


def labelled_class_count(n: int) -> int:
    """Isomorphism classes on n vertices by brute force over labelled graphs."""
    pairs = list(combinations(range(n), 2))
    reps: list[Graph] = []
    for bits in product((0, 1), repeat=len(pairs)):
        g = Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
        if not any(perm_isomorphic(g, h) for h in reps):
            reps.append(g)
    return len(reps)


class TestCatalog:
    def test_examples(self):
        assert len(catalog(3)) == 8
        assert len(graphs_on(4)) == 11
        assert catalog(0) == [Graph(0)]

    def test_counts_match_brute_force(self):
        for n in range(5):
            assert len(graphs_on(n)) == labelled_class_count(n)
        assert [len(graphs_on(n)) for n in (5, 6)] == [34, 156]

    def test_representatives_pairwise_non_isomorphic(self, catalog5):
        for n in range(5):
            reps = graphs_on(n)
            assert not any(perm_isomorphic(g, h) for g, h in combinations(reps, 2))

    def test_generation_cap(self):
        with pytest.raises(ResourceCap):
            graphs_on(7)

    def test_load_catalog(self, tmp_path):
        path = tmp_path / "cat.g6"
        path.write_text("\n".join(to_graph6(g) for g in catalog(3)) + "\n")
        assert load_catalog(path) == catalog(3)


class TestHarness:
    def test_roundtrip_examples(self):
        assert roundtrip(complete_graph(3), "single", 4, 7).reconstructed
        assert roundtrip(path_graph(3), "kempe", 4, 7).reconstructed
        rec = roundtrip(path_graph(3), "single", 2, 7)
        assert rec.reconstructed is False and not rec.expected and not rec.unexpected_failure

    def test_resolve_k(self):
        assert resolve_k(path_graph(3), "chi+1") == 3
        assert resolve_k(path_graph(3), "min+1") == 4
        assert resolve_k(path_graph(3), "5") == 5
        assert resolve_k(Graph(0), "chi+1") == 1
        with pytest.raises(ValueError):
            resolve_k(path_graph(3), "max+1")

    def test_records_have_exactly_one_outcome(self):
        report = sweep("tj", "2", catalog(4), [1])
        for rec in report.records:
            assert (rec.error is None) == (rec.reconstructed is not None)
        c = report.counts
        assert c["total"] == c["reconstructed"] + c["not_reconstructed"] + c["errors"]

    def test_reports_are_byte_identical(self):
        a = json.dumps(sweep("single", "chi+1", catalog(4), [1, 2]).to_json(), sort_keys=True)
        b = json.dumps(sweep("single", "chi+1", catalog(4), [1, 2]).to_json(), sort_keys=True)
        assert a == b

    def test_parallel_sweep_keeps_order(self):
        graphs = catalog(3)
        serial = sweep("tar", "1", graphs, [1]).to_json()
        parallel = sweep("tar", "1", graphs, [1], jobs=2).to_json()
        assert serial == parallel


def run_cli(argv: list[str], stdin: str = "", monkeypatch=None) -> tuple[int, str, str]:
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), io.StringIO(), io.StringIO()
    try:
        code = cli.main(argv)
        return code, sys.stdout.getvalue(), sys.stderr.getvalue()
    finally:
        sys.stdin, sys.stdout, sys.stderr = old


class TestCli:
    def test_build_then_reconstruct(self):
        code, out, _ = run_cli(["build", "--kind", "single", "--k", "4"], "Bw\n")
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "single" and doc["n"] == 24 and len(doc["edges"]) == 36
        code, out, _ = run_cli(["reconstruct", "--seed", "3", "--expect", "Bw"], out)
        assert code == 0
        report = json.loads(out)
        assert report["isomorphic_to_expected"] is True
        assert report["output_graph6"] == "Bw"
        assert len(report["candidate_sizes"]) == 24

    def test_stripped_edgelist_pipeline(self):
        code, out, _ = run_cli(["build", "--kind", "tar", "--k", "1", "--seed", "2"], "Bg\n")
        assert code == 0
        code, out, _ = run_cli(["reconstruct", "--method", "tar", "--k", "1", "--expect", "Bg"], out)
        assert code == 0 and json.loads(out)["isomorphic_to_expected"]

    def test_reconstruct_mismatch_exit_code(self):
        _, out, _ = run_cli(["build", "--kind", "single", "--k", "2"], "Bg\n")
        code, _, _ = run_cli(["reconstruct", "--expect", "Bg"], out)
        assert code == 1

    def test_roundtrip_and_sweep(self):
        code, out, _ = run_cli(["roundtrip", "--method", "kempe", "--k", "chi+2"], "C~\n")
        assert code == 0 and json.loads(out)["reconstructed"]
        code, out, _ = run_cli(["sweep", "--method", "single", "--k", "chi+1", "--n-max", "3"])
        assert code == 0 and json.loads(out)["counts"]["reconstructed"] == 8

    def test_sweep_flags_unexpected_failures(self):
        code, out, _ = run_cli(["sweep", "--method", "single-fast", "--k", "min+1", "--n-max", "2"])
        assert code == 1
        assert json.loads(out)["counts"]["unexpected_failures"] == 2

    def test_construct(self):
        code, out, _ = run_cli(["construct", "mycielskian"], "A_\n")
        doc = json.loads(out)
        assert code == 0 and doc["chi"] == 3 and doc["n"] == 5 and doc["frozen"] == []
        code, out, _ = run_cli(["construct", "two", "--chi", "4", "--i", "1"])
        assert code == 0 and json.loads(out)["n"] == 11

    def test_verify_family_construction_two(self):
        code, out, _ = run_cli(["verify-family", "--construction", "two", "--chi", "4", "--members", "3"])
        doc = json.loads(out)
        assert code == 0 and doc["ok"]
        assert {c["relation"] for c in doc["comparisons"]} == {"restriction"}

    def test_input_and_cap_errors(self):
        code, _, err = run_cli(["build", "--kind", "single", "--k", "3"], "bad!\n")
        assert code == 2 and "byte" in err
        code, _, _ = run_cli(["build", "--kind", "single", "--k", "4", "--cap", "5"], "Bw\n")
        assert code == 3
        code, _, _ = run_cli(["construct", "twin", "--k", "3"], "Dhc\n")
        assert code == 1

    def test_dot_output(self, tmp_path):
        target = tmp_path / "g.dot"
        code, _, _ = run_cli(["build", "--kind", "single", "--k", "2", "--dot", "--out", str(target)], "A_\n")
        assert code == 0 and target.read_text().startswith("graph")

    def test_json_labels_match_builder(self):
        _, out, _ = run_cli(["build", "--kind", "single", "--k", "3"], "Bg\n")
        assert json.loads(out)["labels"][0] == "1,2,1"
        assert build_single(path_graph(3), 3).labels[0] == (1, 2, 1)
