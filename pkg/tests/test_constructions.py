from __future__ import annotations

import pytest

from recongraph.chromatic import chromatic_number
from recongraph.colouring import always_distinct_pairs, frozen_vertices
from recongraph.constructions import (
    FamilySpec,
    construction_one,
    construction_one_blocks,
    construction_two,
    frozen_twin,
    iterated_mycielskian,
    join_padding,
    mycielskian,
    verify_same_reconfig,
)
from recongraph.errors import NoFrozenVertex, PreconditionViolated
from recongraph.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from recongraph.iso import is_isomorphic
from recongraph.reconfig import build_single, build_token


def test_mycielskian_examples():
    m = mycielskian(cycle_graph(5))
    assert (m.n, m.m) == (11, 20)
    assert chromatic_number(m) == 4
    k1 = mycielskian(Graph(1))
    assert (k1.n, k1.m) == (3, 1) and k1.has_edge(1, 2)
    assert chromatic_number(k1) == 2
    assert is_isomorphic(mycielskian(complete_graph(2)), cycle_graph(5)) is not None


def test_mycielskian_raises_chromatic_number_and_has_no_frozen_vertex():
    assert frozen_vertices(cycle_graph(5), 3) == set()
    assert frozen_vertices(mycielskian(cycle_graph(5)), 4) == set()
    g = iterated_mycielskian(cycle_graph(5), 2)
    assert (g.n, chromatic_number(g)) == (23, 5)


def test_frozen_twin_examples():
    diamond = frozen_twin(complete_graph(3), 3)
    assert (diamond.n, diamond.m) == (4, 5)
    a, b = build_single(complete_graph(3), 3), build_single(diamond, 3)
    assert (a.n, a.m) == (b.n, b.m) == (6, 0)
    with pytest.raises(NoFrozenVertex):
        frozen_twin(cycle_graph(5), 3)
    p3 = frozen_twin(complete_graph(2), 2)
    assert is_isomorphic(p3, path_graph(3)) is not None
    assert (build_single(p3, 2).n, build_single(p3, 2).m) == (2, 0)


def test_family_spec_validation():
    with pytest.raises(PreconditionViolated):
        FamilySpec(6, 2, Graph(1), Graph(1)).validate()
    with pytest.raises(PreconditionViolated):
        FamilySpec(5, 3, Graph(1), Graph(1)).validate()
    with pytest.raises(PreconditionViolated):
        FamilySpec(6, 3, complete_graph(3), Graph(1)).validate()
    with pytest.raises(PreconditionViolated):
        FamilySpec(6, 3, Graph(1), Graph(1), [(0, 1)]).validate()


def test_construction_one_base_member():
    spec = FamilySpec(6, 3, Graph(1), Graph(1))
    g = construction_one(spec)
    assert g.n == 12
    assert chromatic_number(g) == 6
    blocks = construction_one_blocks(spec)
    pair = (blocks.h0[0], blocks.h3[0])
    assert pair in always_distinct_pairs(g, 6)


def test_construction_one_edge_addition_keeps_recolouring_graph():
    g0 = construction_one(FamilySpec(6, 3, Graph(1), Graph(1)))
    g1 = construction_one(FamilySpec(6, 3, Graph(1), Graph(1), [(0, 0)]))
    assert g1.m == g0.m + 1
    report = verify_same_reconfig(g0, g1, "single", 6)
    assert report.relation == "identical"


def test_construction_two_examples():
    g0, g1 = construction_two(4, 0), construction_two(4, 1)
    assert (g0.n, g1.n) == (10, 11)
    assert chromatic_number(g0) == chromatic_number(g1) == 4
    report = verify_same_reconfig(g0, g1, "single", 4)
    assert report.relation == "restriction"
    with pytest.raises(PreconditionViolated):
        construction_two(3, 0)


def test_join_padding_examples():
    padded = join_padding(path_graph(4), 2, complete_graph(3))
    assert padded.n == 7
    assert build_token(padded, 2, "tj").digest() == build_token(path_graph(4), 2, "tj").digest()
    c5 = join_padding(cycle_graph(5), 2, Graph(1))
    assert build_token(c5, 2, "tj").digest() == build_token(cycle_graph(5), 2, "tj").digest()
    with pytest.raises(PreconditionViolated):
        join_padding(path_graph(4), 2, empty_graph(2))
    with pytest.raises(PreconditionViolated):
        join_padding(path_graph(4), 1, Graph(1))


def test_verify_same_reconfig_examples():
    diamond = frozen_twin(complete_graph(3), 3)
    rep = verify_same_reconfig(complete_graph(3), diamond, "single", 3)
    assert rep.same and rep.relation in ("restriction", "isomorphic")
    rep = verify_same_reconfig(path_graph(3), cycle_graph(5), "single", 3)
    assert not rep.same and rep.relation == "different"


def test_restriction_witness_maps_colourings():
    g0, g1 = construction_two(4, 0), construction_two(4, 1)
    rep = verify_same_reconfig(g0, g1, "single", 4)
    a, b = build_single(g0, 4), build_single(g1, 4)
    # the witness maps each colouring of G_0 to the G_1 colouring that restricts to it
    assert sorted(rep.witness) == list(range(a.n))
    assert all(b.labels[j][: g0.n] == a.labels[i] for i, j in enumerate(rep.witness))
