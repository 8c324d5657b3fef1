import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from permlab.graphs import (
    VertexLabeledGraph,
    complete_graph,
    enumerate_maximal,
    export_graph,
    is_maximal,
    is_permutation_labeling,
    maximal_graph,
    parse_edge_list,
)
from permlab.labels import CapError, build_collision_table, distinct_value_count

K6 = set(itertools.combinations(range(1, 7), 2))
FIG1_A = K6 - {(1, 6), (3, 6)}
FIG1_B = K6 - {(1, 6), (4, 5)}


def test_complete_graphs():
    assert is_permutation_labeling(complete_graph(5))
    assert not is_permutation_labeling(complete_graph(6))


@pytest.mark.parametrize("edges", [FIG1_A, FIG1_B])
def test_figure_graphs(edges):
    g = VertexLabeledGraph(6, edges)
    assert len(g.edges) == 13
    assert is_permutation_labeling(g)
    assert is_maximal(g)


def test_k5_maximal():
    assert is_maximal(complete_graph(5))


def test_removing_edge_breaks_maximality():
    g = VertexLabeledGraph(6, FIG1_A).without(2, 3)
    assert is_permutation_labeling(g)
    assert not is_maximal(g)


def test_is_maximal_rejects_invalid():
    with pytest.raises(ValueError):
        is_maximal(complete_graph(6))


def test_non_identity_labeling():
    # swapping labels 1 and 2 moves the collisions onto other vertex pairs
    labeling = {1: 2, 2: 1, 3: 3, 4: 4, 5: 5, 6: 6}
    g = VertexLabeledGraph(6, K6 - {(1, 3), (3, 6)}, labeling)
    assert g.edge_label(1, 3) == 6 == g.edge_label(2, 6)
    assert is_permutation_labeling(g)
    assert is_maximal(g)
    assert not is_permutation_labeling(VertexLabeledGraph(6, K6 - {(3, 6)}, labeling))


def test_graph_validation():
    with pytest.raises(ValueError):
        VertexLabeledGraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        VertexLabeledGraph(3, [(1, 4)])
    with pytest.raises(ValueError):
        VertexLabeledGraph(3, [], labeling=[1, 1, 2])


def test_maximal_graph_policies():
    g = maximal_graph(6, "lex-min")
    assert len(g.edges) == 13
    assert {(2, 3), (4, 5)} <= g.edges
    assert not {(1, 6), (3, 6)} & g.edges
    assert {(1, 6), (3, 6)} <= maximal_graph(6, "lex-max").edges
    for policy in ("lex-min", "lex-max", "random"):
        assert maximal_graph(5, policy).edges == complete_graph(5).edges


def test_maximal_graph_unknown_policy():
    with pytest.raises(ValueError):
        maximal_graph(6, "greedy")


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 60), st.sampled_from(["lex-min", "lex-max", "random"]), st.integers(0, 10**6))
def test_maximal_graph_invariants(n, policy, seed):
    g = maximal_graph(n, policy, seed)
    assert len(g.edges) == distinct_value_count(n)
    assert is_permutation_labeling(g)
    assert is_maximal(g)
    assert maximal_graph(n, policy, seed) == g


def test_enumerate_n6():
    graphs = list(enumerate_maximal(6))
    assert len(graphs) == 4
    assert all(len(g.edges) == 13 for g in graphs)
    edge_sets = [set(g.edges) for g in graphs]
    assert FIG1_A in edge_sets and FIG1_B in edge_sets


def test_enumerate_n5():
    assert [g.edges for g in enumerate_maximal(5)] == [complete_graph(5).edges]


@pytest.mark.parametrize("n", range(2, 13))
def test_enumerate_invariants(n):
    graphs = list(enumerate_maximal(n))
    sizes = [len(c) for c in build_collision_table(n).classes.values()]
    assert len(graphs) == math.prod(sizes)
    assert len({g.edges for g in graphs}) == len(graphs)
    for g in graphs:
        assert is_permutation_labeling(g) and is_maximal(g)


def test_remove_from_large_class():
    n = 12
    g = maximal_graph(n)
    table = build_collision_table(n)
    for pairs in table.classes.values():
        if len(pairs) < 2:
            continue
        e = next((p.low, p.high) for p in pairs if (p.low, p.high) in g.edges)
        h = g.without(*e)
        assert is_permutation_labeling(h) and not is_maximal(h)


def test_enumerate_caps():
    with pytest.raises(CapError):
        list(enumerate_maximal(13))
    with pytest.raises(CapError):
        list(enumerate_maximal(6, max_graphs=3))


def test_export_edge_list():
    k3 = complete_graph(3)
    assert export_graph(k3, "edge-list") == "1 2\n1 3\n2 3\n"
    assert export_graph(k3, "edge_list") == "1 2\n1 3\n2 3\n"
    lines = export_graph(VertexLabeledGraph(6, FIG1_A)).splitlines()
    assert len(lines) == 13 and lines == sorted(lines, key=lambda s: tuple(map(int, s.split())))


def test_export_dot():
    dot = export_graph(VertexLabeledGraph(2, [(1, 2)]), "dot")
    assert dot.startswith("graph G {")
    assert dot.count("--") == 1
    assert '1 [label="1"]' in dot


def test_parse_roundtrip():
    g = VertexLabeledGraph(6, FIG1_B)
    back = parse_edge_list("# fig 1, right\n" + export_graph(g), n=6)
    assert back == g
    assert parse_edge_list("1 2\n2 3\n").n == 3
    with pytest.raises(ValueError):
        parse_edge_list("1 2 3\n")
