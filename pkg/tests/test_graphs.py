import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.generators.atlas import graph_atlas_g

from oriconvex.graphs import (
    Digraph,
    EdgeBudgetError,
    Graph,
    GraphFormatError,
    PartialOrientation,
    encode_graph6,
    end_vertices,
    enumerate_orientations,
    is_complete,
    is_connected,
    min_degree,
    orientation_count,
    orientation_from_index,
    parse_edge_list,
    parse_graph6,
    reverse,
)
from conftest import complete_graph, cycle_graph, path_graph

from _oracles import random_digraph


# ---------------------------------------------------------------------------
# graph6


def test_k3_encodes_as_Bw():
    k3 = complete_graph(3)
    assert encode_graph6(k3) == "Bw"
    assert parse_graph6("Bw") == k3


def test_single_vertex_is_at_sign():
    g = parse_graph6("@")
    assert g.n == 1 and g.edges == ()
    assert encode_graph6(g) == "@"


def test_b_underscore_is_single_edge_on_three_vertices():
    g = parse_graph6("B_")
    assert g.n == 3 and g.edges == ((0, 1),)


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("", "empty"),
        ("~", "long-form"),
        ("D", "truncated"),
        ("Bwz", "trailing garbage at byte 2"),
        ("B" + chr(50), "invalid graph6 data byte"),
        ("B" + chr(127), "invalid graph6 data byte"),
        ("B~", "nonzero padding"),
    ],
)
def test_parse_errors_name_the_byte(line, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_graph6(line)


def test_round_trip_against_atlas_via_networkx():
    # networkx is the independent encoder/decoder for the whole atlas corpus
    for ag in graph_atlas_g()[1:]:
        ag = nx.convert_node_labels_to_integers(ag)
        line = nx.to_graph6_bytes(ag, header=False).decode().strip()
        g = parse_graph6(line)
        assert g.n == ag.number_of_nodes()
        assert set(g.edges) == {(min(u, v), max(u, v)) for u, v in ag.edges()}
        assert encode_graph6(g) == line


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 20), st.randoms(use_true_random=False))
def test_round_trip_random_graphs(n, rnd):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5
    ]
    g = Graph.from_edges(n, edges)
    line = encode_graph6(g)
    assert parse_graph6(line) == g
    back = nx.from_graph6_bytes(line.encode())
    assert {(min(u, v), max(u, v)) for u, v in back.edges()} == set(g.edges)


# ---------------------------------------------------------------------------
# edge lists


def test_edge_list_p3():
    assert parse_edge_list("3\n0 1\n1 2") == path_graph(3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3\n0 1\n0 1", "duplicate edge"),
        ("2\n0 2", "out of range"),
        ("2\n1 1", "self-loop"),
        ("x", "expected vertex count"),
        ("3\n0 1 2", "expected 'u v'"),
        ("", "missing vertex count"),
    ],
)
def test_edge_list_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_edge_list(text)


def test_edge_list_tolerates_blank_lines():
    assert parse_edge_list("\n3\n\n0 1\n\n1 2\n") == path_graph(3)


# ---------------------------------------------------------------------------
# predicates


def test_p3_predicates():
    p3 = path_graph(3)
    assert is_connected(p3)
    assert end_vertices(p3) == {0, 2}
    assert min_degree(p3) == 1
    assert not is_complete(p3)


def test_c4_predicates():
    c4 = cycle_graph(4)
    assert is_connected(c4)
    assert end_vertices(c4) == frozenset()
    assert min_degree(c4) == 2


def test_k4_is_complete():
    assert is_complete(complete_graph(4))


def test_disconnected_detected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(g)


# ---------------------------------------------------------------------------
# graph construction invariants


def test_rejects_self_loop_and_duplicates():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_digraph_allows_two_cycles_but_not_loops():
    d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    assert d.has_arc(0, 1) and d.has_arc(1, 0)
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 0)])
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(0, 1), (0, 1)])


# ---------------------------------------------------------------------------
# orientations


def test_p3_orientation_counts():
    p3 = path_graph(3)
    assert len(list(enumerate_orientations(p3))) == 4
    assert len(list(enumerate_orientations(p3, use_reversal_symmetry=True))) == 2


def test_k3_has_two_directed_triangles():
    k3 = complete_graph(3)
    all_orients = list(enumerate_orientations(k3))
    assert len(all_orients) == 8
    triangles = [
        d for d in all_orients
        if all(d.out_degree(v) == 1 and d.in_degree(v) == 1 for v in range(3))
    ]
    assert len(triangles) == 2


def test_every_orientation_has_the_right_underlying_graph():
    g = cycle_graph(4)
    for d in enumerate_orientations(g):
        assert d.is_orientation_of(g)
        assert d.underlying_graph() == g


def test_orientations_are_distinct():
    g = cycle_graph(4)
    seen = {d.arcs for d in enumerate_orientations(g)}
    assert len(seen) == 16


def test_symmetry_halving_covers_everything_up_to_reversal():
    g = cycle_graph(4)
    full = {d.arcs for d in enumerate_orientations(g)}
    half = list(enumerate_orientations(g, use_reversal_symmetry=True))
    assert len(half) == 8
    covered = {d.arcs for d in half} | {reverse(d).arcs for d in half}
    assert covered == full


def test_edge_budget_refusal_names_requirement():
    g = complete_graph(7)  # 21 edges
    with pytest.raises(EdgeBudgetError) as exc:
        list(enumerate_orientations(g))
    assert exc.value.required_budget == 21
    overridden = enumerate_orientations(g, edge_budget=21)
    assert len(list(itertools.islice(overridden, 3))) == 3


def test_orientation_index_bounds():
    g = path_graph(3)
    with pytest.raises(ValueError):
        orientation_from_index(g, 4)
    with pytest.raises(ValueError):
        orientation_from_index(g, 2, use_reversal_symmetry=True)
    assert orientation_count(g) == 4


def test_edgeless_graph_has_one_orientation():
    g = Graph.from_edges(3, [])
    assert [d.arcs for d in enumerate_orientations(g)] == [()]
    assert [d.arcs for d in enumerate_orientations(g, use_reversal_symmetry=True)] == [()]


# ---------------------------------------------------------------------------
# reversal


def test_reverse_directed_triangle():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert reverse(d).arcs == ((0, 2), (1, 0), (2, 1))


def test_reverse_is_an_involution():
    rng = random.Random(7)
    for _ in range(50):
        d = random_digraph(rng, rng.randint(1, 7))
        assert reverse(reverse(d)) == d


# ---------------------------------------------------------------------------
# partial orientations


def test_partial_orientation_tracks_or_vertices():
    g = cycle_graph(4)
    po = PartialOrientation(g)
    assert po.or_vertices() == frozenset()
    po.orient(1, 0)
    assert po.is_or_vertex(0) and po.is_or_vertex(1) and not po.is_or_vertex(2)
    assert po.direction(0, 1) == (1, 0)
    with pytest.raises(ValueError):
        po.orient(0, 1)  # already oriented
    with pytest.raises(ValueError):
        po.orient(0, 2)  # not an edge
    with pytest.raises(ValueError):
        po.to_digraph()  # incomplete
    po.orient(1, 2)
    po.orient(2, 3)
    po.orient(3, 0)
    assert po.to_digraph().arcs == ((1, 0), (1, 2), (2, 3), (3, 0))
