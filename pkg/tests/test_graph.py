import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import random_graph, small_graphs
from subpath.graph import (
    Graph,
    GraphError,
    add_edge,
    complete_bipartite,
    complete_graph,
    count_triangles,
    cycle_graph,
    disjoint_union,
    encode_graph6,
    girth,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    relabel,
    remove_edge,
    star_graph,
    stats,
    to_edge_list,
)


# -- construction ------------------------------------------------------------


def test_from_edges_normalises_adjacency():
    g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 2)])
    assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]
    assert g.m == 3


@pytest.mark.parametrize(
    "edges, message",
    [([(1, 1)], "self-loop"), ([(0, 1), (1, 0)], "duplicate"), ([(0, 4)], "out of range")],
)
def test_from_edges_rejects(edges, message):
    with pytest.raises(GraphError, match=message):
        Graph.from_edges(4, edges)


def test_direct_constructor_checks_symmetry():
    with pytest.raises(GraphError, match="asymmetric"):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphError, match="increasing"):
        Graph(3, ((2, 1), (0,), (0,)))


def test_empty_and_single_vertex():
    assert Graph(0, ()).m == 0
    assert stats(Graph(1, ((),))).connected


# -- edge lists ------------------------------------------------------------------


def test_edge_list_with_directive_and_comments():
    g = parse_edge_list("# a path with an isolated vertex\nn=4\n0 1  # first\n1 2\n")
    assert g.n == 4 and list(g.edges()) == [(0, 1), (1, 2)]


def test_edge_list_infers_n():
    assert parse_edge_list("0 1\n1 5\n").n == 6
    assert parse_edge_list("").n == 0


@pytest.mark.parametrize(
    "text, lineno",
    [("0 1\n2 2\n", 2), ("0 1\n1 0\n", 2), ("n=3\n0 3\n", 2), ("0 1\nfoo\n", 2), ("n=x\n", 1)],
)
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphError, match=f"line {lineno}"):
        parse_edge_list(text)


def test_edge_list_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 12), 0.4)
        assert parse_edge_list(to_edge_list(g)) == g


# -- graph6 -------------------------------------------------------------------------


def test_graph6_known_strings():
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("D?{") == Graph.from_edges(5, [(v, 4) for v in range(4)])
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)
    assert parse_graph6("@") == Graph(1, ((),))
    assert encode_graph6(complete_graph(4)) == "C~"
    assert encode_graph6(Graph(0, ())) == "?"


def test_graph6_petersen_matches_networkx():
    h = nx.petersen_graph()
    text = nx.to_graph6_bytes(h, header=False).decode().strip()
    g = parse_graph6(text)
    assert g.n == 10 and g.m == 15 and girth(g) == 5
    assert encode_graph6(g) == text


@pytest.mark.parametrize("bad, message", [("C~x", "trailing"), ("D?", "truncated"), ("C\x01", "invalid")])
def test_graph6_errors(bad, message):
    with pytest.raises(GraphError, match=message):
        parse_graph6(bad)


def test_graph6_large_size_prefix():
    g = path_graph(70)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    assert nx.utils.graphs_equal(
        nx.from_graph6_bytes(text.encode()), nx.Graph(list(g.edges()))
    )


def test_graph6_seeded_round_trip_against_networkx():
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        text = encode_graph6(g)
        assert parse_graph6(text) == g
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert text == nx.to_graph6_bytes(h, header=False).decode().strip()


# -- statistics ------------------------------------------------------------------------


def test_stats_k4():
    s = stats(complete_graph(4))
    assert (s.m1, s.m2, s.triangles) == (36, 54, 4)
    assert s.bipartition is None and len(s.odd_cycle) == 3


def test_stats_bipartite_and_odd_cycle():
    s = stats(cycle_graph(6))
    assert s.bipartition is not None
    assert sorted(map(len, s.bipartition)) == [3, 3]
    odd = stats(cycle_graph(7)).odd_cycle
    assert len(odd) % 2 == 1
    g = cycle_graph(7)
    assert all(g.has_edge(odd[i], odd[(i + 1) % len(odd)]) for i in range(len(odd)))


@given(small_graphs(max_n=8))
def test_stats_invariants(g):
    s = stats(g)
    assert sum(s.degree_sequence) == 2 * s.m
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert s.triangles == sum(nx.triangles(h).values()) // 3
    assert s.connected == (g.n == 0 or nx.is_connected(h))
    assert (s.bipartition is not None) == nx.is_bipartite(h)
    if s.bipartition is not None:
        left, _ = s.bipartition
        assert all((u in left) != (v in left) for u, v in g.edges())


def test_girth():
    assert girth(path_graph(5)) is None
    assert girth(cycle_graph(9)) == 9
    assert girth(complete_bipartite(3, 3)) == 4


# -- builders ----------------------------------------------------------------------


def test_builders():
    assert complete_graph(5).m == 10
    kab = complete_bipartite(2, 3)
    assert kab.m == 6 and not kab.has_edge(0, 1) and kab.has_edge(0, 2)
    assert cycle_graph(3) == complete_graph(3)
    assert star_graph(3).degrees() == [3, 1, 1, 1]
    assert path_graph(1).m == 0


def test_edge_edits_and_union():
    g = add_edge(path_graph(4), 0, 3)
    assert g == cycle_graph(4)
    assert remove_edge(g, 0, 3) == path_graph(4)
    with pytest.raises(GraphError):
        add_edge(g, 0, 1)
    with pytest.raises(GraphError):
        remove_edge(g, 0, 2)
    u = disjoint_union(complete_graph(3), path_graph(2))
    assert u.n == 5 and u.m == 4 and not is_connected(u) and count_triangles(u) == 1


def test_relabel():
    g = path_graph(3)
    assert list(relabel(g, [1, 0, 2]).edges()) == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1])
