import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import decode_graph6
from subcolor.core import (Graph, GraphFormatError, disjoint_union, load_adjlist, load_graph6,
                           load_graph_text, save_adjlist, save_graph6, to_dot)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_edges_are_normalised_and_deduplicated():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edge_list() == [(0, 1), (1, 2)]
    assert g.m == 2
    assert g.neighbors(1) == {0, 2}


def test_loops_and_out_of_range_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_induced_subgraph_and_relabel():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    sub, old = g.induced_subgraph([3, 1, 2])
    assert old == [1, 2, 3]
    assert sub.edge_list() == [(0, 1), (1, 2)]
    rev = g.relabel([3, 2, 1, 0])
    assert rev.edge_list() == [(0, 1), (1, 2), (2, 3)]


def test_components_and_union():
    g, offsets = disjoint_union(Graph(2, [(0, 1)]), Graph(3, [(0, 2)]))
    assert offsets == [0, 2]
    assert sorted(map(sorted, g.components())) == [[0, 1], [2, 4], [3]]
    assert not g.is_connected()


def test_graph6_known_string():
    # star centred at vertex 4 on five vertices
    g = load_graph6("D?{")
    assert g.n == 5
    assert g.edge_list() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert save_graph6(g) == "D?{"


@settings(max_examples=200)
@given(graphs())
def test_graph6_round_trip_and_independent_decoder(g):
    text = save_graph6(g)
    assert load_graph6(text) == g
    n, edges = decode_graph6(text)
    assert Graph(n, edges) == g
    ng = nx.from_graph6_bytes(text.encode()) if g.n else None
    if ng is not None:
        assert sorted(tuple(sorted(e)) for e in ng.edges()) == g.edge_list()


def test_graph6_large_size_prefix():
    g = Graph(100, [(0, 99), (5, 6)])
    text = save_graph6(g)
    assert text.startswith("~")
    assert load_graph6(text) == g


@pytest.mark.parametrize("text,offset", [("D?", 2), ("D?{{", 3), ("D?\x10", 2), ("", 0)])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(GraphFormatError) as info:
        load_graph6(text)
    assert info.value.offset == offset


def test_graph6_nonzero_padding_rejected():
    # n=2 has one adjacency bit; the remaining five must be zero
    with pytest.raises(GraphFormatError):
        load_graph6("A" + chr(63 + 0b100001))


@settings(max_examples=100)
@given(graphs())
def test_adjlist_round_trip(g):
    assert load_adjlist(save_adjlist(g)) == g
    assert load_graph_text(save_adjlist(g)) == g


def test_adjlist_errors():
    with pytest.raises(GraphFormatError):
        load_adjlist("3 2\n0 1\n")
    with pytest.raises(GraphFormatError) as info:
        load_adjlist("3 1\n0 7\n")
    assert info.value.offset == 4


def test_dot_output_mentions_every_edge():
    dot = to_dot(Graph(3, [(0, 1), (1, 2)]), labels={0: "a"})
    assert '0 [label="a"]' in dot
    assert "0 -- 1;" in dot and "1 -- 2;" in dot
