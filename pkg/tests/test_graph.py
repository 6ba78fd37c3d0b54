from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromabound.errors import InputError
from chromabound.graph import (
    FIG5_CIRCLED,
    Graph,
    complement,
    disjoint_union,
    fig5_blowup,
    fixture,
    induced_subgraph,
    join,
    multiply_vertex,
)
from chromabound.io import (
    GraphFormatError,
    decode_edgelist,
    encode_edgelist,
    format_colouring,
    format_dimacs,
    format_dot,
    format_edgelist,
    parse_colouring,
    parse_dimacs,
    parse_edgelist,
    read_graph,
)

from conftest import edge_set, graphs


def test_constructors():
    assert Graph.complete(4).m == 6
    assert Graph.empty(5).m == 0
    assert Graph.path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert Graph.cycle(5).m == 5
    with pytest.raises(InputError):
        Graph.cycle(2)


def test_validation_rejects_bad_adjacency():
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))
    with pytest.raises(InputError):
        Graph(1, (0b1,))
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])


def test_induced_subgraph_relabels_in_order():
    g = Graph.cycle(5)
    h = induced_subgraph(g, [4, 0, 1])
    assert h.n == 3
    assert edge_set(h) == {frozenset((0, 1)), frozenset((0, 2))}
    with pytest.raises(InputError):
        induced_subgraph(g, [7])


def test_mycielski_fixture():
    g = fixture("mycielski_grotzsch")
    assert (g.n, g.m) == (11, 20)
    assert g.labels[10] == "w"
    assert g.degree(10) == 5


def test_fig5_fixture_shape():
    g = fixture("fig5_base")
    assert (g.n, g.m) == (6, 8)
    assert [g.labels[v] for v in FIG5_CIRCLED] == ["L", "T", "R"]


def test_fig5_blowup_sizes():
    assert fig5_blowup(1).n == 6
    assert fig5_blowup(3).n == 12
    assert fig5_blowup((1, 2, 4)).n == 10


def test_unknown_fixture():
    with pytest.raises(InputError):
        fixture("petersen")


@given(graphs(max_n=7))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(max_n=5), graphs(max_n=5))
def test_union_and_join_edge_counts(a, b):
    assert disjoint_union(a, b).m == a.m + b.m
    assert join(a, b).m == a.m + b.m + a.n * b.n
    assert complement(join(a, b)) == disjoint_union(complement(a), complement(b))


@given(graphs(min_n=1, max_n=7), st.data())
def test_multiply_vertex_twins(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    k = data.draw(st.integers(1, 3))
    h = multiply_vertex(g, v, k)
    assert h.n == g.n + k - 1
    assert induced_subgraph(h, range(g.n)) == g
    for copy in range(g.n, h.n):
        assert set(h.neighbours(copy)) == set(g.neighbours(v))
        assert not h.has_edge(v, copy)


def test_multiply_vertex_rejects_zero():
    with pytest.raises(InputError):
        multiply_vertex(Graph.path(3), 1, 0)


@given(graphs(max_n=8))
def test_induced_subgraph_matches_edges(g):
    keep = [v for v in range(g.n) if v % 2 == 0]
    h = induced_subgraph(g, keep)
    expect = {frozenset((keep.index(u), keep.index(v))) for u, v in combinations(keep, 2) if g.has_edge(u, v)}
    assert edge_set(h) == expect


# -- io --

@given(graphs(max_n=9))
def test_dimacs_round_trip(g):
    assert parse_dimacs(format_dimacs(g)) == g


@given(graphs(max_n=9))
def test_edgelist_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g
    assert decode_edgelist(encode_edgelist(g)) == g


def test_dimacs_reports_line_number():
    with pytest.raises(GraphFormatError) as err:
        parse_dimacs("c hi\np edge 3 1\ne 1 x\n")
    assert err.value.lineno == 3
    with pytest.raises(GraphFormatError) as err:
        parse_dimacs("p edge 3 1\ne 1 4\n")
    assert err.value.lineno == 2


def test_edgelist_reports_line_number():
    with pytest.raises(GraphFormatError) as err:
        parse_edgelist("0 1\n1 2 3\n")
    assert err.value.lineno == 2


def test_read_graph_autodetects(tmp_graph_file):
    g = fixture("fig5_base")
    assert read_graph(tmp_graph_file(format_dimacs(g), "a.col")) == g
    assert read_graph(tmp_graph_file(format_edgelist(g), "a.txt")) == g


def test_colouring_file_round_trip():
    f = {0: 1, 1: 2, 2: 1}
    text = format_colouring(f, ["colours_used=2"])
    assert text.startswith("# colours_used=2")
    assert parse_colouring(text) == f


def test_dot_mentions_every_edge():
    g = Graph.path(3)
    dot = format_dot(g, {0: 1, 1: 2, 2: 1})
    assert "0 -- 1" in dot and "1 -- 2" in dot
