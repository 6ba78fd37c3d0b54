import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromabound.errors import CapabilityError, InputError
from chromabound.graph import Graph, complement, disjoint_union, fixture, induced_subgraph, join
from chromabound.recognition import (
    C5,
    DIAMOND,
    P3UP2,
    P4UP2,
    TWO_K2,
    GraphClass,
    Pattern,
    Witness,
    check_class,
    find_induced,
    is_perfect_small,
    witness_holds,
)

from conftest import ORACLE_PATTERNS, graphs, oracle_contains, oracle_member, oracle_perfect


def test_pattern_sizes():
    assert P3UP2.size == 5 and P4UP2.size == 6 and DIAMOND.size == 4
    assert Pattern.hole(7).size == 7
    assert len(Pattern.antihole(7).edges) == 21 - 7


def test_pattern_validation():
    with pytest.raises(InputError):
        Pattern.hole(4)
    with pytest.raises(InputError):
        Pattern("K7")


def test_p3p2_contains_itself():
    g = disjoint_union(Graph.path(3), Graph.path(2))
    rep = check_class(g, GraphClass.P3P2_FREE)
    assert not rep.member
    assert rep.witness.vertices == (0, 1, 2, 3, 4)


def test_c5_is_2k2_diamond_free():
    assert check_class(Graph.cycle(5), GraphClass.TWO_K2_DIAMOND_FREE).member
    assert not check_class(Graph.cycle(6), GraphClass.TWO_K2_FREE).member


def test_diamond_witness_order():
    # K4 minus edge 0-3
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    w = find_induced(g, DIAMOND)
    assert w.vertices == (0, 1, 2, 3)


def test_least_witness_is_lexicographic():
    g = Graph.cycle(8)
    w = find_induced(g, TWO_K2)
    assert w.vertices == (0, 1, 3, 4)


def test_from_flag():
    assert GraphClass.from_flag("2k2diamond") is GraphClass.TWO_K2_DIAMOND_FREE
    with pytest.raises(InputError):
        GraphClass.from_flag("claw")


@pytest.mark.parametrize("name", sorted(ORACLE_PATTERNS))
@given(g=graphs(max_n=7))
def test_find_induced_agrees_with_brute_force(name, g):
    k, edges = ORACLE_PATTERNS[name]
    w = find_induced(g, Pattern(name))
    assert (w is not None) == oracle_contains(g, k, edges)
    if w is not None:
        assert witness_holds(g, w)


@pytest.mark.parametrize("c", list(GraphClass), ids=lambda c: c.flag)
@given(g=graphs(max_n=7))
def test_class_membership_agrees_with_brute_force(c, g):
    assert check_class(g, c).member == oracle_member(g, c.flag)


@pytest.mark.parametrize("c", list(GraphClass), ids=lambda c: c.flag)
@given(g=graphs(min_n=1, max_n=8), data=st.data())
def test_membership_is_hereditary(c, g, data):
    if not check_class(g, c).member:
        return
    keep = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert check_class(induced_subgraph(g, keep), c).member


def test_witness_holds_rejects_wrong_vertices():
    g = Graph.cycle(5)
    assert witness_holds(g, Witness(C5, (0, 1, 2, 3, 4)))
    assert not witness_holds(g, Witness(C5, (0, 2, 4, 1, 3)))


# -- perfectness --

def test_odd_hole_and_antihole_are_imperfect():
    ok, w = is_perfect_small(Graph.cycle(7))
    assert not ok and w.pattern == Pattern.hole(7)
    ok, w = is_perfect_small(complement(Graph.cycle(7)))
    assert not ok and w.pattern == Pattern.antihole(7)
    assert witness_holds(complement(Graph.cycle(7)), w)


def test_even_hole_is_perfect():
    assert is_perfect_small(Graph.cycle(6))[0]
    assert is_perfect_small(Graph.cycle(6), "subgraph_sweep")[0]


def test_sweep_witness_is_cycle():
    ok, w = is_perfect_small(fixture("fig5_base"), "subgraph_sweep")
    assert not ok
    assert w.pattern == C5 or w.pattern == Pattern.hole(5)
    assert sorted(w.vertices) == [0, 1, 2, 3, 4]


def test_mode_limits():
    with pytest.raises(CapabilityError) as err:
        is_perfect_small(Graph.empty(13), "subgraph_sweep")
    assert err.value.limit == 12
    with pytest.raises(CapabilityError):
        is_perfect_small(Graph.empty(65), "hole_search")
    with pytest.raises(InputError):
        is_perfect_small(Graph.empty(3), "magic")


@settings(max_examples=40)
@given(graphs(max_n=6))
def test_perfectness_agrees_with_brute_force(g):
    expect = oracle_perfect(g)
    assert is_perfect_small(g, "hole_search")[0] == expect
    assert is_perfect_small(g, "subgraph_sweep")[0] == expect


@given(graphs(max_n=9))
def test_perfectness_modes_agree(g):
    a, wa = is_perfect_small(g, "hole_search")
    b, wb = is_perfect_small(g, "subgraph_sweep")
    assert a == b
    for w in (wa, wb):
        if w is not None:
            assert witness_holds(g, w)


@given(graphs(max_n=5), graphs(max_n=4))
def test_join_of_perfect_graphs_stays_perfect(a, b):
    if is_perfect_small(a)[0] and is_perfect_small(b)[0]:
        assert is_perfect_small(join(a, b))[0]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_fig5_circled_blow_ups_stay_in_class(k):
    from chromabound.graph import FIG5_CIRCLED, multiply_vertex
    g = fixture("fig5_base")
    for v in FIG5_CIRCLED:
        assert check_class(multiply_vertex(g, v, k), GraphClass.TWO_K2_DIAMOND_FREE).member


def test_uncircled_blow_up_makes_diamond():
    from chromabound.graph import multiply_vertex
    g = fixture("fig5_base")
    for v in (0, 4, 5):  # BL, BR, c span a triangle; a twin of one of them closes a diamond
        rep = check_class(multiply_vertex(g, v, 2), GraphClass.TWO_K2_DIAMOND_FREE)
        assert rep.witness.pattern == DIAMOND
        assert set(rep.witness.vertices) == {0, 4, 5, 6}
