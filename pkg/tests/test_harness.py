import json
import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromabound.enumerate import canonical_code, enumerate_hereditary
from chromabound.errors import CapabilityError, InputError
from chromabound.graph import Graph
from chromabound.io import decode_edgelist, encode_edgelist
from chromabound.harness import (
    SweepConfig,
    clique_orderings,
    generate_class_instances,
    merge_records,
    run_suite,
)
from chromabound.partition import clique_number
from chromabound.recognition import GraphClass, check_class

from conftest import graphs

# number of graphs on n vertices up to isomorphism
GRAPH_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


def _relabel(g, perm):
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@given(graphs(max_n=8), st.randoms())
def test_canonical_code_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_code(_relabel(g, perm)) == canonical_code(g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_code_separates(a, b):
    if a.n != b.n or a.m != b.m:
        assert canonical_code(a) != canonical_code(b)
        return
    es = {frozenset(e) for e in b.edges}
    iso = any({frozenset((p[u], p[v])) for u, v in a.edges} == es for p in permutations(range(a.n)))
    assert (canonical_code(a) == canonical_code(b)) == iso


def test_enumeration_counts_all_graphs():
    counts = [0] * 8
    for g in enumerate_hereditary(7, lambda g: True):
        counts[g.n] += 1
    assert counts[1:] == GRAPH_COUNTS


def test_enumeration_limit():
    with pytest.raises(CapabilityError) as err:
        list(enumerate_hereditary(9, lambda g: True))
    assert err.value.limit == 8
    with pytest.raises(CapabilityError):
        SweepConfig(GraphClass.P3P2_FREE, n_max=9).validate()


def test_p3p2_vacuous_below_five():
    cfg = SweepConfig(GraphClass.P3P2_FREE, 1, 4)
    assert len(list(generate_class_instances(cfg))) == 1 + 2 + 4 + 11


def test_2k2_diamond_n5_contains_c5():
    cfg = SweepConfig(GraphClass.TWO_K2_DIAMOND_FREE, 5, 5)
    c5 = canonical_code(Graph.cycle(5))
    assert any(canonical_code(g) == c5 for g in generate_class_instances(cfg))


def test_config_validation():
    with pytest.raises(InputError):
        SweepConfig(GraphClass.P3P2_FREE, mode="magic").validate()
    with pytest.raises(InputError):
        SweepConfig(GraphClass.P3P2_FREE, n_min=5, n_max=3).validate()
    with pytest.raises(InputError):
        SweepConfig(GraphClass.P3P2_FREE, orderings=0).validate()


@pytest.mark.parametrize("c", list(GraphClass), ids=lambda c: c.flag)
def test_random_instances_are_members_and_deterministic(c):
    cfg = SweepConfig(c, 3, 10, "random_sample", 40, seed=7)
    first = [encode_edgelist(g) for g in generate_class_instances(cfg)]
    again = [encode_edgelist(g) for g in generate_class_instances(cfg)]
    assert first == again and len(first) == 40
    assert all(check_class(decode_edgelist(e), c).member for e in first)


@pytest.mark.parametrize("c", [GraphClass.P3P2_DIAMOND_FREE, GraphClass.TWO_K2_DIAMOND_FREE], ids=lambda c: c.flag)
def test_structured_seeds_cover_small_omega(c):
    cfg = SweepConfig(c, 2, 12, "random_sample", 60, seed=0)
    seen = {clique_number(g) for g in generate_class_instances(cfg)}
    assert {2, 3, 4} <= seen


def test_orderings_all_and_sampled():
    g = Graph.complete(5)
    assert len(clique_orderings(g, "all", random.Random(0))) == 120
    assert len(clique_orderings(g, "auto", random.Random(0))) == 6
    assert len(clique_orderings(Graph.complete(4), "auto", random.Random(0))) == 24
    assert len(clique_orderings(g, 3, random.Random(0))) == 3


def test_suite_small_sweep_passes():
    rep = run_suite(SweepConfig(GraphClass.TWO_K2_DIAMOND_FREE, 1, 6))
    assert rep.passed, rep.summary_text()
    assert rep.instances_tested == len(rep.records)
    assert rep.agreement_checked == rep.instances_tested


def test_report_is_byte_identical_and_order_independent():
    cfg = SweepConfig(GraphClass.P3P2_DIAMOND_FREE, 4, 9, "random_sample", 30, seed=3)
    a = run_suite(cfg)
    b = run_suite(cfg, workers=2)
    assert a.records_text() == b.records_text()
    shuffled = list(a.records)
    random.Random(1).shuffle(shuffled)
    assert merge_records(cfg, shuffled).records_text() == a.records_text()


def test_records_are_json_lines():
    rep = run_suite(SweepConfig(GraphClass.P3P2_FREE, 1, 5))
    lines = rep.records_text().splitlines()
    assert len(lines) == rep.instances_tested + 1
    assert "summary" in json.loads(lines[-1])
    for line in lines[:-1]:
        decode_edgelist(json.loads(line)["graph"])


def test_injection_reports_exactly_the_injected_instances():
    cfg = SweepConfig(GraphClass.TWO_K2_DIAMOND_FREE, 2, 5)
    graphs_ = list(generate_class_instances(cfg))
    targets = [i for i, g in enumerate(graphs_) if g.m][:5]
    rep = run_suite(cfg, inject=targets)
    hit = sorted({r["index"] for r in rep.records if r["failures"]})
    assert hit == targets
    for r in rep.records:
        for prop, wit in r["failures"]:
            assert prop.endswith("proper")
            g = decode_edgelist(r["graph"])
            u, v = json.loads(wit.split("edge=")[1])
            assert g.has_edge(u, v)


def test_non_member_instance_is_a_failure():
    cfg = SweepConfig(GraphClass.TWO_K2_FREE, 1, 6)
    rep = run_suite(cfg, instances=[Graph.from_edges(4, [(0, 1), (2, 3)])])
    assert not rep.passed
    assert rep.failures[0][1] == "class"

