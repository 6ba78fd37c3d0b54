"""Shared strategies and brute-force oracles.

The oracles below are deliberately naive (permutations, full colour
enumeration) and share no code with the library they check.
"""

from itertools import combinations, permutations, product

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chromabound.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# pattern name -> (vertex count, edge list); written out by hand
ORACLE_PATTERNS = {
    "P2": (2, [(0, 1)]),
    "P3": (3, [(0, 1), (1, 2)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "TwoK2": (4, [(0, 1), (2, 3)]),
    "P3uP2": (5, [(0, 1), (1, 2), (3, 4)]),
    "P4uP2": (6, [(0, 1), (1, 2), (2, 3), (4, 5)]),
    "Diamond": (4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "C5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
}

ORACLE_CLASSES = {
    "p3p2": ["P3uP2"],
    "p4p2": ["P4uP2"],
    "2k2": ["TwoK2"],
    "p3p2diamond": ["P3uP2", "Diamond"],
    "2k2diamond": ["TwoK2", "Diamond"],
}


def edge_set(g):
    return {frozenset(e) for e in g.edges}


def oracle_contains(g, k, pattern_edges):
    """True when some k-subset induces a copy of the pattern."""
    es = edge_set(g)
    pe = {frozenset(e) for e in pattern_edges}
    for sub in combinations(range(g.n), k):
        for perm in permutations(sub):
            if all((frozenset((perm[a], perm[b])) in es) == (frozenset((a, b)) in pe)
                   for a, b in combinations(range(k), 2)):
                return True
    return False


def oracle_member(g, flag):
    return not any(oracle_contains(g, *ORACLE_PATTERNS[p]) for p in ORACLE_CLASSES[flag])


def oracle_omega(g):
    es = edge_set(g)
    best = 0
    for r in range(1, g.n + 1):
        if any(all(frozenset(p) in es for p in combinations(s, 2)) for s in combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def oracle_colourable(g, k):
    if g.n == 0:
        return True
    if k == 0:
        return False
    # vertex 0 takes colour 0 by symmetry
    for rest in product(range(k), repeat=g.n - 1):
        f = (0,) + rest
        if all(f[u] != f[v] for u, v in g.edges):
            return True
    return False


def oracle_chi(g):
    k = 0
    while not oracle_colourable(g, k):
        k += 1
    return k


def oracle_perfect(g):
    """chi == omega on every induced subgraph, by brute force."""
    from chromabound.graph import induced_subgraph
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            h = induced_subgraph(g, s)
            if oracle_chi(h) != oracle_omega(h):
                return False
    return True


@st.composite
def graphs(draw, min_n=0, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < p for _ in pairs]
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture
def tmp_graph_file(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


# -- acceptance summary ---------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _CRITERIA[n] = (rep.passed, item.name, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        passed, name, secs = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {name}  ({secs:.1f}s)")
