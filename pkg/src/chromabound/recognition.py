"""Induced-subgraph search for fixed small patterns, class membership, perfectness.

Every pattern has a canonical vertex order (see the table of fixed patterns);
a witness is a tuple of graph vertices listed in that order.
Searches fill the pattern positions one at a time, smallest vertex first, so
the first hit is the lexicographically least witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import CapabilityError, InputError
from .graph import Graph, bits, complement

SWEEP_LIMIT = 12
HOLE_LIMIT = 64


@dataclass(frozen=True, order=True)
class Pattern:
    tag: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.tag in ("HoleK", "AntiholeK"):
            if self.k is None or self.k < 5:
                raise InputError(f"{self.tag} needs k >= 5")
        elif self.tag not in _FIXED:
            raise InputError(f"unknown pattern {self.tag!r}")
        elif self.k is not None:
            raise InputError(f"{self.tag} takes no parameter")

    @classmethod
    def hole(cls, k: int) -> "Pattern":
        return cls("HoleK", k)

    @classmethod
    def antihole(cls, k: int) -> "Pattern":
        return cls("AntiholeK", k)

    @property
    def size(self) -> int:
        return _size_and_edges(self)[0]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return _size_and_edges(self)[1]

    def __str__(self):
        return self.tag if self.k is None else f"{self.tag}({self.k})"


def _cycle_edges(k):
    return {(i, i + 1) for i in range(k - 1)} | {(0, k - 1)}


# canonical orders:
#   P_n: the path in order; TwoK2: (a, b, c, d) with edges ab, cd;
#   P3uP2: path a-b-c then edge d-e; P4uP2: path a-b-c-d then edge e-f;
#   Diamond: (a, b, c, d) with central edge bc, a and d the non-adjacent pair;
#   C5 / HoleK: cyclic order; AntiholeK: cyclic order of the complement cycle.
_FIXED = {
    "P2": (2, {(0, 1)}),
    "P3": (3, {(0, 1), (1, 2)}),
    "P4": (4, {(0, 1), (1, 2), (2, 3)}),
    "TwoK2": (4, {(0, 1), (2, 3)}),
    "P3uP2": (5, {(0, 1), (1, 2), (3, 4)}),
    "P4uP2": (6, {(0, 1), (1, 2), (2, 3), (4, 5)}),
    "Diamond": (4, {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}),
    "C5": (5, _cycle_edges(5)),
}


@lru_cache(maxsize=None)
def _size_and_edges(p: Pattern):
    if p.tag == "HoleK":
        return p.k, frozenset(_cycle_edges(p.k))
    if p.tag == "AntiholeK":
        cyc = _cycle_edges(p.k)
        return p.k, frozenset((i, j) for i in range(p.k) for j in range(i + 1, p.k) if (i, j) not in cyc)
    size, edges = _FIXED[p.tag]
    return size, frozenset(edges)


P2, P3, P4 = Pattern("P2"), Pattern("P3"), Pattern("P4")
TWO_K2 = Pattern("TwoK2")
P3UP2, P4UP2 = Pattern("P3uP2"), Pattern("P4uP2")
DIAMOND = Pattern("Diamond")
C5 = Pattern("C5")


@dataclass(frozen=True)
class Witness:
    pattern: Optional[Pattern]
    vertices: tuple[int, ...]

    def __str__(self):
        return f"{self.pattern} at {list(self.vertices)}"


class GraphClass(enum.Enum):
    P3P2_FREE = ("p3p2", (P3UP2,))
    P4P2_FREE = ("p4p2", (P4UP2,))
    TWO_K2_FREE = ("2k2", (TWO_K2,))
    P3P2_DIAMOND_FREE = ("p3p2diamond", (P3UP2, DIAMOND))
    TWO_K2_DIAMOND_FREE = ("2k2diamond", (TWO_K2, DIAMOND))

    def __init__(self, flag, forbidden):
        self.flag = flag
        self.forbidden = forbidden

    @classmethod
    def from_flag(cls, flag: str) -> "GraphClass":
        for c in cls:
            if c.flag == flag or c.name.lower() == flag.lower():
                return c
        raise InputError(f"unknown class {flag!r}; choose from {[c.flag for c in cls]}")


@dataclass(frozen=True)
class ClassMembershipReport:
    graph_class: GraphClass
    member: bool
    witness: Optional[Witness] = None


def _position_plan(p: Pattern):
    """For each position t: (mask of earlier positions adjacent to t, non-adjacent ones)."""
    size, edges = _size_and_edges(p)
    plan = []
    for t in range(size):
        on = [s for s in range(t) if (s, t) in edges or (t, s) in edges]
        off = [s for s in range(t) if s not in on]
        plan.append((on, off))
    return plan


def find_induced(g: Graph, p: Pattern) -> Optional[Witness]:
    """Lexicographically least tuple inducing ``p`` in its canonical order, or None."""
    size = p.size
    if size > g.n:
        return None
    plan = _position_plan(p)
    adj = g.adj
    full = g.vertex_mask
    chosen = [0] * size

    def extend(t, used):
        on, off = plan[t]
        cand = full & ~used
        for s in on:
            cand &= adj[chosen[s]]
        for s in off:
            cand &= ~adj[chosen[s]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            chosen[t] = v
            if t + 1 == size or extend(t + 1, used | low):
                return True
            cand ^= low
        return False

    if extend(0, 0):
        return Witness(p, tuple(chosen))
    return None


def witness_holds(g: Graph, w: Witness) -> bool:
    """Re-check that ``w.vertices`` induce exactly the pattern's edges."""
    vs = w.vertices
    if w.pattern is None or len(vs) != w.pattern.size or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    edges = w.pattern.edges
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.has_edge(vs[i], vs[j]) != ((i, j) in edges):
                return False
    return True


def check_class(g: Graph, c: GraphClass) -> ClassMembershipReport:
    for p in c.forbidden:
        w = find_induced(g, p)
        if w is not None:
            return ClassMembershipReport(c, False, w)
    return ClassMembershipReport(c, True)


def is_member(g: Graph, c: GraphClass) -> bool:
    return check_class(g, c).member


# -- perfectness ----------------------------------------------------------------

def odd_hole_or_antihole(g: Graph) -> Optional[Witness]:
    """Shortest odd hole or odd antihole (holes first at each length)."""
    co = None
    for k in range(5, g.n + 1, 2):
        w = find_induced(g, Pattern.hole(k))
        if w is not None:
            return w
        if k > 5:  # C5 is self-complementary
            co = co or complement(g)
            w = find_induced(co, Pattern.hole(k))
            if w is not None:
                return Witness(Pattern.antihole(k), w.vertices)
    return None


def subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """Clique number and chromatic number of every induced subgraph, by subset DP.

    Index ``S`` of each table is the vertex bitmask of the subgraph.
    """
    n = g.n
    size = 1 << n
    adj = g.adj
    indep = bytearray(size)
    omega = [0] * size
    indep[0] = 1
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        indep[s] = indep[rest] and not adj[v] & rest
        o1, o2 = omega[rest], 1 + omega[rest & adj[v]]
        omega[s] = o1 if o1 > o2 else o2
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n + 1
        # independent sets containing the lowest vertex: low | t, t a submask of rest
        t = rest
        while True:
            if indep[low | t]:
                c = chi[rest & ~t] + 1
                if c < best:
                    best = c
                    if best == 1:
                        break
            if t == 0:
                break
            t = (t - 1) & rest
        chi[s] = best
    return omega, chi


def _cycle_order(nbrs: dict[int, list[int]]) -> Optional[list[int]]:
    if any(len(nb) != 2 for nb in nbrs.values()):
        return None
    start = min(nbrs)
    order, prev = [start], None
    cur = start
    while True:
        a, b = sorted(nbrs[cur])
        nxt = b if a == prev else a
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(nbrs) else None


def _as_cycle_witness(g: Graph, s: int) -> Witness:
    """Label a minimal imperfect vertex set as the hole or antihole it induces."""
    vs = list(bits(s))
    order = _cycle_order({v: list(bits(g.adj[v] & s)) for v in vs})
    if order is not None:
        return Witness(Pattern.hole(len(vs)), tuple(order))
    order = _cycle_order({v: list(bits(s & ~g.adj[v] & ~(1 << v))) for v in vs})
    if order is not None:
        return Witness(Pattern.antihole(len(vs)), tuple(order))
    return Witness(None, tuple(vs))


def is_perfect_small(g: Graph, mode: str = "hole_search") -> tuple[bool, Optional[Witness]]:
    """Decide perfectness of a small graph.

    ``subgraph_sweep`` compares clique and chromatic number on every induced
    subgraph (n <= 12). ``hole_search`` looks for an induced odd hole in the
    graph or its complement (n <= 64).
    """
    if mode == "subgraph_sweep":
        if g.n > SWEEP_LIMIT:
            raise CapabilityError(f"subgraph_sweep is limited to n <= {SWEEP_LIMIT}", SWEEP_LIMIT)
        omega, chi = subset_tables(g)
        bad = [s for s in range(1 << g.n) if omega[s] != chi[s]]
        if not bad:
            return True, None
        smallest = min(bad, key=lambda s: (s.bit_count(), s))
        return False, _as_cycle_witness(g, smallest)
    if mode == "hole_search":
        if g.n > HOLE_LIMIT:
            raise CapabilityError(f"hole_search is limited to n <= {HOLE_LIMIT}", HOLE_LIMIT)
        w = odd_hole_or_antihole(g)
        return w is None, w
    raise InputError(f"unknown perfectness mode {mode!r}")
