"""Simple undirected graphs on dense vertex ids, plus the named fixtures.

Adjacency is held twice: as one integer bitmask per vertex (used by every
search routine) and as a sorted edge tuple (used for I/O and counting).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

from .errors import InputError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False)
    edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        edges = tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not self.adj[v] & m for v in bits(m))

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(*graphs: Graph) -> Graph:
    """Disjoint union with every cross pair made adjacent."""
    base = disjoint_union(*graphs)
    edges = list(base.edges)
    starts, offset = [], 0
    for g in graphs:
        starts.append((offset, offset + g.n))
        offset += g.n
    for a in range(len(starts)):
        for b in range(a + 1, len(starts)):
            for u in range(*starts[a]):
                for v in range(*starts[b]):
                    edges.append((u, v))
    return Graph.from_edges(offset, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled 0..|s|-1 in ascending order of ``s``."""
    order = sorted(set(s))
    for v in order:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(order)}
    sub = g.vertex_mask & mask_of(order)
    adj = []
    for v in order:
        adj.append(mask_of(index[u] for u in bits(g.adj[v] & sub)))
    labels = None
    if g.labels:
        labels = {index[v]: g.labels[v] for v in order if v in g.labels}
    return Graph(len(order), tuple(adj), labels)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)), g.labels)


def multiply_vertex(g: Graph, v: int, k: int) -> Graph:
    """Replace ``v`` by an independent set of ``k`` twins.

    ``v`` keeps its id; the ``k - 1`` new copies get ids ``n .. n+k-2``.
    """
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    if k < 1:
        raise InputError("multiplicity k must be at least 1")
    edges = list(g.edges)
    nbrs = g.neighbours(v)
    for copy in range(g.n, g.n + k - 1):
        edges.extend((u, copy) for u in nbrs)
    labels = None
    if g.labels:
        labels = dict(g.labels)
        if v in g.labels:
            for i, copy in enumerate(range(g.n, g.n + k - 1), start=2):
                labels[copy] = f"{g.labels[v]}.{i}"
    return Graph.from_edges(g.n + k - 1, edges, labels)


# -- fixtures -----------------------------------------------------------------

def _mycielski_grotzsch() -> Graph:
    # v1..v5 -> 0..4, u1..u5 -> 5..9, w -> 10
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, (i + 1) % 5))
        edges.append((10, 5 + i))
    labels = {i: f"v{i + 1}" for i in range(5)}
    labels.update({5 + i: f"u{i + 1}" for i in range(5)})
    labels[10] = "w"
    return Graph.from_edges(11, edges, labels)


FIG5_NAMES = ("BL", "L", "T", "R", "BR", "c")
# L, T, R: the vertices that can be multiplied without leaving the class
FIG5_CIRCLED = (1, 2, 3)


def _fig5_base() -> Graph:
    BL, L, T, R, BR, c = range(6)
    edges = [(BL, L), (L, T), (T, R), (R, BR), (BR, BL), (c, BL), (c, BR), (c, T)]
    return Graph.from_edges(6, edges, dict(enumerate(FIG5_NAMES)))


def _fig3_w3x4() -> Graph:
    # clique vertices 1,2,3 -> 0,1,2; row N1 -> 3..6; row N2 -> 7..10
    row1, row2 = [3, 4, 5, 6], [7, 8, 9, 10]
    edges = [(0, 1), (1, 2), (0, 2)]
    edges += [(0, p) for p in row1] + [(1, q) for q in row2]
    for row in (row1, row2):
        edges += [(row[0], row[1]), (row[2], row[3])]
    edges += list(zip(row1, row2))
    # crossing matching between rows: 1->3, 2->4, 3->2, 4->1 (1-based positions)
    edges += [(row1[0], row2[2]), (row1[1], row2[3]), (row1[2], row2[1]), (row1[3], row2[0])]
    labels = {0: "1", 1: "2", 2: "3"}
    labels.update({v: f"N1.{i + 1}" for i, v in enumerate(row1)})
    labels.update({v: f"N2.{i + 1}" for i, v in enumerate(row2)})
    return Graph.from_edges(11, edges, labels)


FIXTURES = {
    "mycielski_grotzsch": _mycielski_grotzsch,
    "fig3_w3x4": _fig3_w3x4,
    "fig5_base": _fig5_base,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


def fig5_blowup(k: int | tuple[int, int, int]) -> Graph:
    """fig5_base with each circled vertex multiplied by an independent set."""
    ks = (k, k, k) if isinstance(k, int) else k
    g = fixture("fig5_base")
    for v, mult in zip(FIG5_CIRCLED, ks):
        g = multiply_vertex(g, v, mult)
    return g
