"""Canonical forms and isomorph-free enumeration of small graphs in a hereditary class."""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .graph import Graph, bits

ENUMERATE_LIMIT = 8


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement started from degrees; colours are invariant ranks."""
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Canonical adjacency code: equal for two graphs iff they are isomorphic.

    Vertices are placed cell by cell (cells from colour refinement); among the
    placements consistent with the cells the lexicographically largest sequence
    of back-adjacency rows wins. Twin vertices are interchangeable, so only one
    of each twin class is tried at every step.
    """
    n = g.n
    if n == 0:
        return (0,)
    colour = _refine(g)
    slots = sorted(range(n), key=lambda v: colour[v])
    cell_at = [colour[v] for v in slots]
    adj = g.adj
    best: list[int] = []
    rows: list[int] = []
    placed: list[int] = []
    used = 0

    def twins(u, w):
        both = (1 << u) | (1 << w)
        return adj[u] & ~both == adj[w] & ~both

    def place(k):
        nonlocal best, used
        if k == n:
            if rows > best:
                best = rows[:]
            return
        seen: list[int] = []
        for v in range(n):
            if used >> v & 1 or colour[v] != cell_at[k]:
                continue
            if any(twins(v, s) for s in seen):
                continue
            seen.append(v)
            row = 0
            for u in placed:
                row = row << 1 | (adj[v] >> u & 1)
            rows.append(row)
            if not best or rows >= best[: k + 1]:
                placed.append(v)
                used |= 1 << v
                place(k + 1)
                used &= ~(1 << v)
                placed.pop()
            rows.pop()

    place(0)
    return (n, *cell_at, *best)


def extend_by_vertex(g: Graph, nbrs: int) -> Graph:
    """Add vertex ``g.n`` adjacent to the bitmask ``nbrs``."""
    new = g.n
    adj = list(g.adj)
    for u in bits(nbrs):
        adj[u] |= 1 << new
    adj.append(nbrs)
    return Graph(g.n + 1, tuple(adj))


def enumerate_hereditary(
    n_max: int,
    member: Callable[[Graph], bool],
    n_min: int = 1,
    limit: Optional[int] = ENUMERATE_LIMIT,
) -> Iterator[Graph]:
    """One representative per isomorphism class of members, for n_min <= n <= n_max.

    ``member`` must describe a hereditary class: every member on n vertices then
    arises from a member on n - 1 vertices by adding one vertex.
    """
    from .errors import CapabilityError

    if limit is not None and n_max > limit:
        raise CapabilityError(f"exhaustive enumeration is limited to n <= {limit}", limit)
    level = [Graph.empty(0)]
    for n in range(1, n_max + 1):
        found: dict[tuple[int, ...], Graph] = {}
        for g in level:
            for nbrs in range(1 << g.n):
                h = extend_by_vertex(g, nbrs)
                if not member(h):
                    continue
                code = canonical_code(h)
                if code not in found:
                    found[code] = h
        level = [found[c] for c in sorted(found)]
        if n >= n_min:
            yield from level
