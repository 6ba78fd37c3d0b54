"""Maximum cliques and the clique-anchored vertex partition (A, C_ij, I_a).

Clique positions are 1-based throughout: ``p.clique[0]`` plays the role of
vertex 1 of A, and ``p.C[(1, 3)]`` is the set C_13.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError
from .graph import Graph, bits, induced_subgraph, mask_of
from .recognition import C5, HOLE_LIMIT, P3, GraphClass, find_induced, is_perfect_small


# -- cliques ---------------------------------------------------------------------

def _colour_bound(adj, cand: int) -> int:
    """Number of greedy colour classes needed to cover ``cand``."""
    colours = 0
    while cand:
        colours += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            cand ^= low
            q &= ~adj[v] & ~low
    return colours


def _greedy_order(adj, cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of ``cand``: (vertex, colour) in colour order."""
    out = []
    colour = 0
    while cand:
        colour += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            cand ^= low
            q &= ~adj[v] & ~low
            out.append((v, colour))
    return out


def clique_number(g: Graph) -> int:
    """Size of a maximum clique (branch and bound, colouring bound)."""
    adj = g.adj
    best = 0

    def expand(size, cand):
        nonlocal best
        order = _greedy_order(adj, cand)
        for v, colour in reversed(order):
            if size + colour <= best:
                return
            new = size + 1
            nxt = cand & adj[v]
            if nxt:
                expand(new, nxt)
            elif new > best:
                best = new
            cand &= ~(1 << v)

    if g.n:
        expand(0, g.vertex_mask)
    return best


def _cliques_of_size(g: Graph, k: int, first_only: bool):
    adj = g.adj
    found = []
    chosen = []

    def walk(cand):
        if len(chosen) == k:
            found.append(tuple(chosen))
            return first_only
        if len(chosen) + _colour_bound(adj, cand) < k:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if walk(cand & adj[v]):
                return True
            chosen.pop()
            if len(chosen) + _colour_bound(adj, cand) < k:
                return False
        return False

    walk(g.vertex_mask)
    return found


def max_clique_exact(g: Graph) -> list[int]:
    """Lexicographically least maximum clique, in ascending vertex order."""
    if g.n == 0:
        return []
    omega = clique_number(g)
    return list(_cliques_of_size(g, omega, first_only=True)[0])


def maximum_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every maximum clique, each sorted, in lexicographic order."""
    if g.n == 0:
        return [()]
    return _cliques_of_size(g, clique_number(g), first_only=False)


# -- partition -------------------------------------------------------------------

@dataclass(frozen=True)
class WagonPartition:
    """``clique`` is A in role order; ``C`` maps (i, j) and ``I`` maps a, all 1-based."""

    clique: tuple[int, ...]
    C: dict[tuple[int, int], frozenset[int]]
    I: dict[int, frozenset[int]]
    n: int = field(default=0)

    @property
    def omega(self) -> int:
        return len(self.clique)

    def role(self, position: int) -> int:
        """Graph vertex playing clique position ``position`` (1-based)."""
        return self.clique[position - 1]

    def c(self, i: int, j: int) -> frozenset[int]:
        return self.C.get((i, j), frozenset())

    def i_set(self, a: int) -> frozenset[int]:
        return self.I.get(a, frozenset())

    def blocks(self):
        """(name, vertex set) for A, every C_ij and every I_a, in construction order."""
        yield "A", frozenset(self.clique)
        for (i, j), s in sorted(self.C.items()):
            yield f"C{i}{j}" if self.omega < 10 else f"C{i},{j}", s
        for a, s in sorted(self.I.items()):
            yield f"I{a}", s

    def format(self, g: Optional[Graph] = None) -> str:
        def name(v):
            if g is not None and g.labels and v in g.labels:
                return f"{v}({g.labels[v]})"
            return str(v)

        lines = [f"omega {self.omega}"]
        for label, s in self.blocks():
            members = self.clique if label == "A" else sorted(s)
            lines.append(f"{label}: {' '.join(name(v) for v in members)}".rstrip())
        return "\n".join(lines) + "\n"


def build_partition(g: Graph, clique, check_maximum: bool = True) -> WagonPartition:
    """Partition V(G) around the clique ``clique`` taken in the given role order.

    C_ij is filled in lexicographic (i, j) order with the not-yet-placed
    vertices missing both i and j; what is left misses exactly one vertex a of
    A and goes to I_a.
    """
    a = list(clique)
    if len(set(a)) != len(a) or any(not 0 <= v < g.n for v in a):
        raise InputError("clique must list distinct vertices of the graph")
    if not g.is_clique(a):
        raise InputError(f"{a} is not a clique")
    if check_maximum and len(a) != clique_number(g):
        raise InputError(f"{a} is not a maximum clique (omega = {clique_number(g)})")
    omega = len(a)
    adj = g.adj
    remaining = g.vertex_mask & ~mask_of(a)
    C = {}
    for i in range(1, omega + 1):
        for j in range(i + 1, omega + 1):
            s = remaining & ~adj[a[i - 1]] & ~adj[a[j - 1]]
            C[(i, j)] = frozenset(bits(s))
            remaining &= ~s
    I = {pos: set() for pos in range(1, omega + 1)}
    for v in bits(remaining):
        missed = [pos for pos in range(1, omega + 1) if not adj[v] >> a[pos - 1] & 1]
        if len(missed) != 1:
            raise InputError(f"vertex {v} is adjacent to all of {a}; the clique is not maximum")
        I[missed[0]].add(v)
    return WagonPartition(tuple(a), C, {k: frozenset(v) for k, v in I.items()}, g.n)


# -- claims ----------------------------------------------------------------------

@dataclass(frozen=True)
class ClaimReport:
    """Outcome of one structural claim; claim 0 is the partition's own definition."""

    claim: int
    applicable: bool
    holds: bool = True
    witness: Optional[tuple[int, ...]] = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds

    def __str__(self):
        if not self.applicable:
            status = "n/a"
        else:
            status = "holds" if self.holds else f"FAILS witness={list(self.witness or ())}"
        return f"claim {self.claim:>2}: {status}" + (f" ({self.note})" if self.note else "")


_P3_FREE_PARTS = {
    GraphClass.P3P2_FREE,
    GraphClass.TWO_K2_FREE,
    GraphClass.P3P2_DIAMOND_FREE,
    GraphClass.TWO_K2_DIAMOND_FREE,
}
_DIAMOND_CLASSES = {GraphClass.P3P2_DIAMOND_FREE, GraphClass.TWO_K2_DIAMOND_FREE}


def _ok(claim, note=""):
    return ClaimReport(claim, True, True, None, note)


def _fail(claim, witness, note=""):
    return ClaimReport(claim, True, False, tuple(witness), note)


def _na(claim, note=""):
    return ClaimReport(claim, False, True, None, note)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _edge_inside(g: Graph, s) -> Optional[tuple[int, int]]:
    m = mask_of(s)
    for v in sorted(s):
        hit = g.adj[v] & m & ~((1 << (v + 1)) - 1)
        if hit:
            return v, _lowest(hit)
    return None


def _cross_edge(g: Graph, s, t) -> Optional[tuple[int, int]]:
    m = mask_of(t)
    for v in sorted(s):
        hit = g.adj[v] & m
        if hit:
            return v, _lowest(hit)
    return None


def _clique_of(g: Graph, s) -> list[int]:
    order = sorted(s)
    if not order:
        return []
    sub = induced_subgraph(g, order)
    return [order[v] for v in max_clique_exact(sub)]


def partition_violations(g: Graph, p: WagonPartition) -> list[tuple[int, ...]]:
    """Vertices breaking the partition's definition (cover, disjointness, anchors)."""
    bad = []
    a = p.clique
    if not g.is_clique(a):
        bad.append(tuple(a))
    seen = {}
    for label, s in p.blocks():
        for v in s:
            if v in seen:
                bad.append((v,))
            seen[v] = label
    missing = [v for v in range(g.n) if v not in seen]
    bad += [(v,) for v in missing]
    for (i, j), s in sorted(p.C.items()):
        for v in sorted(s):
            if g.has_edge(v, p.role(i)) or g.has_edge(v, p.role(j)):
                bad.append((v, p.role(i) if g.has_edge(v, p.role(i)) else p.role(j)))
                continue
            for k in range(1, j):
                if k != i and not g.has_edge(v, p.role(k)):
                    bad.append((v, p.role(k)))
                    break
    for pos, s in sorted(p.I.items()):
        for v in sorted(s):
            for k in range(1, p.omega + 1):
                if g.has_edge(v, p.role(k)) == (k == pos):
                    bad.append((v, p.role(k)))
                    break
    return bad


def check_claims(g: Graph, p: WagonPartition, c: GraphClass) -> list[ClaimReport]:
    """Evaluate claims 1-12 on a partition of a graph assumed to lie in ``c``.

    Report 0 covers the partition's definition itself, so a corrupted
    partition is flagged even where no numbered claim is applicable.
    """
    w = p.omega
    reports = []

    violations = partition_violations(g, p)
    reports.append(_fail(0, violations[0], "partition definition") if violations else _ok(0, "partition definition"))

    # 1: every [C_ij] is P3-free
    if c in _P3_FREE_PARTS:
        r = _ok(1)
        for key, s in sorted(p.C.items()):
            hit = find_induced(induced_subgraph(g, s), P3) if len(s) >= 3 else None
            if hit:
                order = sorted(s)
                r = _fail(1, [order[v] for v in hit.vertices], f"C{key[0]}{key[1]}")
                break
        reports.append(r)
    else:
        reports.append(_na(1, "class does not exclude P3uP2"))

    # 2: every I_a independent
    r = _ok(2)
    for a, s in sorted(p.I.items()):
        e = _edge_inside(g, s)
        if e:
            r = _fail(2, e, f"I{a}")
            break
    reports.append(r)

    # 3: omega([C_ij]) <= omega - (j - 2)
    r = _ok(3)
    for (i, j), s in sorted(p.C.items()):
        q = _clique_of(g, s)
        if len(q) > w - (j - 2):
            r = _fail(3, q, f"C{i}{j} has a {len(q)}-clique")
            break
    reports.append(r)

    if c not in _DIAMOND_CLASSES:
        reports += [_na(k, "class is not diamond-free") for k in range(4, 13)]
        return reports

    c12, c13, c23 = p.c(1, 2), p.c(1, 3), p.c(2, 3)

    # 4: C5-free => perfect
    if find_induced(g, C5) is not None:
        reports.append(_na(4, "graph has an induced C5"))
    elif g.n > HOLE_LIMIT:
        reports.append(_na(4, "not checked: too large for hole search"))
    else:
        perfect, hole = is_perfect_small(g, "hole_search")
        reports.append(_ok(4) if perfect else _fail(4, hole.vertices, str(hole.pattern)))

    # 5: C_ij empty for j >= 4
    r = _ok(5)
    for (i, j), s in sorted(p.C.items()):
        if j >= 4 and s:
            r = _fail(5, (min(s),), f"C{i}{j}")
            break
    reports.append(r)

    # 6: I_a empty if omega >= 3, independent if omega = 2
    r = _ok(6)
    for a, s in sorted(p.I.items()):
        if w >= 3 and s:
            r = _fail(6, (min(s),), f"I{a} nonempty")
            break
        e = _edge_inside(g, s)
        if e:
            r = _fail(6, e, f"I{a}")
            break
    reports.append(r)

    # 7: omega([C_12]) <= omega - 1 when omega >= 3 and C_13 or C_23 nonempty
    if w >= 3 and (c13 or c23):
        q = _clique_of(g, c12)
        reports.append(_fail(7, q) if len(q) > w - 1 else _ok(7))
    else:
        reports.append(_na(7, "needs omega >= 3 and C13 or C23 nonempty"))

    # 8: C_13 sees only vertex 2 of A, C_23 only vertex 1
    if w >= 3:
        r = _ok(8)
        for s, keep in ((c13, 2), (c23, 1)):
            others = [p.role(k) for k in range(1, w + 1) if k != keep]
            e = _cross_edge(g, s, others)
            if e:
                r = _fail(8, e)
                break
        reports.append(r)
    else:
        reports.append(_na(8, "needs omega >= 3"))

    cross = _cross_edge(g, c23, c13) if w >= 3 else None

    # 9, 10: when [C_23, C_13] has an edge, its ends are isolated and both sets independent
    if w >= 4 and cross:
        r = _ok(9)
        m23, m13 = mask_of(c23), mask_of(c13)
        for x in sorted(c23):
            for y in bits(g.adj[x] & m13):
                if g.adj[x] & m23:
                    r = _fail(9, (x, _lowest(g.adj[x] & m23)), "C23 end not isolated")
                elif g.adj[y] & m13:
                    r = _fail(9, (y, _lowest(g.adj[y] & m13)), "C13 end not isolated")
                else:
                    continue
                break
            if r.failed:
                break
        reports.append(r)
        e = _edge_inside(g, c23) or _edge_inside(g, c13)
        reports.append(_fail(10, e) if e else _ok(10))
    else:
        reports.append(_na(9, "needs omega >= 4 and an edge between C23 and C13"))
        reports.append(_na(10, "needs omega >= 4 and an edge between C23 and C13"))

    # 11: no [C_23, C_13] edge and one of them nonempty => the other is independent
    if w >= 4 and not cross and (c13 or c23):
        e = (_edge_inside(g, c13) if c23 else None) or (_edge_inside(g, c23) if c13 else None)
        reports.append(_fail(11, e) if e else _ok(11))
    else:
        reports.append(_na(11, "needs omega >= 4, no C23-C13 edge, C13 or C23 nonempty"))

    # 12: a vertex of C_12 has at most one neighbour in A
    r = _ok(12)
    am = mask_of(p.clique)
    for v in sorted(c12):
        hits = list(bits(g.adj[v] & am))
        if len(hits) > 1:
            r = _fail(12, (v, *hits))
            break
    reports.append(r)
    return reports
