"""Colourings: verification, exact oracle, class bounds and the constructive colourers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count, permutations
from math import comb
from typing import Iterable, Iterator, Mapping, Optional

from .errors import CapabilityError, ClaimViolation, InputError
from .graph import Graph, bits, mask_of
from .partition import WagonPartition, build_partition, clique_number, max_clique_exact
from .recognition import P3, P4, GraphClass, check_class, find_induced

CHI_LIMIT = 30


@dataclass(frozen=True)
class Colouring:
    assignment: Mapping[int, int]

    @property
    def colours_used(self) -> int:
        return len(set(self.assignment.values()))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.assignment):
            out.setdefault(self.assignment[v], []).append(v)
        return out


@dataclass(frozen=True)
class BoundSpec:
    graph_class: GraphClass
    omega: int
    bound: int
    perfect: bool = False

    def __str__(self):
        return f"{self.bound} (perfect)" if self.perfect else str(self.bound)


def verify_colouring(g: Graph, col: Colouring | Mapping[int, int]) -> tuple[bool, Optional[tuple[int, int]]]:
    """Properness check; returns the least monochromatic edge on failure."""
    f = col.assignment if isinstance(col, Colouring) else col
    missing = [v for v in range(g.n) if v not in f]
    if missing:
        raise InputError(f"colouring leaves vertices uncoloured: {missing[:10]}")
    for u, v in g.edges:
        if f[u] == f[v]:
            return False, (u, v)
    return True, None


# -- exact oracle -----------------------------------------------------------------

def _dsatur(g: Graph, pre: Mapping[int, int]) -> dict[int, int]:
    col = dict(pre)
    adj = g.adj
    while len(col) < g.n:
        best, key = None, None
        for v in range(g.n):
            if v in col:
                continue
            sat = len({col[u] for u in bits(adj[v]) if u in col})
            k = (sat, adj[v].bit_count(), -v)
            if key is None or k > key:
                best, key = v, k
        used = {col[u] for u in bits(adj[best]) if u in col}
        c = 1
        while c in used:
            c += 1
        col[best] = c
    return col


def chromatic_number_exact(g: Graph) -> tuple[int, Colouring]:
    """Chromatic number by DSATUR branch and bound (clique lower bound)."""
    n = g.n
    if n > CHI_LIMIT:
        raise CapabilityError(f"exact chromatic number is limited to n <= {CHI_LIMIT}", CHI_LIMIT)
    if n == 0:
        return 0, Colouring({})
    clique = max_clique_exact(g)
    lower = len(clique)
    pre = {v: i + 1 for i, v in enumerate(clique)}
    best_col = _dsatur(g, pre)
    best = max(best_col.values())
    if best == lower:
        return best, Colouring(best_col)

    adj = g.adj
    colour = [0] * n
    for v, c in pre.items():
        colour[v] = c
    sat = [0] * n  # bitmask of neighbour colours
    for v, c in pre.items():
        for u in bits(adj[v]):
            sat[u] |= 1 << c
    uncoloured = set(range(n)) - set(pre)

    def search(used):
        nonlocal best, best_col
        if not uncoloured:
            best = used
            best_col = {v: colour[v] for v in range(n)}
            return best == lower
        v = max(uncoloured, key=lambda x: (sat[x].bit_count(), adj[x].bit_count(), -x))
        limit = min(used + 1, best - 1)
        for c in range(1, limit + 1):
            if sat[v] >> c & 1:
                continue
            colour[v] = c
            uncoloured.discard(v)
            saved = [(u, sat[u]) for u in bits(adj[v])]
            for u, _ in saved:
                sat[u] |= 1 << c
            done = search(max(used, c))
            for u, s in saved:
                sat[u] = s
            uncoloured.add(v)
            colour[v] = 0
            if done:
                return True
            if best <= used:
                # the colours already in play cannot be beaten below this node
                return False
        return False

    search(lower)
    return best, Colouring(best_col)


# -- bounds -------------------------------------------------------------------------

def bound_for_class(c: GraphClass, omega: int) -> BoundSpec:
    if omega < 1:
        raise InputError("omega must be positive")
    if omega == 1:
        return BoundSpec(c, 1, 1, perfect=True)
    if c in (GraphClass.P3P2_FREE, GraphClass.P4P2_FREE):
        return BoundSpec(c, omega, omega * (omega + 1) * (omega + 2) // 6)
    if c is GraphClass.TWO_K2_FREE:
        return BoundSpec(c, omega, comb(omega + 1, 2))
    if c is GraphClass.P3P2_DIAMOND_FREE:
        if omega >= 5:
            return BoundSpec(c, omega, omega, perfect=True)
        return BoundSpec(c, omega, omega + {2: 2, 3: 3, 4: 1}[omega])
    if c is GraphClass.TWO_K2_DIAMOND_FREE:
        if omega == 2:
            return BoundSpec(c, 2, 3)
        return BoundSpec(c, omega, omega, perfect=omega >= 4)
    raise InputError(f"no bound for {c}")


def fresh_colour_budget(omega: int) -> int:
    """Upper bound on the fresh colours spent on all C_ij by :func:`colour_p3p2`."""
    return omega * (omega - 1) * (omega + 4) // 6


# -- optimal colourers for the parts ---------------------------------------------

def _components(adj, mask: int) -> list[int]:
    comps = []
    while mask:
        low = mask & -mask
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        mask &= ~comp
    return comps


def _co_components(adj, mask: int) -> list[int]:
    comps = []
    while mask:
        low = mask & -mask
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= mask & ~adj[v] & ~(1 << v)
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        mask &= ~comp
    return comps


def _require_free(h: Graph, pattern, what: str):
    w = find_induced(h, pattern)
    if w is not None:
        raise InputError(f"graph is not {what}: {w}", w)


def colour_disjoint_cliques(h: Graph) -> Colouring:
    """Optimal colouring of a P3-free graph: component of size s gets 1..s."""
    _require_free(h, P3, "P3-free")
    f = {}
    for comp in _components(h.adj, h.vertex_mask):
        for i, v in enumerate(bits(comp), start=1):
            f[v] = i
    return Colouring(f)


def _cotree_colour(adj, mask: int) -> tuple[dict[int, int], int]:
    if mask & (mask - 1) == 0:
        return {mask.bit_length() - 1: 0}, 1
    parts = _components(adj, mask)
    if len(parts) > 1:
        out, width = {}, 0
        for part in parts:
            f, k = _cotree_colour(adj, part)
            out.update(f)
            width = max(width, k)
        return out, width
    parts = _co_components(adj, mask)
    if len(parts) == 1:
        raise InputError("graph is not a cograph")
    out, offset = {}, 0
    for part in parts:
        f, k = _cotree_colour(adj, part)
        out.update({v: c + offset for v, c in f.items()})
        offset += k
    return out, offset


def colour_cograph(h: Graph) -> Colouring:
    """Optimal colouring of a P4-free graph by cotree recursion."""
    _require_free(h, P4, "P4-free")
    if h.n == 0:
        return Colouring({})
    f, _ = _cotree_colour(h.adj, h.vertex_mask)
    return Colouring({v: c + 1 for v, c in f.items()})


# -- wagon colourings (P3uP2-free, P4uP2-free) ---------------------------------------

@dataclass(frozen=True)
class WagonColouring:
    colouring: Colouring
    partition: WagonPartition
    fresh: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def fresh_total(self) -> int:
        return sum(self.fresh.values())


def _block_cliques(g: Graph, block: Iterable[int]) -> list[list[int]]:
    """Components of [block], each required to be a clique; largest first."""
    comps = [list(bits(c)) for c in _components(g.adj, g.vertex_mask & mask_of(block))]
    for comp in comps:
        if not g.is_clique(comp):
            sub = comp[:3]
            raise ClaimViolation(f"component {comp} of a C_ij block is not a clique", tuple(sub))
    return sorted(comps, key=lambda c: (-len(c), c))


def _require_class(g: Graph, c: GraphClass):
    report = check_class(g, c)
    if not report.member:
        raise InputError(f"graph is not {c.flag}-free: {report.witness}", report.witness)


def _choose_clique(g: Graph, clique):
    if clique is None:
        return max_clique_exact(g)
    return list(clique)


def _guard_independent(g: Graph, s, name):
    for v in sorted(s):
        hit = g.adj[v] & mask_of(s)
        if hit:
            raise ClaimViolation(f"{name} is not independent", (v, (hit & -hit).bit_length() - 1))


def wagon_colouring(g: Graph, clique=None, blocks: str = "cliques", check: bool = True) -> WagonColouring:
    """A gets 1..omega, each C_ij a fresh palette of omega([C_ij]) colours, I_a the colour of a."""
    if blocks == "cliques":
        cls = GraphClass.P3P2_FREE
    elif blocks == "cograph":
        cls = GraphClass.P4P2_FREE
    else:
        raise InputError(f"unknown block colourer {blocks!r}")
    if check:
        _require_class(g, cls)
    a = _choose_clique(g, clique)
    p = build_partition(g, a)
    f = {v: i for i, v in enumerate(p.clique, start=1)}
    next_colour = p.omega + 1
    fresh = {}
    for key, s in sorted(p.C.items()):
        if not s:
            fresh[key] = 0
            continue
        order = sorted(s)
        if blocks == "cliques":
            local = {}
            for comp in _block_cliques(g, order):
                for i, v in enumerate(comp):
                    local[v] = i
            width = max(local.values()) + 1
        else:
            local, width = _cotree_colour(g.adj, mask_of(order))
        for v, c in local.items():
            f[v] = next_colour + c
        fresh[key] = width
        next_colour += width
    for pos, s in sorted(p.I.items()):
        _guard_independent(g, s, f"I{pos}")
        for v in s:
            f[v] = pos
    return WagonColouring(Colouring(f), p, fresh)


def colour_p3p2(g: Graph, clique=None) -> Colouring:
    return wagon_colouring(g, clique, "cliques").colouring


def colour_p4p2(g: Graph, clique=None) -> Colouring:
    return wagon_colouring(g, clique, "cograph").colouring


# -- (P3uP2, diamond)-free -----------------------------------------------------------

class _Painter:
    """Assigns palette colours block by block; overflow draws colours above ``reserved``."""

    def __init__(self, g: Graph, reserved: int):
        self.g = g
        self.f: dict[int, int] = {}
        self._fresh: Iterator[int] = count(reserved + 1)
        self.overflow: list[str] = []

    def clique_vertex(self, p: WagonPartition):
        for i, v in enumerate(p.clique, start=1):
            self.f[v] = i

    def block(self, name: str, s, palette: list[int]):
        if not s:
            return
        for comp in _block_cliques(self.g, s):
            pal = list(palette)
            while len(pal) < len(comp):
                pal.append(next(self._fresh))
                self.overflow.append(name)
            for v, c in zip(comp, pal):
                self.f[v] = c

    def colouring(self) -> Colouring:
        return Colouring(dict(self.f))


def _match_clique(comp: list[int], forbidden: dict[int, int], colours: list[int]) -> Optional[dict[int, int]]:
    for perm in permutations(colours, len(comp)):
        if all(forbidden.get(v) != c for v, c in zip(comp, perm)):
            return dict(zip(comp, perm))
    return None


def _omega4(g: Graph, p: WagonPartition, clique) -> tuple[Colouring, str]:
    c13, c23 = p.c(1, 3), p.c(2, 3)
    mirrored = False
    if c13 and not c23:
        a = list(clique)
        a[0], a[1] = a[1], a[0]
        p = build_partition(g, a, check_maximum=False)
        c13, c23 = p.c(1, 3), p.c(2, 3)
        mirrored = True
    c12 = p.c(1, 2)
    paint = _Painter(g, reserved=5)
    paint.clique_vertex(p)
    cross = any(g.adj[v] & mask_of(c13) for v in c23)
    n_comp = len(_components(g.adj, mask_of(c23))) if c23 else 0
    empties = ",".join(name for name, s in (("C12", c12), ("C13", c13), ("C23", c23)) if not s) or "none"

    if cross:
        branch = "1"
        _guard_independent(g, c13, "C13")
        _guard_independent(g, c23, "C23")
        paint.block("C12", c12, [1, 2, 5])
        paint.block("C13", c13, [3])
        paint.block("C23", c23, [4])
    elif not c13 and not c23:
        branch = "2-empty"
        # C12 cliques avoid the colour of their (at most one) other clique neighbour
        others = {p.role(k): k for k in range(3, p.omega + 1)}
        for comp in _block_cliques(g, c12):
            forbidden = {v: others[u] for v in comp for u in bits(g.adj[v]) if u in others}
            m = _match_clique(comp, forbidden, [1, 2, 3, 4])
            if m is None:
                paint.block("C12", comp, [1, 2, 5])
            else:
                paint.f.update(m)
    elif c13 and c23:
        branch = "2.1"
        _guard_independent(g, c13, "C13")
        _guard_independent(g, c23, "C23")
        paint.block("C12", c12, [1, 2, 5])
        paint.block("C13", c13, [3])
        paint.block("C23", c23, [3])
    else:
        big = max(len(comp) for comp in _block_cliques(g, c23))
        if n_comp == 1 and big == 1:
            branch = "2.2.a-K1"
            paint.block("C23", c23, [3])
            paint.block("C12", c12, [1, 2, 5])
        elif n_comp == 1:
            branch = "2.2.a-K2/K3"
            _guard_independent(g, c12, "C12")
            paint.block("C23", c23, [2, 3, 4])
            paint.block("C12", c12, [1])
        elif big <= 2:
            branch = "2.2.b"
            paint.block("C23", c23, [3, 4])
            paint.block("C12", c12, [1, 2])
        else:
            # a triangle in C23 forces C12 independent, as in the one-component case
            branch = "2.2.b-K3"
            _guard_independent(g, c12, "C12")
            paint.block("C23", c23, [2, 3, 4])
            paint.block("C12", c12, [1])
    trace = (
        f"omega=4; case={branch}; C23-C13 edges={'yes' if cross else 'no'}; empty={empties}; "
        f"C23 components={n_comp}; mirrored={'yes' if mirrored else 'no'}"
    )
    if paint.overflow:
        trace += f"; overflow={','.join(paint.overflow)}"
    return paint.colouring(), trace


def colour_p3p2_diamond(g: Graph, clique=None) -> tuple[Colouring, str]:
    """Colour a (P3uP2, diamond)-free graph following the case analysis on omega.

    The returned trace names the branch taken; for omega = 4 it reads
    ``case=1``, ``2.1``, ``2.2.a-K1``, ``2.2.a-K2/K3``, ``2.2.b`` (plus the
    variants ``2-empty`` and ``2.2.b-K3``). From omega = 5 on the graph is
    perfect and the exact oracle supplies an omega-colouring.
    """
    _require_class(g, GraphClass.P3P2_DIAMOND_FREE)
    a = _choose_clique(g, clique)
    omega = len(a)
    if omega < 2:
        raise InputError("colour_p3p2_diamond needs omega >= 2")
    if omega >= 5:
        chi, col = chromatic_number_exact(g)
        return col, f"omega={omega}; case=perfect; exact colouring with {chi} colours"
    p = build_partition(g, a)
    if omega == 4:
        col, trace = _omega4(g, p, a)
    elif omega == 3:
        paint = _Painter(g, reserved=6)
        paint.clique_vertex(p)
        paint.block("C12", p.c(1, 2), [1, 2])
        paint.block("C23", p.c(2, 3), [3, 4])
        paint.block("C13", p.c(1, 3), [5, 6])
        col = paint.colouring()
        trace = "omega=3; case=C12:1,2 C23:3,4 C13:5,6"
        if paint.overflow:
            trace += f"; overflow={','.join(paint.overflow)}"
    else:
        paint = _Painter(g, reserved=4)
        paint.clique_vertex(p)
        for pos in (1, 2):
            _guard_independent(g, p.i_set(pos), f"I{pos}")
            paint.f.update({v: pos for v in p.i_set(pos)})
        paint.block("C12", p.c(1, 2), [3, 4])
        col = paint.colouring()
        trace = "omega=2; case=I1:1 I2:2 C12:3,4"
    if omega >= 3 and any(p.i_set(k) for k in range(1, omega + 1)):
        raise ClaimViolation("I_a nonempty with omega >= 3")
    _final_check(g, col)
    return col, trace


# -- (2K2, diamond)-free ------------------------------------------------------------

def colour_2k2_diamond(g: Graph, clique=None) -> tuple[Colouring, str]:
    """omega colours for omega >= 3; at omega = 2 a third colour only where forced."""
    _require_class(g, GraphClass.TWO_K2_DIAMOND_FREE)
    a = _choose_clique(g, clique)
    omega = len(a)
    if omega < 2:
        raise InputError("colour_2k2_diamond needs omega >= 2")
    p = build_partition(g, a)
    f = {v: i for i, v in enumerate(p.clique, start=1)}
    for key, s in p.C.items():
        _guard_independent(g, s, f"C{key[0]}{key[1]}")
    if omega == 2:
        i1, i2 = p.i_set(1), p.i_set(2)
        f.update({v: 1 for v in i1})
        f.update({v: 2 for v in i2})
        m1, m2 = mask_of(i1), mask_of(i2)
        thirds = 0
        for v in sorted(p.c(1, 2)):
            # a C12 vertex seeing both I1 and I2 closes an induced C5
            if not g.adj[v] & m1:
                f[v] = 1
            elif not g.adj[v] & m2:
                f[v] = 2
            else:
                f[v] = 3
                thirds += 1
        trace = f"omega=2; case=I1:1 I2:2 C12:3; C12 vertices needing colour 3: {thirds}"
    else:
        for key, s in p.C.items():
            if key[1] >= 4 and s:
                raise ClaimViolation(f"C{key[0]}{key[1]} nonempty", (min(s),))
        for pos, s in p.I.items():
            if s:
                raise ClaimViolation(f"I{pos} nonempty with omega >= 3", (min(s),))
        f.update({v: 1 for v in p.c(1, 2)})
        f.update({v: 3 for v in p.c(1, 3)})
        f.update({v: 2 for v in p.c(2, 3)})
        trace = f"omega={omega}; case=C12:1 C13:3 C23:2"
    col = Colouring(f)
    _final_check(g, col)
    return col, trace


def _final_check(g: Graph, col: Colouring):
    ok, edge = verify_colouring(g, col)
    if not ok:
        raise ClaimViolation(f"constructed colouring is improper at edge {edge}", edge)


METHODS = {
    "p3p2": lambda g: (colour_p3p2(g), "wagon colouring, clique blocks"),
    "p4p2": lambda g: (colour_p4p2(g), "wagon colouring, cograph blocks"),
    "p3p2diamond": colour_p3p2_diamond,
    "2k2diamond": colour_2k2_diamond,
    "exact": lambda g: (chromatic_number_exact(g)[1], "exact branch and bound"),
}

METHOD_CLASS = {
    "p3p2": GraphClass.P3P2_FREE,
    "p4p2": GraphClass.P4P2_FREE,
    "p3p2diamond": GraphClass.P3P2_DIAMOND_FREE,
    "2k2diamond": GraphClass.TWO_K2_DIAMOND_FREE,
}
