"""Instance generation and the property sweeps that certify the colouring bounds."""

from __future__ import annotations

import json
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Iterator, Optional, Sequence, Union

from .colouring import (
    CHI_LIMIT,
    Colouring,
    bound_for_class,
    chromatic_number_exact,
    colour_2k2_diamond,
    colour_p3p2_diamond,
    fresh_colour_budget,
    verify_colouring,
    wagon_colouring,
)
from .enumerate import ENUMERATE_LIMIT, enumerate_hereditary
from .errors import CapabilityError, ClaimViolation, InputError
from .graph import FIXTURES, Graph, bits, disjoint_union, fig5_blowup, fixture, join
from .io import encode_edgelist
from .partition import build_partition, check_claims, clique_number, maximum_cliques
from .recognition import HOLE_LIMIT, GraphClass, check_class, is_perfect_small

DENSITY_GRID = tuple(round(0.1 * k, 1) for k in range(1, 10))
DIAMOND_CLASSES = (GraphClass.P3P2_DIAMOND_FREE, GraphClass.TWO_K2_DIAMOND_FREE)


@dataclass(frozen=True)
class SweepConfig:
    graph_class: GraphClass
    n_min: int = 1
    n_max: int = 8
    mode: str = "enumerate_all"
    sample_count: int = 100
    seed: int = 0
    # clique orderings per maximum clique: "all", or a sample size per clique
    orderings: Union[str, int] = "auto"
    # run both perfectness modes and compare them up to this many vertices
    agreement_n_max: int = 9
    structured: bool = True

    def validate(self):
        if self.mode not in ("enumerate_all", "random_sample"):
            raise InputError(f"unknown mode {self.mode!r}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise InputError(f"bad vertex range {self.n_min}..{self.n_max}")
        if self.mode == "enumerate_all" and self.n_max > ENUMERATE_LIMIT:
            raise CapabilityError(f"enumerate_all is limited to n <= {ENUMERATE_LIMIT}", ENUMERATE_LIMIT)
        if self.sample_count < 0:
            raise InputError("sample_count must be non-negative")
        if not (self.orderings in ("all", "auto") or (isinstance(self.orderings, int) and self.orderings > 0)):
            raise InputError(f"bad orderings setting {self.orderings!r}")
        return self


@dataclass
class SweepReport:
    config: SweepConfig
    instances_tested: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    histogram: dict[int, dict[int, int]] = field(default_factory=dict)
    bounds: dict[int, int] = field(default_factory=dict)
    branches: dict[str, int] = field(default_factory=dict)
    max_chi: dict[int, int] = field(default_factory=dict)
    perfect_checked: int = 0
    agreement_checked: int = 0
    records: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def records_text(self) -> str:
        """One JSON object per instance followed by a summary object."""
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps({"summary": self.summary_dict()}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def summary_dict(self) -> dict:
        cfg = asdict(self.config)
        cfg["graph_class"] = self.config.graph_class.flag
        return {
            "config": cfg,
            "instances_tested": self.instances_tested,
            "failures": [list(f) for f in self.failures],
            "histogram": {str(w): {str(k): c for k, c in sorted(h.items())} for w, h in sorted(self.histogram.items())},
            "bounds": {str(w): b for w, b in sorted(self.bounds.items())},
            "branches": dict(sorted(self.branches.items())),
            "max_chi": {str(w): c for w, c in sorted(self.max_chi.items())},
            "perfect_checked": self.perfect_checked,
            "agreement_checked": self.agreement_checked,
        }

    def summary_text(self) -> str:
        cfg = self.config
        lines = [
            f"class {cfg.graph_class.flag}  mode {cfg.mode}  n {cfg.n_min}..{cfg.n_max}  seed {cfg.seed}",
            f"instances tested: {self.instances_tested}",
            f"failures: {len(self.failures)}",
        ]
        for w in sorted(self.histogram):
            hist = " ".join(f"{k}:{c}" for k, c in sorted(self.histogram[w].items()))
            lines.append(f"  omega={w}  bound={self.bounds[w]}  max chi={self.max_chi.get(w, '-')}  colours used {hist}")
        if self.branches:
            lines.append("branches: " + ", ".join(f"{b}={c}" for b, c in sorted(self.branches.items())))
        if self.perfect_checked:
            lines.append(f"perfectness confirmed on {self.perfect_checked} instances")
        if self.agreement_checked:
            lines.append(f"perfectness modes compared on {self.agreement_checked} instances")
        for enc, prop, wit in self.failures[:20]:
            lines.append(f"  FAIL {prop}: {wit}  graph {enc}")
        return "\n".join(lines) + "\n"


# -- generation ----------------------------------------------------------------

def grow_instance(c: GraphClass, omega: int, n: int, rng: random.Random, tries: int = 60) -> Graph:
    """Grow a class member from K_omega one random vertex at a time, keeping omega fixed.

    Stops early if no acceptable vertex is found in ``tries`` attempts.
    """
    g = Graph.complete(omega)
    while g.n < n:
        for _ in range(tries):
            q = rng.choice(DENSITY_GRID)
            size = rng.choice([s for s in (0, 1, 1, 2, omega - 2, omega - 1) if 0 <= s < omega])
            nbrs = 0
            for v in rng.sample(range(omega), size):
                nbrs |= 1 << v
            for v in range(omega, g.n):
                if rng.random() < q:
                    nbrs |= 1 << v
            adj = list(g.adj) + [nbrs]
            for u in bits(nbrs):
                adj[u] |= 1 << g.n
            h = Graph(g.n + 1, tuple(adj))
            if check_class(h, c).member and clique_number(h) == omega:
                g = h
                break
        else:
            break
    return g


def structured_seeds(c: GraphClass, n_min: int, n_max: int, rng: random.Random) -> list[Graph]:
    """Fixtures, fig5 blow-ups, clique/pendant graphs and grown graphs for omega 2..6."""
    out = [fixture(name) for name in sorted(FIXTURES)]
    for ks in ((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 2), (3, 3, 3), (4, 4, 4)):
        out.append(fig5_blowup(ks))
    for w in range(2, 7):
        k = Graph.complete(w)
        out.append(Graph.from_edges(w + 1, list(k.edges) + [(0, w)]))
        out.append(Graph.from_edges(w + 2, list(k.edges) + [(0, w), (1, w + 1)]))
        out.append(disjoint_union(k, Graph.complete(2)))
        # two cliques sharing one vertex
        out.append(Graph.from_edges(2 * w - 1, list(k.edges) + [(0, w + i) for i in range(w - 1)]
                                    + [(w + i, w + j) for i in range(w - 1) for j in range(i + 1, w - 1)]))
        out.append(join(Graph.empty(1), disjoint_union(Graph.complete(w - 1), Graph.complete(w - 1), Graph.empty(1))))
    for w in range(2, 7):
        for _ in range(4):
            out.append(grow_instance(c, w, rng.randint(max(n_min, w), max(n_max, w)), rng))
    return [g for g in out if n_min <= g.n <= n_max and check_class(g, c).member]


def er_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def generate_class_instances(cfg: SweepConfig) -> Iterator[Graph]:
    cfg.validate()
    c = cfg.graph_class
    if cfg.mode == "enumerate_all":
        yield from enumerate_hereditary(cfg.n_max, lambda g: check_class(g, c).member, n_min=cfg.n_min)
        return
    rng = random.Random(cfg.seed)
    emitted = 0
    if cfg.structured:
        for g in structured_seeds(c, cfg.n_min, cfg.n_max, rng):
            if emitted >= cfg.sample_count:
                return
            yield g
            emitted += 1
    while emitted < cfg.sample_count:
        n = rng.randint(cfg.n_min, cfg.n_max)
        g = None
        for _ in range(200):
            h = er_graph(n, rng.choice(DENSITY_GRID), rng)
            if check_class(h, c).member:
                g = h
                break
        if g is None:
            g = grow_instance(c, rng.randint(2, min(6, n)), n, rng)
        yield g
        emitted += 1


# -- the suite ------------------------------------------------------------------

def clique_orderings(g: Graph, setting, rng: random.Random) -> list[tuple[int, ...]]:
    """Role orderings of maximum cliques to test.

    ``auto`` takes every ordering when omega <= 4 and six sampled orderings of
    each maximum clique otherwise; ``all`` takes every ordering of every clique.
    """
    out = []
    for q in maximum_cliques(g):
        w = len(q)
        if setting == "all" or (setting == "auto" and w <= 4):
            out.extend(permutations(q))
            continue
        k = 6 if setting == "auto" else setting
        picks = {q}
        while len(picks) < min(k, math.factorial(w)):
            perm = list(q)
            rng.shuffle(perm)
            picks.add(tuple(perm))
        out.extend(sorted(picks))
    return out


def _constructive(g: Graph, c: GraphClass, clique) -> list[tuple[str, Colouring, str, Optional[object]]]:
    """(method, colouring, branch, wagon) for every colourer the class admits."""
    out = []
    if c in (GraphClass.P3P2_FREE, GraphClass.TWO_K2_FREE):
        wc = wagon_colouring(g, clique, "cliques", check=False)
        out.append(("p3p2", wc.colouring, "", wc))
    if c in (GraphClass.P3P2_FREE, GraphClass.P4P2_FREE):
        wc = wagon_colouring(g, clique, "cograph", check=False)
        out.append(("p4p2", wc.colouring, "", wc))
    if c in (GraphClass.P3P2_DIAMOND_FREE, GraphClass.TWO_K2_DIAMOND_FREE) and len(clique) < 2:
        # the diamond colourers need an edge; an edgeless graph takes one colour
        wc = wagon_colouring(g, clique, "cliques", check=False)
        out.append(("p3p2", wc.colouring, "", wc))
    elif c is GraphClass.P3P2_DIAMOND_FREE:
        col, trace = colour_p3p2_diamond(g, clique)
        out.append(("p3p2diamond", col, _branch(trace), None))
    elif c is GraphClass.TWO_K2_DIAMOND_FREE:
        col, trace = colour_2k2_diamond(g, clique)
        out.append(("2k2diamond", col, _branch(trace), None))
    return out


def _branch(trace: str) -> str:
    fields = dict(part.split("=", 1) for part in trace.split("; ") if "=" in part)
    return f"omega={fields.get('omega')}/{fields.get('case')}"


def check_instance(g: Graph, cfg: SweepConfig, index: int, inject: bool = False) -> dict:
    """Run every property on one instance; returns its record."""
    c = cfg.graph_class
    enc = encode_edgelist(g)
    fails: list[tuple[str, str]] = []
    rec: dict = {"index": index, "n": g.n, "m": g.m, "graph": enc}

    report = check_class(g, c)
    if not report.member:
        fails.append(("class", str(report.witness)))
        rec["failures"] = fails
        return rec

    omega = clique_number(g)
    spec = bound_for_class(c, omega) if omega else None
    chi = chromatic_number_exact(g)[0] if g.n <= CHI_LIMIT else None
    rec.update(omega=omega, chi=chi, bound=spec.bound if spec else 0)
    if chi is not None and chi < omega:
        fails.append(("chi>=omega", f"chi={chi} omega={omega}"))

    rng = random.Random(cfg.seed * 1_000_003 + index)
    orders = clique_orderings(g, cfg.orderings, rng) if omega else []
    rec["orderings"] = len(orders)
    branches: Counter = Counter()
    used_default: dict[str, int] = {}
    for k, order in enumerate(orders):
        p = build_partition(g, order, check_maximum=False)
        for r in check_claims(g, p, c):
            if r.failed:
                fails.append((f"claim {r.claim}", f"ordering={list(order)} witness={list(r.witness)} {r.note}"))
        if c is GraphClass.TWO_K2_DIAMOND_FREE:
            for key, s in sorted(p.C.items()):
                if not g.is_independent(s):
                    fails.append(("C_ij independent", f"ordering={list(order)} C{key[0]}{key[1]}"))
        try:
            runs = _constructive(g, c, order)
        except ClaimViolation as exc:
            fails.append(("colourer", f"ordering={list(order)} {exc} witness={exc.witness}"))
            continue
        counts = {}
        for method, col, branch, wc in runs:
            if inject and k == 0 and g.m:
                u, v = g.edges[0]
                f = dict(col.assignment)
                f[v] = f[u]
                col = Colouring(f)
            ok, edge = verify_colouring(g, col)
            if not ok:
                fails.append((f"{method} proper", f"ordering={list(order)} edge={list(edge)}"))
                continue
            used = col.colours_used
            counts[method] = used
            if branch:
                branches[branch] += 1
            if spec and used > spec.bound:
                fails.append((f"{method} bound", f"ordering={list(order)} used={used} bound={spec.bound}"))
            if chi is not None and used < chi:
                fails.append((f"{method} sandwich", f"used={used} chi={chi}"))
            if method == "2k2diamond" and chi is not None and used != chi:
                fails.append(("2k2diamond exact", f"ordering={list(order)} used={used} chi={chi}"))
            if method == "p3p2diamond" and branch in ("omega=4/2.2.a-K2/K3", "omega=4/2.2.b") and used > 4:
                fails.append(("omega=4 four-colour branch", f"ordering={list(order)} {branch} used={used}"))
            if wc is not None and method == "p3p2":
                if wc.fresh_total > fresh_colour_budget(omega):
                    fails.append(("palette budget", f"fresh={wc.fresh_total} budget={fresh_colour_budget(omega)}"))
                for (i, j), spent in wc.fresh.items():
                    if spent > omega - (j - 2):
                        fails.append(("palette per block", f"C{i}{j} spent {spent}"))
        if "p3p2" in counts and "p4p2" in counts and counts["p4p2"] > counts["p3p2"]:
            fails.append(("p4p2 <= p3p2", f"{counts}"))
        if k == 0:
            used_default = counts
    rec["colours"] = used_default
    rec["branches"] = dict(sorted(branches.items()))

    asserts_perfect = (c is GraphClass.P3P2_DIAMOND_FREE and omega >= 5) or (
        c is GraphClass.TWO_K2_DIAMOND_FREE and omega >= 4
    )
    rec["perfect_checked"] = False
    if asserts_perfect and g.n <= HOLE_LIMIT:
        perfect, w = is_perfect_small(g, "hole_search")
        rec["perfect_checked"] = True
        if not perfect:
            fails.append(("perfect (hole search)", str(w)))
        if chi is not None and chi != omega:
            fails.append(("perfect chi=omega", f"chi={chi} omega={omega}"))
    rec["agreement_checked"] = False
    if g.n <= cfg.agreement_n_max:
        a, _ = is_perfect_small(g, "hole_search")
        b, _ = is_perfect_small(g, "subgraph_sweep")
        rec["agreement_checked"] = True
        rec["perfect"] = a
        if a != b:
            fails.append(("perfectness modes agree", f"hole_search={a} subgraph_sweep={b}"))
        if asserts_perfect and not b:
            fails.append(("perfect (subgraph sweep)", ""))
    rec["failures"] = [list(f) for f in fails]
    return rec


def _check_star(args):
    return check_instance(*args)


def run_suite(cfg: SweepConfig, workers: int = 1, inject: Sequence[int] = (),
              instances: Optional[Sequence[Graph]] = None) -> SweepReport:
    """Check every generated instance; ``inject`` lists instance indices whose colouring is corrupted."""
    cfg.validate()
    graphs = list(instances) if instances is not None else list(generate_class_instances(cfg))
    inject = set(inject)
    jobs = [(g, cfg, i, i in inject) for i, g in enumerate(graphs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_star, jobs, chunksize=max(1, len(jobs) // (workers * 8) or 1)))
    else:
        records = [check_instance(*job) for job in jobs]
    return merge_records(cfg, records)


def merge_records(cfg: SweepConfig, records: list[dict]) -> SweepReport:
    rep = SweepReport(cfg)
    branches: Counter = Counter()
    for rec in sorted(records, key=lambda r: r["index"]):
        rep.instances_tested += 1
        rep.records.append(rec)
        for prop, wit in rec.get("failures", []):
            rep.failures.append((rec["graph"], prop, wit))
        w = rec.get("omega")
        if w and rec.get("colours"):
            used = max(rec["colours"].values())
            rep.histogram.setdefault(w, {})
            rep.histogram[w][used] = rep.histogram[w].get(used, 0) + 1
            rep.bounds[w] = rec["bound"]
            if rec.get("chi") is not None:
                rep.max_chi[w] = max(rep.max_chi.get(w, 0), rec["chi"])
        branches.update(rec.get("branches", {}))
        rep.perfect_checked += bool(rec.get("perfect_checked"))
        rep.agreement_checked += bool(rec.get("agreement_checked"))
    rep.branches = dict(sorted(branches.items()))
    return rep
