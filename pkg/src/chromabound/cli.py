"""Command-line entry point.

Exit status: 0 success, 1 property or class failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .colouring import (
    METHOD_CLASS,
    METHODS,
    Colouring,
    bound_for_class,
    chromatic_number_exact,
    verify_colouring,
)
from .errors import CapabilityError, ClaimViolation, InputError
from .graph import FIXTURES, fixture
from .harness import SweepConfig, generate_class_instances, run_suite
from .io import (
    GraphFormatError,
    encode_edgelist,
    format_colouring,
    format_dimacs,
    format_dot,
    format_edgelist,
    parse_colouring,
    read_graph,
    write_text,
)
from .partition import build_partition, check_claims, clique_number, max_clique_exact
from .recognition import GraphClass, check_class

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load(args):
    src = args.graph
    if src in FIXTURES and not Path(src).exists():
        return fixture(src)
    if src.startswith("fixture:"):
        return fixture(src.split(":", 1)[1])
    try:
        return read_graph(src, args.input_format)
    except FileNotFoundError:
        raise UsageError(f"no such file or fixture: {src}") from None


def _clique_arg(args):
    if not getattr(args, "clique", None):
        return None
    try:
        return [int(x) for x in args.clique.split(",")]
    except ValueError:
        raise UsageError("--clique takes comma-separated vertex ids") from None


def emit(args, text):
    write_text(text, args.out)


def cmd_recognize(args):
    g = load(args)
    c = GraphClass.from_flag(args.graph_class)
    rep = check_class(g, c)
    if args.format == "records":
        rec = {"class": c.flag, "member": rep.member}
        if rep.witness:
            rec["witness"] = {"pattern": str(rep.witness.pattern), "vertices": list(rep.witness.vertices)}
        emit(args, json.dumps(rec, sort_keys=True) + "\n")
    else:
        line = f"class {c.flag}: member={'true' if rep.member else 'false'}"
        if rep.witness:
            line += f"\nwitness: {rep.witness}"
        emit(args, line + "\n")
    return OK if rep.member else FAIL


def cmd_partition(args):
    g = load(args)
    c = GraphClass.from_flag(args.graph_class or "p3p2")
    clique = _clique_arg(args) or max_clique_exact(g)
    p = build_partition(g, clique)
    membership = check_class(g, c)
    reports = check_claims(g, p, c)
    if args.format == "records":
        rec = {
            "clique": list(p.clique),
            "C": {f"{i},{j}": sorted(s) for (i, j), s in sorted(p.C.items())},
            "I": {str(a): sorted(s) for a, s in sorted(p.I.items())},
            "class": c.flag,
            "member": membership.member,
            "claims": [
                {"claim": r.claim, "applicable": r.applicable, "holds": r.holds,
                 "witness": list(r.witness) if r.witness else None, "note": r.note}
                for r in reports
            ],
        }
        emit(args, json.dumps(rec, sort_keys=True) + "\n")
    else:
        text = p.format(g)
        if not membership.member:
            text += f"note: graph is not {c.flag}-free ({membership.witness}); claims may fail\n"
        text += "".join(f"{r}\n" for r in reports)
        emit(args, text)
    return FAIL if any(r.failed for r in reports) else OK


def cmd_colour(args):
    g = load(args)
    method = args.method
    if method in METHOD_CLASS:
        c = METHOD_CLASS[method]
        rep = check_class(g, c)
        if not rep.member:
            sys.stderr.write(f"graph is not {c.flag}-free: {rep.witness}\n")
            return FAIL
    else:
        c = None
    col, trace = METHODS[method](g)
    ok, edge = verify_colouring(g, col)
    omega = clique_number(g)
    bound = bound_for_class(c, omega) if c is not None and omega else None
    summary = {
        "method": method,
        "class": c.flag if c else None,
        "n": g.n,
        "omega": omega,
        "bound": bound.bound if bound else None,
        "perfect_asserted": bool(bound and bound.perfect),
        "colours_used": col.colours_used,
        "proper": ok,
        "case_trace": trace,
    }
    if args.format == "records":
        rec = dict(summary, colouring={str(v): col[v] for v in sorted(col.assignment)})
        emit(args, json.dumps(rec, sort_keys=True) + "\n")
    elif args.format == "dot":
        emit(args, format_dot(g, col.assignment))
    else:
        lines = [f"{k}={v}" for k, v in summary.items() if v is not None]
        emit(args, format_colouring(col.assignment, lines))
    if not ok:
        sys.stderr.write(f"improper colouring: edge {edge}\n")
        return FAIL
    if bound and col.colours_used > bound.bound:
        return FAIL
    return OK


def cmd_chi(args):
    g = load(args)
    chi, col = chromatic_number_exact(g)
    if args.format == "records":
        emit(args, json.dumps({"n": g.n, "chi": chi, "omega": clique_number(g)}) + "\n")
    else:
        emit(args, f"{chi}\n")
    return OK


def cmd_verify(args):
    g = load(args)
    if not args.colouring:
        raise UsageError("verify needs --colouring FILE")
    try:
        f = parse_colouring(Path(args.colouring).read_text())
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.colouring}") from None
    extra = [v for v in f if not 0 <= v < g.n]
    if extra:
        raise InputError(f"colouring names vertices outside the graph: {extra[:10]}")
    ok, edge = verify_colouring(g, Colouring(f))
    col = Colouring(f)
    if args.format == "records":
        emit(args, json.dumps({"proper": ok, "edge": list(edge) if edge else None,
                               "colours_used": col.colours_used}) + "\n")
    else:
        emit(args, f"proper colouring with {col.colours_used} colours\n" if ok else f"improper: edge {edge[0]} {edge[1]}\n")
    return OK if ok else FAIL


def _sweep_config(args):
    if not args.graph_class:
        raise UsageError("--class is required")
    return SweepConfig(
        GraphClass.from_flag(args.graph_class),
        n_min=args.n_min,
        n_max=args.n_max,
        mode=args.mode,
        sample_count=args.samples,
        seed=args.seed,
        orderings=args.orderings if args.orderings in ("all", "auto") else int(args.orderings),
    ).validate()


def cmd_gen(args):
    cfg = _sweep_config(args)
    graphs = list(generate_class_instances(cfg))
    if args.out and Path(args.out).suffix == "":
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs):
            (out / f"g{i:05d}.edges").write_text(format_edgelist(g))
        sys.stdout.write(f"wrote {len(graphs)} graphs to {out}\n")
    else:
        emit(args, "".join(encode_edgelist(g) + "\n" for g in graphs))
    return OK


def cmd_suite(args):
    cfg = _sweep_config(args)
    inject = [int(x) for x in args.inject.split(",")] if args.inject else []
    rep = run_suite(cfg, workers=args.workers, inject=inject)
    if args.format == "records":
        emit(args, rep.records_text())
    else:
        if args.out:
            Path(args.out).write_text(rep.records_text())
        sys.stdout.write(rep.summary_text())
    return OK if rep.passed else FAIL


def cmd_fixture(args):
    g = fixture(args.graph)
    fmt = args.format
    if fmt == "text":
        fmt = "dimacs" if args.out and Path(args.out).suffix == ".col" else "edgelist"
    if fmt == "dot":
        text = format_dot(g)
    elif fmt == "dimacs":
        text = format_dimacs(g, comment=f"fixture {args.graph}")
    else:
        text = format_edgelist(g)
    emit(args, text)
    return OK


COMMANDS = {
    "recognize": cmd_recognize,
    "partition": cmd_partition,
    "colour": cmd_colour,
    "chi": cmd_chi,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "suite": cmd_suite,
    "fixture": cmd_fixture,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="chromabound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, needs_graph=True):
        if needs_graph:
            p.add_argument("graph", help="graph file (.col DIMACS or edge list) or fixture name")
            p.add_argument("--input-format", choices=["auto", "dimacs", "edgelist"], default="auto")
        p.add_argument("--format", choices=["text", "records", "dot", "dimacs", "edgelist"], default="text")
        p.add_argument("--out", help="write output here instead of stdout")

    def sweep(p):
        p.add_argument("--class", dest="graph_class")
        p.add_argument("--mode", choices=["enumerate_all", "random_sample"], default="enumerate_all")
        p.add_argument("--n-min", type=int, default=1)
        p.add_argument("--n-max", type=int, default=6)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--orderings", default="auto", help="'auto', 'all' or a sample size")

    p = sub.add_parser("recognize", help="test membership of a hereditary class")
    common(p)
    p.add_argument("--class", dest="graph_class", required=True)
    p = sub.add_parser("partition", help="clique-anchored partition and claim checks")
    common(p)
    p.add_argument("--class", dest="graph_class")
    p.add_argument("--clique", help="comma-separated maximum clique in role order")
    p = sub.add_parser("colour", help="colour with one of the constructive methods")
    common(p)
    p.add_argument("--method", choices=sorted(METHODS), required=True)
    p = sub.add_parser("chi", help="exact chromatic number")
    common(p)
    p = sub.add_parser("verify", help="check a 'v colour' file for properness")
    common(p)
    p.add_argument("--colouring", help="colouring file")
    p = sub.add_parser("gen", help="generate class instances")
    common(p, needs_graph=False)
    sweep(p)
    p = sub.add_parser("suite", help="run the property sweep")
    common(p, needs_graph=False)
    sweep(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--inject", help="instance indices whose colouring is corrupted (negative control)")
    p = sub.add_parser("fixture", help="write a named fixture")
    p.add_argument("graph", choices=sorted(FIXTURES))
    p.add_argument("--format", choices=["text", "dimacs", "edgelist", "dot"], default="text")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return COMMANDS[args.verb](args)
    except (UsageError, GraphFormatError, InputError, CapabilityError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE
    except ClaimViolation as exc:
        sys.stderr.write(f"claim violated: {exc} (witness {exc.witness})\n")
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
