"""Readers and writers: DIMACS .col, plain edge lists, DOT, colouring files."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Mapping, Optional, TextIO

from .errors import InputError
from .graph import Graph

_VERTEX_HINT = re.compile(r"#\s*vertices\s*[:=]\s*(\d+)")


class GraphFormatError(InputError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


def _ints(parts, lineno):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge n m'", lineno)
            n, _ = _ints(parts[2:], lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e u v'", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError("self-loop", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unrecognised line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph.from_edges(n, edges)


def format_dimacs(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """0-based ``u v`` pairs; ``#`` comments and blank lines are skipped.

    A ``# vertices: N`` comment, as written by :func:`format_edgelist`, fixes
    the vertex count so isolated vertices survive a round trip.
    """
    n_hint = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            m = _VERTEX_HINT.match(line)
            if m and n_hint is None:
                n_hint = int(m.group(1))
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'u v'", lineno)
        u, v = _ints(parts, lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if u == v:
            raise GraphFormatError("self-loop", lineno)
        if n_hint is not None and max(u, v) >= n_hint:
            raise GraphFormatError(f"vertex out of range 0..{n_hint - 1}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    n = n_hint if n_hint is not None else top + 1
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"# vertices: {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def encode_edgelist(g: Graph) -> str:
    """One-line edge-list encoding used inside sweep records."""
    return f"{g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def decode_edgelist(code: str) -> Graph:
    n, _, body = code.partition(":")
    edges = [tuple(int(x) for x in e.split("-")) for e in body.split(",") if e]
    return Graph.from_edges(int(n), edges)


def format_dot(g: Graph, colours: Optional[Mapping[int, int]] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = []
        if g.labels and v in g.labels:
            attrs.append(f'label="{g.labels[v]}"')
        if colours is not None and v in colours:
            attrs.append(f'colour="{colours[v]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str = "auto") -> Graph:
    path = Path(path)
    text = path.read_text()
    if fmt == "auto":
        fmt = "dimacs" if path.suffix in (".col", ".dimacs") or _looks_dimacs(text) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def _looks_dimacs(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("c"):
            return line.startswith("p ")
    return False


def parse_colouring(text: str) -> dict[int, int]:
    """Read ``v colour`` lines; ``#`` lines are skipped."""
    assignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'v colour'", lineno)
        v, c = _ints(parts, lineno)
        if v in assignment:
            raise GraphFormatError(f"vertex {v} coloured twice", lineno)
        if c < 1:
            raise GraphFormatError("colours are positive integers", lineno)
        assignment[v] = c
    return assignment


def format_colouring(assignment: Mapping[int, int], summary: Iterable[str] = ()) -> str:
    lines = [f"# {s}" for s in summary]
    lines += [f"{v} {assignment[v]}" for v in sorted(assignment)]
    return "\n".join(lines) + "\n"


def write_text(text: str, out: Optional[str | Path], stream: Optional[TextIO] = None) -> None:
    if out is None:
        import sys

        (stream or sys.stdout).write(text)
    else:
        Path(out).write_text(text)
