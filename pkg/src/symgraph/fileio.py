"""Text formats: the edge-list graph file, DOT emission, and stats JSON.

Graph file format (diff-friendly, 1-based to match the usual figure labels):

* ``#`` starts a comment, blank lines are skipped;
* the first payload line is the vertex count n;
* every following line is ``u v`` or ``u v w`` (default weight 1); writing a
  pair twice is an error, weight 0 means the edge does not exist.

Weights are written as the shortest decimal that round-trips the float, so
parse(write(g)) reproduces g up to that formatting.  An optional exact mode
renders power-of-0/1-graph weights as ``q*sqrt(r)`` tokens; those files are
for reading, not for feeding back in.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import analysis
from .graphs import WeightedGraph, adjacency_matrix
from .spectra import eigenvalues_symmetric


class GraphFormatError(ValueError):
    """Malformed graph file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class GraphFile:
    """Parsed form of a graph file: header n plus (u, v, w) records."""

    n: int
    records: tuple[tuple[int, int, int | float], ...]

    def to_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, [(u, v, w) for u, v, w in self.records])


def _parse_weight(token: str, line: int) -> int | float:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        w = float(token)
    except ValueError:
        raise GraphFormatError(f"bad weight {token!r}", line) from None
    if not math.isfinite(w):
        raise GraphFormatError(f"weight must be finite, got {token!r}", line)
    return w


def parse_graph_file(text: str) -> GraphFile:
    n: int | None = None
    records: list[tuple[int, int, int | float]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphFormatError("expected the vertex count alone on the first line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {fields[0]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {n}", lineno)
            continue
        if len(fields) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [w]', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"bad vertex pair {fields[0]!r} {fields[1]!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex pair ({u}, {v}) out of range 1..{n}", lineno)
        w: int | float = 1
        if len(fields) == 3:
            w = _parse_weight(fields[2], lineno)
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate pair ({key[0]}, {key[1]})", lineno)
        seen.add(key)
        records.append((key[0], key[1], w))
    if n is None:
        raise GraphFormatError("empty input: missing vertex count")
    return GraphFile(n, tuple(records))


def parse_graph(text: str) -> WeightedGraph:
    """Parse the edge-list format into a graph."""
    return parse_graph_file(text).to_graph()


def format_weight(w) -> str:
    if isinstance(w, bool):
        raise TypeError("boolean weight")
    if isinstance(w, int):
        return str(w)
    if isinstance(w, Fraction):
        return str(w) if w.denominator == 1 else repr(float(w))
    return repr(float(w))  # repr is the shortest round-trip decimal


def write_graph(graph: WeightedGraph) -> str:
    """Render a graph in the edge-list format (sorted pairs, deterministic)."""
    lines = [str(graph.n)]
    for u, v, w in graph.edges():
        lines.append(f"{u} {v} {format_weight(w)}")
    return "\n".join(lines) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(graph: WeightedGraph) -> str:
    """Render an undirected DOT graph; loops are self-edges, weights are labels."""
    lines = ["graph G {"]
    for v in range(1, graph.n + 1):
        lines.append(f"  {v} [label={_dot_quote(graph.label(v))}];")
    for u, v, w in graph.edges():
        lines.append(f"  {u} -- {v} [label={_dot_quote(format_weight(w))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_stats_json(
    graph: WeightedGraph,
    wiener: bool = False,
    spectrum: bool = False,
    tol: float = 1e-8,
) -> str:
    """Summary statistics as JSON with a fixed key order.

    ``wiener`` is null unless requested on a connected graph; ``spectrum`` is
    included only when requested.
    """
    stats: dict[str, object] = {
        "n": graph.n,
        "edges": analysis.edge_count(graph),
        "loops": analysis.count_loops(graph),
        "components": analysis.components(graph).count,
        "degrees": analysis.degree_sequence(graph),
    }
    wiener_value: int | None = None
    if wiener:
        try:
            wiener_value = analysis.wiener_index(graph)
        except analysis.DisconnectedGraphError:
            wiener_value = None
    stats["wiener"] = wiener_value
    if spectrum:
        stats["spectrum"] = list(eigenvalues_symmetric(adjacency_matrix(graph), tol=tol).values)
    return json.dumps(stats) + "\n"
