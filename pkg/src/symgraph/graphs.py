"""Weighted undirected graphs (loops allowed) and the named graph families.

Weights live in a sparse map keyed by unordered vertex pairs; a pair is
present iff its weight is nonzero, so "edge exists" always means "weight is
nonzero".  Vertices are 1-based to match the usual figure labels.  Weights
may be ints, Fractions, or floats; graphs whose weights are all rational
keep the whole power pipeline in exact arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

Weight = int | Fraction | float

FAMILY_NAMES = (
    "path",
    "cycle",
    "complete",
    "complete_loops",
    "complete_bipartite",
    "star",
    "scepter",
)


class WeightedGraph:
    """Symmetric real edge-weight function on n vertices; loops allowed.

    Instances are immutable after construction and safe to share across
    threads; every operation in this package returns new graphs.
    """

    __slots__ = ("n", "_weights", "labels")

    def __init__(
        self,
        n: int,
        weights: Mapping[tuple[int, int], Weight] | Iterable[tuple[int, int, Weight]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        self.n = n
        items: Iterable[tuple[int, int, Weight]]
        if isinstance(weights, Mapping):
            items = ((u, v, w) for (u, v), w in weights.items())
        else:
            items = weights
        store: dict[tuple[int, int], Weight] = {}
        for u, v, w in items:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex pair ({u}, {v}) out of range 1..{n}")
            if isinstance(w, float) and not math.isfinite(w):
                raise ValueError(f"weight for ({u}, {v}) is not finite: {w}")
            key = (u, v) if u <= v else (v, u)
            if key in store and store[key] != w:
                raise ValueError(f"conflicting weights for pair {key}")
            if w != 0:
                store[key] = w
        self._weights = store
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        self.labels = labels

    # -- accessors ---------------------------------------------------------

    def weight(self, u: int, v: int) -> Weight:
        return self._weights.get((u, v) if u <= v else (v, u), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u <= v else (v, u)) in self._weights

    def edges(self) -> list[tuple[int, int, Weight]]:
        """All weighted pairs (u <= v), sorted; loops appear as (v, v, w)."""
        return [(u, v, w) for (u, v), w in sorted(self._weights.items())]

    def pair_count(self) -> int:
        return len(self._weights)

    def neighbors(self, v: int) -> set[int]:
        """Distinct neighbors of v; a loop at v puts v itself in the set."""
        out = set()
        for (a, b) in self._weights:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def label(self, v: int) -> str:
        return self.labels[v - 1] if self.labels is not None else str(v)

    @property
    def is_rational(self) -> bool:
        return all(isinstance(w, (int, Fraction)) for w in self._weights.values())

    # -- conversions -------------------------------------------------------

    def weight_rows(self) -> list[list[Weight]]:
        """Dense adjacency as nested lists, preserving exact weight types."""
        rows: list[list[Weight]] = [[0] * self.n for _ in range(self.n)]
        for (u, v), w in self._weights.items():
            rows[u - 1][v - 1] = w
            rows[v - 1][u - 1] = w
        return rows

    @staticmethod
    def from_matrix(matrix, labels: Sequence[str] | None = None) -> "WeightedGraph":
        """Build a graph from a dense symmetric matrix (exact symmetry required)."""
        rows = [list(row) for row in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        weights = {}
        for u in range(n):
            for v in range(u, n):
                if rows[u][v] != rows[v][u]:
                    raise ValueError(f"matrix not symmetric at ({u + 1}, {v + 1})")
                if rows[u][v] != 0:
                    weights[(u + 1, v + 1)] = rows[u][v]
        return WeightedGraph(n, weights, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        if self.n != other.n or len(self._weights) != len(other._weights):
            return False
        return all(other._weights.get(k) == w for k, w in self._weights.items())

    def __hash__(self) -> int:  # weights may mix int/Fraction/float; hash by support
        return hash((self.n, frozenset(self._weights)))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={len(self._weights)})"


def adjacency_matrix(graph: WeightedGraph) -> np.ndarray:
    """Dense symmetric n x n float adjacency matrix of the graph."""
    a = np.zeros((graph.n, graph.n))
    for u, v, w in graph.edges():
        a[u - 1, v - 1] = w
        a[v - 1, u - 1] = w
    return a


# -- named families ---------------------------------------------------------


def path(n: int) -> WeightedGraph:
    """Path on n vertices: edges i -- i+1."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return WeightedGraph(n, {(i, i + 1): 1 for i in range(1, n)})


def cycle(n: int) -> WeightedGraph:
    """Cycle on n vertices (n >= 3)."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    weights = {(i, i + 1): 1 for i in range(1, n)}
    weights[(1, n)] = 1
    return WeightedGraph(n, weights)


def complete(n: int) -> WeightedGraph:
    """Complete loopless graph on n vertices."""
    if n < 1:
        raise ValueError(f"complete needs n >= 1, got {n}")
    return WeightedGraph(n, {(u, v): 1 for u in range(1, n + 1) for v in range(u + 1, n + 1)})


def complete_loops(n: int) -> WeightedGraph:
    """Complete graph on n vertices with a loop at every vertex (all-ones matrix)."""
    if n < 1:
        raise ValueError(f"complete_loops needs n >= 1, got {n}")
    return WeightedGraph(n, {(u, v): 1 for u in range(1, n + 1) for v in range(u, n + 1)})


def complete_bipartite(n: int, m: int) -> WeightedGraph:
    """Complete bipartite graph with parts {1..n} and {n+1..n+m}."""
    if n < 1 or m < 1:
        raise ValueError(f"complete_bipartite needs n, m >= 1, got ({n}, {m})")
    return WeightedGraph(
        n + m, {(u, v): 1 for u in range(1, n + 1) for v in range(n + 1, n + m + 1)}
    )


def star(m: int) -> WeightedGraph:
    """Star with m leaves: center 1 joined to vertices 2..m+1."""
    if m < 1:
        raise ValueError(f"star needs m >= 1 leaves, got {m}")
    return complete_bipartite(1, m)


def scepter() -> WeightedGraph:
    """Two vertices, a loop at vertex 1 and an edge 1 -- 2."""
    return WeightedGraph(2, {(1, 1): 1, (1, 2): 1})


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_loops": 1,
    "complete_bipartite": 2,
    "star": 1,
    "scepter": 0,
}


def family(name: str, *params: int) -> WeightedGraph:
    """Build a named family member; all weights are 1."""
    if name not in _FAMILY_ARITY:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
    arity = _FAMILY_ARITY[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    builder = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_loops": complete_loops,
        "complete_bipartite": complete_bipartite,
        "star": star,
        "scepter": scepter,
    }[name]
    return builder(*params)
