"""Graph invariants of powers and their closed-form predictors.

The measured side lives here: connected components (union-find), loop and
edge counts, degrees, and the Wiener index via per-source BFS on the
unweighted support.  The predicting side is a catalog of closed forms for
the named families, each addressable through :func:`predict`.

Conventions, chosen once and used everywhere:

* a loop contributes its endpoint once to the neighbor set and 1 to the
  degree (the unique reading under which the second-power degree formulas
  reproduce the small worked examples);
* edge_count counts loops as single edges;
* connectivity ignores loops (a loop never joins components);
* distances are hop counts on the unweighted support, all weights ignored.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .combinatorics import VertexMultiset, multiset_count, orbit_size
from .exact import ExactWeight
from .graphs import WeightedGraph, cycle


@dataclass(frozen=True)
class ComponentStructure:
    """Connected components: count, vertex -> id, and per-component lists."""

    count: int
    assignment: tuple[int, ...]  # 1-based vertex v -> assignment[v-1]
    members: tuple[tuple[int, ...], ...]

    def component_of(self, v: int) -> int:
        return self.assignment[v - 1]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def components(graph: WeightedGraph) -> ComponentStructure:
    """Connected components of the unweighted support; loops are ignored."""
    uf = _UnionFind(graph.n)
    for u, v, _ in graph.edges():
        if u != v:
            uf.union(u - 1, v - 1)
    ids: dict[int, int] = {}
    assignment = []
    for v in range(graph.n):
        root = uf.find(v)
        if root not in ids:
            ids[root] = len(ids)  # ids contiguous, ordered by smallest vertex
        assignment.append(ids[root])
    members: list[list[int]] = [[] for _ in range(len(ids))]
    for v, c in enumerate(assignment, start=1):
        members[c].append(v)
    return ComponentStructure(len(ids), tuple(assignment), tuple(map(tuple, members)))


def count_loops(graph: WeightedGraph) -> int:
    """Number of vertices carrying a nonzero loop weight."""
    return sum(1 for v in range(1, graph.n + 1) if graph.weight(v, v) != 0)


def neighbor_set(graph: WeightedGraph, v: int) -> set[int]:
    """Distinct neighbors of v; a loop at v includes v itself."""
    if not 1 <= v <= graph.n:
        raise ValueError(f"vertex {v} out of range 1..{graph.n}")
    return graph.neighbors(v)


def degree(graph: WeightedGraph, v: int) -> int:
    """Number of distinct neighbors; a loop adds 1 (v joins its own set)."""
    return len(neighbor_set(graph, v))


def degree_sequence(graph: WeightedGraph) -> list[int]:
    """Degrees of all vertices in one pass (same convention as degree)."""
    neighbors: list[set[int]] = [set() for _ in range(graph.n + 1)]
    for u, v, _ in graph.edges():
        neighbors[u].add(v)
        neighbors[v].add(u)
    return [len(neighbors[v]) for v in range(1, graph.n + 1)]


def edge_count(graph: WeightedGraph) -> int:
    """Unordered pairs {u, v} with nonzero weight; a loop counts once."""
    return graph.pair_count()


def is_bipartite(graph: WeightedGraph) -> bool:
    """Two-colorability of the support; any loop is an odd cycle, so False."""
    if count_loops(graph):
        return False
    color = [-1] * (graph.n + 1)
    adj = _adjacency_lists(graph)
    for start in range(1, graph.n + 1):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _adjacency_lists(graph: WeightedGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(graph.n + 1)]
    for u, v, _ in graph.edges():
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    return adj


class DisconnectedGraphError(ValueError):
    """Wiener index of a disconnected graph; carries the component count."""

    def __init__(self, component_count: int):
        super().__init__(
            f"graph is disconnected ({component_count} components); "
            "the Wiener index needs a connected graph"
        )
        self.component_count = component_count


def _bfs_distance_sum(adj: Sequence[Sequence[int]], source: int, n: int) -> int | None:
    """Sum of hop distances from source; None when some vertex is unreachable."""
    dist = [-1] * (n + 1)
    dist[source] = 0
    queue = deque([source])
    total = 0
    seen = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                total += dist[w]
                seen += 1
                queue.append(w)
    if seen != n:
        return None
    return total


def wiener_index(graph: WeightedGraph) -> int:
    """Sum of hop-count distances over unordered distinct vertex pairs.

    BFS from every vertex on the unweighted support.  Disconnected input
    raises :class:`DisconnectedGraphError` with the component count.
    """
    adj = _adjacency_lists(graph)
    total = 0
    for v in range(1, graph.n + 1):
        part = _bfs_distance_sum(adj, v, graph.n)
        if part is None:
            raise DisconnectedGraphError(components(graph).count)
        total += part
    return total // 2


def wiener_within_components(graph: WeightedGraph) -> int:
    """Sum of pairwise distances taken within each component separately.

    A convenience beyond the plain Wiener index, which is undefined for
    disconnected graphs.
    """
    structure = components(graph)
    adj = _adjacency_lists(graph)
    total = 0
    for comp in structure.members:
        for v in comp:
            dist = {v: 0}
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            total += sum(dist.values())
    return total // 2


# ---------------------------------------------------------------------------
# closed-form predictors
# ---------------------------------------------------------------------------


def path_components(n: int, k: int) -> int:
    """Component count of the k-th power of a path: ceil((k+1)/2)."""
    return (k + 2) // 2


def path_loops(n: int, k: int) -> int:
    """Loop count of the k-th power of a path: binomial(n+k/2-2, k/2) for
    even k, zero for odd k."""
    if k % 2:
        return 0
    half = k // 2
    return math.comb(n + half - 2, half)


def cycle_components(n: int, k: int) -> int:
    """Component count of a cycle power: 1 for odd n, ceil((k+1)/2) for even."""
    return 1 if n % 2 else (k + 2) // 2


def bipartite_power_components(n: int, m: int, k: int) -> list[tuple]:
    """Component descriptors of the k-th power of a complete bipartite graph.

    Each descriptor is ("complete_bipartite", a, b) for an unweighted complete
    bipartite component with part sizes a and b, or ("complete_loops", size)
    for the all-pairs-with-loops component that appears when k is even.
    """
    out: list[tuple] = []
    for i in range((k - 1) // 2 + 1):
        a = math.comb(i + n - 1, i) * math.comb(k - i + m - 1, k - i)
        b = math.comb(i + m - 1, i) * math.comb(k - i + n - 1, k - i)
        out.append(("complete_bipartite", a, b))
    if k % 2 == 0:
        half = k // 2
        out.append(("complete_loops", math.comb(half + n - 1, half) * math.comb(half + m - 1, half)))
    return out


def deg2(graph: WeightedGraph, a: int, b: int) -> int:
    """Predicted degree of vertex (a, b) in the second power of a loopless graph."""
    if a == b:
        return math.comb(degree(graph, a) + 1, 2)
    if a > b:
        a, b = b, a
    common = len(neighbor_set(graph, a) & neighbor_set(graph, b))
    return degree(graph, a) * degree(graph, b) - math.comb(common, 2)


def nonadjacent_loop_pairs(graph: WeightedGraph) -> int:
    """Pairs {u, v} not adjacent in the graph but with loops at both ends."""
    looped = [v for v in range(1, graph.n + 1) if graph.weight(v, v) != 0]
    return sum(
        1
        for i, u in enumerate(looped)
        for v in looped[i + 1 :]
        if not graph.has_edge(u, v)
    )


def loops2(graph: WeightedGraph) -> int:
    """Predicted loop count of the second power: edges (loops included) plus
    the number of nonadjacent looped pairs."""
    return edge_count(graph) + nonadjacent_loop_pairs(graph)


def edges2(graph: WeightedGraph) -> int:
    """Predicted edge count of the second power of a loopless graph."""
    n = graph.n
    degs = [degree(graph, v) for v in range(1, n + 1)]
    nbrs = [neighbor_set(graph, v) for v in range(1, n + 1)]
    total = edge_count(graph) + nonadjacent_loop_pairs(graph)
    total += sum(math.comb(d + 1, 2) for d in degs)
    for i in range(n):
        for j in range(i + 1, n):
            total += degs[i] * degs[j]
            total -= math.comb(len(nbrs[i] & nbrs[j]), 2)
    if total % 2:
        raise ValueError("edge-count formula produced an odd handshake total")
    return total // 2


def edge_bounds(graph: WeightedGraph, k: int) -> tuple[Fraction, int]:
    """Bounds on the edge count of the k-th power of a simple graph:
    2^(k-1) |E|^k / k!  <=  edges  <=  2^(k-1) |E|^k."""
    e = edge_count(graph)
    upper = 2 ** (k - 1) * e**k
    return Fraction(upper, math.factorial(k)), upper


def diag_degree(graph: WeightedGraph, v: int, k: int) -> int:
    """Degree of the constant tuple (v,..,v) in the k-th power."""
    return math.comb(degree(graph, v) + k - 1, k)


def neighbor_bound(graph: WeightedGraph, t: VertexMultiset) -> int:
    """Upper bound on a power vertex's degree from its entries' joint neighbors."""
    union: set[int] = set()
    for v in set(t.entries):
        union |= neighbor_set(graph, v)
    return math.comb(len(union) + t.k - 1, t.k)


def wiener_complete_loops_power(n: int, k: int) -> int:
    """Wiener index of the k-th power of the all-ones graph: all pairs at
    distance one."""
    return math.comb(multiset_count(n, k), 2)


def _heavy_diagonal_count(n: int, k: int) -> int:
    """Tuples (as compositions of k into n parts) whose first part exceeds k/2."""
    half = k - math.ceil(k / 2) - (1 if k % 2 == 0 else 0)
    return math.comb(half + n - 1, n - 1)


def wiener_complete_power_statement(n: int, k: int) -> int | Fraction:
    """Wiener index of the k-th power of a complete graph, first printed form:
    (N choose 2) + n/2 * (binom(k+2(n-2)+1, 2(n-1)) - F)."""
    base = math.comb(multiset_count(n, k), 2)
    t = math.comb(k + 2 * (n - 2) + 1, 2 * (n - 1))
    val = base + Fraction(n, 2) * (t - _heavy_diagonal_count(n, k))
    return int(val) if val.denominator == 1 else val


def wiener_complete_power_proof(n: int, k: int) -> int | Fraction:
    """Wiener index of the k-th power of a complete graph, second printed
    form (factor 2n with the lower binomial index 2(n-2))."""
    base = math.comb(multiset_count(n, k), 2)
    t = math.comb(k + 2 * (n - 2) + 1, 2 * (n - 2))
    val = base + n * (t - _heavy_diagonal_count(n, k))
    return int(val) if val.denominator == 1 else val


def wiener_cycle_square_statement(n: int) -> int:
    """Wiener index of the second power of an odd cycle, closed form."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    w = wiener_index(cycle(n))
    half = (n + 3) // 2
    return (
        math.comb(n + 2, 2) * w
        + (n * math.comb(n, 2) - 2 * w) * math.comb(half, 2)
        - 2 * n * n * math.comb(half, 3)
    )


def wiener_cycle_square_blocks(n: int) -> int:
    """Same quantity from the block-distance sum it was derived from.

    The top summand carries a zero factor, so the two printed upper limits
    (B and B-1, with B = (n+1)/2) give identical values.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    w = wiener_index(cycle(n))
    b = (n + 1) // 2
    total = sum((2 * w + i * n * n) * (b - i) for i in range(b + 1))
    return total - b * w


def power_edge_weight_complete_loops(i: VertexMultiset, j: VertexMultiset) -> ExactWeight:
    """Edge weight between two power vertices of the all-ones graph:
    sqrt of the product of the two orbit sizes."""
    return ExactWeight.sqrt(orbit_size(i.multiplicity()) * orbit_size(j.multiplicity()))


_PREDICTORS: dict[str, Callable] = {
    "path_components": path_components,
    "path_loops": path_loops,
    "cycle_components": cycle_components,
    "bipartite_decomposition": bipartite_power_components,
    "deg2": deg2,
    "loops2": loops2,
    "edges2": edges2,
    "edge_bounds": edge_bounds,
    "diag_degree": diag_degree,
    "neighbor_bound": neighbor_bound,
    "wiener_J": wiener_complete_loops_power,
    "wiener_K": wiener_complete_power_statement,
    "wiener_K_proof": wiener_complete_power_proof,
    "wiener_C2": wiener_cycle_square_statement,
    "wiener_C2_blocks": wiener_cycle_square_blocks,
    "jn_weight": power_edge_weight_complete_loops,
}


def predict(claim: str, *args, **kwargs):
    """Dispatch over the family closed forms by claim id."""
    try:
        fn = _PREDICTORS[claim]
    except KeyError:
        raise ValueError(
            f"unknown claim {claim!r}; known: {', '.join(sorted(_PREDICTORS))}"
        ) from None
    return fn(*args, **kwargs)
