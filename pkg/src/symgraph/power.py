"""Symmetric tensor powers of weighted graphs and of permutations.

The power of a graph on n vertices at exponent k is a graph on the
N = binomial(n+k-1, k) sorted k-tuples of vertices.  Its adjacency matrix is
assembled from an integer/rational "core" S plus a vector D of orbit sizes;
the materialized entry is S[i][j] / sqrt(D[i] * D[j]).  Keeping S and D
separate means 0/1 and rational inputs stay exact all the way through.

Two independent kernels fill the core:

* ``orbit``     -- the defining double sum over all rearrangements of the two
                   index tuples.  Cost per entry is |orbit(i)| * |orbit(j)| * k;
                   slow and unimpeachable, so it serves as the reference.
* ``permanent`` -- each core entry equals D[i] * D[j] / k! times the permanent
                   of the k x k submatrix A[i_a, j_b], evaluated with Ryser's
                   inclusion-exclusion in O(2^k * k).  Far faster for k >= 3.

Both kernels have a vectorized numpy path (int64 when the value bounds allow,
float64 otherwise) and a pure-Python exact path used as fallback when int64
could overflow.  Entry computations are independent; only the upper triangle
is computed and then mirrored, so results are deterministic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import (
    VertexMultiset,
    enumerate_multisets,
    enumerate_orbit,
    multiset_count,
    orbit_size,
    rank,
)
from .exact import ExactWeight
from .graphs import WeightedGraph

METHODS = ("orbit", "permanent")

PERMANENT_CAP_DEFAULT = 20  # Ryser walks 2^k subsets; beyond this, refuse
DEFAULT_MAX_DIM = 5000
MAX_DIM_ENV = "SYMTENSOR_MAX_N"

# the numpy orbit kernel tabulates all n^k ordered tuples; past this size the
# table itself is the problem and the pure-Python path takes over
_ORDERED_TABLE_CAP = 2_000_000

_INT64_SAFE = 2**62


class SizeBudgetError(ValueError):
    """The requested power dimension exceeds the configured budget."""


class PermanentCapError(ValueError):
    """k exceeds the permanent kernel's subset-enumeration cap."""


def _max_dim() -> int:
    return int(os.environ.get(MAX_DIM_ENV, str(DEFAULT_MAX_DIM)))


# ---------------------------------------------------------------------------
# index tables (cached per n, k, order)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _index_data(n: int, k: int, order: str) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Sorted tuples in the given order and their orbit sizes."""
    msets = enumerate_multisets(n, k, order)
    tuples = tuple(t.entries for t in msets)
    sizes = tuple(orbit_size(t.multiplicity()) for t in msets)
    return tuples, sizes


@lru_cache(maxsize=8)
def _orbit_arrays(n: int, k: int, order: str) -> tuple[np.ndarray, ...]:
    """0-based orbit index arrays, one (D_i, k) array per sorted tuple."""
    tuples, _ = _index_data(n, k, order)
    return tuple(
        np.array(enumerate_orbit(VertexMultiset(t, n)), dtype=np.int64) - 1 for t in tuples
    )


@lru_cache(maxsize=4)
def _ordered_table(n: int, k: int, order: str) -> tuple[np.ndarray, np.ndarray]:
    """All n^k ordered tuples (0-based) and the rank of each tuple's sorted form."""
    tuples, _ = _index_data(n, k, order)
    rank_by_tuple = {t: i for i, t in enumerate(tuples)}
    ordered = np.empty((n**k, k), dtype=np.int64)
    ranks = np.empty(n**k, dtype=np.int64)
    for idx, q in enumerate(product(range(1, n + 1), repeat=k)):
        ordered[idx] = q
        ranks[idx] = rank_by_tuple[tuple(sorted(q))]
    ordered -= 1
    return ordered, ranks


# ---------------------------------------------------------------------------
# Ryser permanents
# ---------------------------------------------------------------------------


def _ryser(rows: Sequence[Sequence]):
    """Permanent by inclusion-exclusion over column subsets, Gray-code order."""
    k = len(rows)
    sums = [0] * k
    total = 0
    prev = 0
    for g in range(1, 1 << k):
        gray = g ^ (g >> 1)
        j = (gray ^ prev).bit_length() - 1
        if gray & (gray ^ prev):
            for i in range(k):
                sums[i] += rows[i][j]
        else:
            for i in range(k):
                sums[i] -= rows[i][j]
        prev = gray
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if gray.bit_count() & 1:
            total -= prod
        else:
            total += prod
    return total if k % 2 == 0 else -total


def ryser_permanent(matrix, cap: int = PERMANENT_CAP_DEFAULT):
    """Permanent of a square matrix; refuses k > cap (2^k subset walk)."""
    rows = [list(r) for r in matrix]
    k = len(rows)
    if k == 0 or any(len(r) != k for r in rows):
        raise ValueError("permanent needs a nonempty square matrix")
    if k > cap:
        raise PermanentCapError(f"matrix size {k} exceeds the permanent cap {cap}")
    return _ryser(rows)


# ---------------------------------------------------------------------------
# per-entry kernels (the public oracle/fast pair)
# ---------------------------------------------------------------------------


def _as_rows(matrix) -> list[list]:
    rows = [[x.item() if isinstance(x, np.generic) else x for x in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("adjacency matrix must be square")
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u][v] != rows[v][u]:
                raise ValueError(f"adjacency matrix not symmetric at ({u + 1}, {v + 1})")
    return rows


def _rows_rational(rows: list[list]) -> bool:
    return all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for r in rows for x in r)


def _check_pair(rows: list[list], i: VertexMultiset, j: VertexMultiset) -> None:
    if i.n != j.n or i.k != j.k:
        raise ValueError(f"index tuples disagree: n={i.n} vs {j.n}, k={i.k} vs {j.k}")
    if len(rows) != i.n:
        raise ValueError(f"matrix is {len(rows)}x{len(rows)} but tuples are over n={i.n}")


def entry_orbit_sum(matrix, i: VertexMultiset, j: VertexMultiset):
    """One power-matrix entry by the defining double sum (the reference kernel).

    Sums the product of matrix entries over every pair of rearrangements of
    ``i`` and ``j``, then divides by sqrt of the two orbit sizes.  Cost is
    |orbit(i)| * |orbit(j)| * k.  Returns an :class:`ExactWeight` when the
    matrix is rational, a float otherwise.
    """
    rows = _as_rows(matrix)
    _check_pair(rows, i, j)
    total = 0
    for p in enumerate_orbit(i):
        for q in enumerate_orbit(j):
            prod = 1
            for x, y in zip(p, q):
                w = rows[x - 1][y - 1]
                if not w:
                    break
                prod *= w
            else:
                total += prod
    d = orbit_size(i.multiplicity()) * orbit_size(j.multiplicity())
    if _rows_rational(rows):
        return ExactWeight.make(Fraction(total, d), d)
    return total / math.sqrt(d)


def entry_permanent(matrix, i: VertexMultiset, j: VertexMultiset, cap: int = PERMANENT_CAP_DEFAULT):
    """One power-matrix entry via a k x k permanent (the fast kernel).

    Equals ``entry_orbit_sum`` exactly on rational inputs: the double sum
    collapses to perm(B) / sqrt(prod of multiplicity factorials), where
    B[a][b] = matrix[i_a][j_b].
    """
    rows = _as_rows(matrix)
    _check_pair(rows, i, j)
    k = i.k
    if k > cap:
        raise PermanentCapError(
            f"k={k} exceeds the permanent cap {cap}; use the orbit kernel instead"
        )
    sub = [[rows[x - 1][y - 1] for y in j.entries] for x in i.entries]
    perm = _ryser(sub)
    m = 1
    for c in i.multiplicity().counts:
        m *= math.factorial(c)
    for c in j.multiplicity().counts:
        m *= math.factorial(c)
    if _rows_rational(rows):
        return ExactWeight.make(Fraction(perm, m), m)
    return perm / math.sqrt(m)


# ---------------------------------------------------------------------------
# full-matrix cores
# ---------------------------------------------------------------------------


def _core_orbit_python(rows, n, k, order):
    tuples, _ = _index_data(n, k, order)
    orbits = [enumerate_orbit(VertexMultiset(t, n)) for t in tuples]
    big = len(tuples)
    core = [[0] * big for _ in range(big)]
    for a in range(big):
        for b in range(a, big):
            total = 0
            for p in orbits[a]:
                for q in orbits[b]:
                    prod = 1
                    for x, y in zip(p, q):
                        w = rows[x - 1][y - 1]
                        if not w:
                            break
                        prod *= w
                    else:
                        total += prod
            core[a][b] = total
            core[b][a] = total
    return core


def _core_permanent_python(rows, n, k, order, cap):
    if k > cap:
        raise PermanentCapError(
            f"k={k} exceeds the permanent cap {cap}; use the orbit kernel instead"
        )
    tuples, sizes = _index_data(n, k, order)
    kfact = math.factorial(k)
    big = len(tuples)
    core = [[0] * big for _ in range(big)]
    for a in range(big):
        ta = tuples[a]
        for b in range(a, big):
            tb = tuples[b]
            sub = [[rows[x - 1][y - 1] for y in tb] for x in ta]
            val = Fraction(sizes[a] * sizes[b], kfact) * _ryser(sub)
            if isinstance(val, Fraction) and val.denominator == 1:
                val = int(val)
            core[a][b] = val
            core[b][a] = val
    return core


def _core_orbit_numpy(a_mat: np.ndarray, n: int, k: int, order: str, chunk: int = 8192):
    """Literal double sum for all entries, chunked per row.

    For row i the kernel materializes the product of k matrix entries for
    every (p, q) with p a rearrangement of tuple i and q ANY ordered tuple
    whose sorted form has rank >= i, then folds the q-axis by that rank.
    Work and memory are exactly the upper-triangle double-sum terms.
    """
    dtype = a_mat.dtype
    big = multiset_count(n, k)
    ordered, ranks = _ordered_table(n, k, order)
    orbits = _orbit_arrays(n, k, order)
    core = np.zeros((big, big), dtype=dtype)
    for a in range(big):
        orb = orbits[a]
        cols = np.nonzero(ranks >= a)[0]
        row_acc = np.zeros(big, dtype=dtype)
        for start in range(0, len(cols), chunk):
            sel = cols[start : start + chunk]
            q_idx = ordered[sel]
            terms = a_mat[orb[:, None, :], q_idx[None, :, :]]
            sums = terms.prod(axis=2).sum(axis=0)
            np.add.at(row_acc, ranks[sel], sums)
        core[a, a:] = row_acc[a:]
    core = core + np.triu(core, 1).T
    return core


def _core_permanent_numpy(a_mat: np.ndarray, n: int, k: int, order: str):
    """Vectorized Ryser: one Gray-code walk per column, all rows at once."""
    dtype = a_mat.dtype
    tuples, sizes = _index_data(n, k, order)
    big = len(tuples)
    tuples0 = np.array(tuples, dtype=np.int64) - 1
    d_arr = np.array(sizes, dtype=dtype)
    kfact = math.factorial(k)
    sign_k = 1 if k % 2 == 0 else -1
    core = np.zeros((big, big), dtype=dtype)
    for b in range(big):
        col_mat = a_mat[:, tuples0[b]]  # (n, k)
        row_idx = tuples0[: b + 1]
        acc = np.zeros(b + 1, dtype=dtype)
        cs = np.zeros(n, dtype=dtype)
        prev = 0
        for g in range(1, 1 << k):
            gray = g ^ (g >> 1)
            j = (gray ^ prev).bit_length() - 1
            if gray & (gray ^ prev):
                cs += col_mat[:, j]
            else:
                cs -= col_mat[:, j]
            prev = gray
            prod = cs[row_idx].prod(axis=1)
            if gray.bit_count() & 1:
                acc -= prod
            else:
                acc += prod
        perms = sign_k * acc
        vals = d_arr[: b + 1] * d_arr[b] * perms
        if dtype == np.int64:
            vals = vals // kfact  # exact: the core is an integer by construction
        else:
            vals = vals / kfact
        core[: b + 1, b] = vals
        core[b, : b + 1] = vals
    return core


def _scaled_int_rows(rows: list[list]) -> tuple[list[list[int]], int]:
    """Clear denominators: returns integer rows and the common scale L."""
    scale = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
    scaled = [[int(x * scale) for x in r] for r in rows]
    return scaled, scale


def _int64_bound(method: str, k: int, w_max: int, d_max: int) -> int:
    if method == "orbit":
        return d_max * d_max * w_max**k
    # Ryser intermediate: |column-subset sums| <= k*w, products <= (k*w)^k,
    # accumulated over < 2^k subsets, then scaled by the two orbit sizes
    return d_max * d_max * (2**k) * (k * w_max) ** k


@dataclass(frozen=True, eq=False)
class SymPowerMatrix:
    """The N x N power matrix in factored form: core S and orbit sizes D.

    ``core`` is a nested list of ints/Fractions when ``exact`` (rational
    input weights), else a float64 array.  The materialized entry is
    core[i][j] / sqrt(D[i] * D[j]).
    """

    n: int
    k: int
    order: str
    method: str
    exact: bool
    tuples: tuple[tuple[int, ...], ...]
    orbit_sizes: tuple[int, ...]
    core: object = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.orbit_sizes)

    def core_entry(self, i: int, j: int):
        if isinstance(self.core, np.ndarray):
            return self.core[i, j]
        return self.core[i][j]

    def entry(self, i: int, j: int) -> float:
        d = self.orbit_sizes[i] * self.orbit_sizes[j]
        return float(self.core_entry(i, j)) / math.sqrt(d)

    def entry_exact(self, i: int, j: int) -> ExactWeight:
        if not self.exact:
            raise ValueError("matrix was computed in float mode; exact entries unavailable")
        d = self.orbit_sizes[i] * self.orbit_sizes[j]
        return ExactWeight.make(Fraction(self.core_entry(i, j), d), d)

    def to_dense(self) -> np.ndarray:
        """Materialize the float matrix E = S / sqrt(D outer D)."""
        d = np.array(self.orbit_sizes, dtype=np.float64)
        if isinstance(self.core, np.ndarray):
            s = self.core.astype(np.float64)
        else:
            s = np.array([[float(x) for x in row] for row in self.core])
        return s / np.sqrt(np.outer(d, d))

    def vertex_labels(self) -> tuple[str, ...]:
        return tuple(",".join(map(str, t)) for t in self.tuples)

    def to_graph(self) -> WeightedGraph:
        dense = self.to_dense()
        weights = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                w = dense[i, j]
                if w != 0.0:
                    weights[(i + 1, j + 1)] = float(w)
        return WeightedGraph(self.dim, weights, self.vertex_labels())


def sym_power(
    graph: WeightedGraph,
    k: int,
    method: str = "permanent",
    order: str = "paper",
    max_dim: int | None = None,
    permanent_cap: int = PERMANENT_CAP_DEFAULT,
) -> SymPowerMatrix:
    """Adjacency matrix of the k-th symmetric tensor power of ``graph``.

    Rational input weights produce an exact core; any float weight switches
    the whole core to float64.  The result is deterministic for fixed
    arguments.  Raises :class:`SizeBudgetError` when the power dimension
    exceeds ``max_dim`` (default: the SYMTENSOR_MAX_N environment variable,
    else 5000).
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    n = graph.n
    big = multiset_count(n, k)
    cap = _max_dim() if max_dim is None else max_dim
    if big > cap:
        raise SizeBudgetError(
            f"power dimension N={big} (n={n}, k={k}) exceeds the budget {cap}; "
            f"raise {MAX_DIM_ENV} to override"
        )
    if method == "permanent" and k > permanent_cap:
        raise PermanentCapError(
            f"k={k} exceeds the permanent cap {permanent_cap}; use the orbit kernel instead"
        )
    tuples, sizes = _index_data(n, k, order)
    rows = graph.weight_rows()
    exact = graph.is_rational

    if exact:
        int_rows, scale = _scaled_int_rows(rows)
        w_max = max((abs(x) for r in int_rows for x in r), default=0) or 1
        d_max = max(sizes)
        use_numpy = _int64_bound(method, k, w_max, d_max) < _INT64_SAFE
        if method == "orbit" and n**k > _ORDERED_TABLE_CAP:
            use_numpy = False
        if use_numpy:
            a_mat = np.array(int_rows, dtype=np.int64)
            if method == "orbit":
                s64 = _core_orbit_numpy(a_mat, n, k, order)
            else:
                s64 = _core_permanent_numpy(a_mat, n, k, order)
            raw = s64.tolist()
            if scale == 1:
                core = raw
            else:
                den = scale**k
                core = [
                    [int(f) if (f := Fraction(x, den)).denominator == 1 else f for x in row]
                    for row in raw
                ]
        else:
            if method == "orbit":
                core = _core_orbit_python(rows, n, k, order)
            else:
                core = _core_permanent_python(rows, n, k, order, permanent_cap)
    else:
        a_mat = np.array([[float(x) for x in r] for r in rows], dtype=np.float64)
        if method == "orbit":
            if n**k > _ORDERED_TABLE_CAP:
                core = np.array(
                    [[float(x) for x in row] for row in _core_orbit_python(rows, n, k, order)]
                )
            else:
                core = _core_orbit_numpy(a_mat, n, k, order)
        else:
            core = _core_permanent_numpy(a_mat, n, k, order)

    return SymPowerMatrix(
        n=n,
        k=k,
        order=order,
        method=method,
        exact=exact,
        tuples=tuples,
        orbit_sizes=sizes,
        core=core,
    )


def sym_power_graph(
    graph: WeightedGraph,
    k: int,
    method: str = "permanent",
    order: str = "paper",
    max_dim: int | None = None,
) -> WeightedGraph:
    """The power as a graph: one vertex per sorted tuple, labeled "i1,i2,...";
    edges are the nonzero matrix entries, diagonal entries become loops."""
    return sym_power(graph, k, method=method, order=order, max_dim=max_dim).to_graph()


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def _check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    images = tuple(sigma)
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
    return images


@dataclass(frozen=True)
class SymPermutation:
    """The permutation a vertex permutation induces on sorted-tuple ranks."""

    n: int
    k: int
    order: str
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("mapping is not a bijection on ranks")

    @property
    def dim(self) -> int:
        return len(self.mapping)

    def apply(self, r: int) -> int:
        return self.mapping[r]

    def matrix(self) -> np.ndarray:
        """0/1 matrix M with M[x, mapping[x]] = 1."""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for x, y in enumerate(self.mapping):
            m[x, y] = 1
        return m


def sym_power_permutation(sigma: Sequence[int], k: int, order: str = "paper") -> SymPermutation:
    """Rank permutation sending each sorted tuple to the sorted image tuple.

    ``sigma`` lists 1-based images: vertex v maps to sigma[v-1].  The matrix
    of the result equals the symmetric power of the permutation matrix with
    entry (i, j) = 1 iff j = sigma(i).
    """
    images = _check_permutation(sigma)
    n = len(images)
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    msets = enumerate_multisets(n, k, order)
    mapping = []
    for t in msets:
        image = VertexMultiset(tuple(sorted(images[e - 1] for e in t.entries)), n)
        mapping.append(rank(image, order))
    return SymPermutation(n=n, k=k, order=order, mapping=tuple(mapping))


def permutation_matrix(sigma: Sequence[int]) -> list[list[int]]:
    """The (generally asymmetric) permutation matrix as nested lists."""
    images = _check_permutation(sigma)
    n = len(images)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        rows[i][j - 1] = 1
    return rows


def relabel(graph: WeightedGraph, sigma: Sequence[int]) -> WeightedGraph:
    """Rename vertices: the new weight of (sigma(u), sigma(v)) is weight(u, v)."""
    images = _check_permutation(sigma)
    if len(images) != graph.n:
        raise ValueError(f"permutation length {len(images)} != vertex count {graph.n}")
    weights = {}
    for u, v, w in graph.edges():
        weights[(images[u - 1], images[v - 1])] = w
    labels = None
    if graph.labels is not None:
        out = [""] * graph.n
        for v in range(1, graph.n + 1):
            out[images[v - 1] - 1] = graph.labels[v - 1]
        labels = tuple(out)
    return WeightedGraph(graph.n, weights, labels)


# ---------------------------------------------------------------------------
# nesting across consecutive powers
# ---------------------------------------------------------------------------


def extend_multiset(t: VertexMultiset, extra: Iterable[int]) -> VertexMultiset:
    """Sorted union of ``t`` with extra vertex copies (same ambient n)."""
    return VertexMultiset(tuple(sorted(tuple(t.entries) + tuple(extra))), t.n)


def loop_injection(t: VertexMultiset, loop_vertex: int, k2: int) -> VertexMultiset:
    """Pad with copies of a looped vertex to lift a tuple from power k to k2."""
    if k2 < t.k:
        raise ValueError(f"target exponent {k2} below tuple length {t.k}")
    return extend_multiset(t, (loop_vertex,) * (k2 - t.k))


def edge_injection(t: VertexMultiset, u: int, v: int, steps: int) -> VertexMultiset:
    """Pad with ``steps`` copies of an adjacent pair, lifting k to k + 2*steps."""
    return extend_multiset(t, (u, v) * steps)


def weight_nesting_report(
    graph: WeightedGraph,
    k1: int,
    k2: int,
    method: str = "permanent",
    order: str = "paper",
) -> list[tuple[str, str, float, float]]:
    """Exploratory comparison of edge weights across two powers.

    Maps each edge of the k1 power into the k2 power (padding with a looped
    vertex when one exists, else with an adjacent pair; k2 - k1 must then be
    even) and tabulates (label_i, label_j, weight_k1, weight_k2).  No
    monotonicity is asserted; this exists to poke at the question.
    """
    looped = [v for v in range(1, graph.n + 1) if graph.weight(v, v) != 0]
    if looped:
        lift = lambda t: loop_injection(t, looped[0], k2)  # noqa: E731
    else:
        if (k2 - k1) % 2 != 0:
            raise ValueError("without a loop, k2 - k1 must be even")
        uv = next(((u, v) for u, v, _ in graph.edges() if u != v), None)
        if uv is None:
            raise ValueError("graph has no edge to alternate along")
        lift = lambda t: edge_injection(t, uv[0], uv[1], (k2 - k1) // 2)  # noqa: E731
    small = sym_power(graph, k1, method=method, order=order)
    large = sym_power(graph, k2, method=method, order=order)
    report = []
    for a in range(small.dim):
        for b in range(a, small.dim):
            w1 = small.entry(a, b)
            if w1 == 0.0:
                continue
            ta = VertexMultiset(small.tuples[a], graph.n)
            tb = VertexMultiset(small.tuples[b], graph.n)
            ra = rank(lift(ta), order)
            rb = rank(lift(tb), order)
            report.append((str(ta), str(tb), w1, large.entry(ra, rb)))
    return report
