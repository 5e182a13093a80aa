import math
import random
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from symgraph.combinatorics import VertexMultiset, enumerate_multisets, rank
from symgraph.exact import ExactWeight
from symgraph.graphs import WeightedGraph, complete, complete_loops, path, scepter, star
from symgraph.power import (
    PermanentCapError,
    SizeBudgetError,
    edge_injection,
    entry_orbit_sum,
    entry_permanent,
    loop_injection,
    permutation_matrix,
    relabel,
    ryser_permanent,
    sym_power,
    sym_power_graph,
    sym_power_permutation,
    weight_nesting_report,
)

ONE = ExactWeight.of(1)
ZERO = ExactWeight.of(0)
SQRT2 = ExactWeight.sqrt(2)
SQRT3 = ExactWeight.sqrt(3)
SQRT5 = ExactWeight.sqrt(5)
SQRT6 = ExactWeight.sqrt(6)
SQRT10 = ExactWeight.sqrt(10)


def exact_matrix(power):
    return [[power.entry_exact(i, j) for j in range(power.dim)] for i in range(power.dim)]


def naive_permanent(rows):
    k = len(rows)
    total = 0
    for perm in permutations(range(k)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += prod
    return total


# ---------------------------------------------------------------------------
# Ryser permanent
# ---------------------------------------------------------------------------


def test_ryser_small_cases():
    assert ryser_permanent([[1, 1], [1, 1]]) == 2
    assert ryser_permanent([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert ryser_permanent([[5]]) == 5


def test_ryser_matches_naive_oracle():
    rng = random.Random(42)
    for size in range(1, 6):
        for _ in range(5):
            rows = [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
            assert ryser_permanent(rows) == naive_permanent(rows)
    rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(4)] for _ in range(4)]
    assert ryser_permanent(rows) == naive_permanent(rows)


def test_ryser_cap():
    with pytest.raises(PermanentCapError):
        ryser_permanent([[1] * 21 for _ in range(21)], cap=20)
    with pytest.raises(ValueError):
        ryser_permanent([[1, 2]])


# ---------------------------------------------------------------------------
# per-entry kernels
# ---------------------------------------------------------------------------


def test_entry_orbit_sum_symbolic_2x2():
    # random rational 2x2 stands in for the symbolic entries
    a11, a12, a22 = Fraction(2, 3), Fraction(-1, 2), Fraction(5, 7)
    a = [[a11, a12], [a12, a22]]
    i11 = VertexMultiset((1, 1), 2)
    i12 = VertexMultiset((1, 2), 2)
    i22 = VertexMultiset((2, 2), 2)
    assert entry_orbit_sum(a, i11, i11) == ExactWeight.of(a11**2)
    assert entry_orbit_sum(a, i11, i22) == ExactWeight.of(a12**2)
    assert entry_orbit_sum(a, i11, i12) == ExactWeight.make(a11 * a12, 2)
    assert entry_orbit_sum(a, i12, i12) == ExactWeight.of(a11 * a22 + a12 * a12)


def test_entry_orbit_sum_symbolic_k3():
    a11, a12, a22 = Fraction(3), Fraction(2), Fraction(-5)
    a = [[a11, a12], [a12, a22]]
    i112 = VertexMultiset((1, 1, 2), 2)
    i122 = VertexMultiset((1, 2, 2), 2)
    want = a12**2 * a12 + 2 * a11 * a12 * a22  # a21 == a12 for symmetric input
    assert entry_orbit_sum(a, i112, i122) == ExactWeight.of(want)


def test_entry_constant_tuples_reproduce_01_matrix():
    g = complete(3)
    rows = g.weight_rows()
    for k in (1, 2, 3):
        for u in range(1, 4):
            for v in range(1, 4):
                got = entry_orbit_sum(rows, VertexMultiset((u,) * k, 3), VertexMultiset((v,) * k, 3))
                assert got == ExactWeight.of(rows[u - 1][v - 1])


def test_entry_permanent_equals_orbit_sum():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(2, 4)
        k = rng.randint(1, 4)
        rows = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(u, n):
                w = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                rows[u][v] = w
                rows[v][u] = w
        msets = enumerate_multisets(n, k)
        for i in msets:
            for j in msets:
                assert entry_permanent(rows, i, j) == entry_orbit_sum(rows, i, j)


def test_entry_permanent_all_ones_loop():
    a = [[1, 1], [1, 1]]
    i12 = VertexMultiset((1, 2), 2)
    assert entry_permanent(a, i12, i12) == 2


def test_entry_zero_matrix():
    a = [[0, 0], [0, 0]]
    i = VertexMultiset((1, 2), 2)
    assert entry_orbit_sum(a, i, i) == 0
    assert entry_permanent(a, i, i) == 0


def test_entry_dimension_mismatch():
    a = [[0, 1], [1, 0]]
    with pytest.raises(ValueError):
        entry_orbit_sum(a, VertexMultiset((1, 2), 3), VertexMultiset((1, 2), 3))
    with pytest.raises(ValueError):
        entry_orbit_sum(a, VertexMultiset((1,), 2), VertexMultiset((1, 2), 2))


def test_entry_float_mode():
    a = [[0.5, 1.5], [1.5, 0.0]]
    i11 = VertexMultiset((1, 1), 2)
    i12 = VertexMultiset((1, 2), 2)
    got = entry_orbit_sum(a, i11, i12)
    assert isinstance(got, float)
    assert got == pytest.approx(math.sqrt(2) * 0.5 * 1.5, rel=1e-15)


# ---------------------------------------------------------------------------
# full powers: golden matrices
# ---------------------------------------------------------------------------


def test_complete3_square_golden():
    want = [
        [ZERO, ONE, ONE, ZERO, ZERO, SQRT2],
        [ONE, ZERO, ONE, ZERO, SQRT2, ZERO],
        [ONE, ONE, ZERO, SQRT2, ZERO, ZERO],
        [ZERO, ZERO, SQRT2, ONE, ONE, ONE],
        [ZERO, SQRT2, ZERO, ONE, ONE, ONE],
        [SQRT2, ZERO, ZERO, ONE, ONE, ONE],
    ]
    for method in ("orbit", "permanent"):
        power = sym_power(complete(3), 2, method=method, order="paper")
        assert exact_matrix(power) == want


SCEPTER_GOLDEN = {
    2: [
        [ONE, ONE, SQRT2],
        [ONE, ZERO, ZERO],
        [SQRT2, ZERO, ONE],
    ],
    3: [
        [ONE, ONE, SQRT3, SQRT3],
        [ONE, ZERO, ZERO, ZERO],
        [SQRT3, ZERO, ExactWeight.of(2), ONE],
        [SQRT3, ZERO, ONE, ZERO],
    ],
    4: [
        [ONE, ONE, ExactWeight.of(2), SQRT6, ExactWeight.of(2)],
        [ONE, ZERO, ZERO, ZERO, ZERO],
        [ExactWeight.of(2), ZERO, ExactWeight.of(3), SQRT6, ONE],
        [SQRT6, ZERO, SQRT6, ONE, ZERO],
        [ExactWeight.of(2), ZERO, ONE, ZERO, ZERO],
    ],
    5: [
        [ONE, ONE, SQRT5, SQRT10, SQRT10, SQRT5],
        [ONE, ZERO, ZERO, ZERO, ZERO, ZERO],
        [SQRT5, ZERO, ExactWeight.of(4), ExactWeight.make(3, 2), ExactWeight.make(2, 2), ONE],
        [SQRT10, ZERO, ExactWeight.make(3, 2), ExactWeight.of(3), ONE, ZERO],
        [SQRT10, ZERO, ExactWeight.make(2, 2), ONE, ZERO, ZERO],
        [SQRT5, ZERO, ONE, ZERO, ZERO, ZERO],
    ],
}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_scepter_powers_golden(k):
    power = sym_power(scepter(), k, order="paper")
    assert exact_matrix(power) == SCEPTER_GOLDEN[k]


def test_power_k1_is_adjacency():
    for g in (scepter(), path(4), complete(3)):
        power = sym_power(g, 1)
        assert [[power.core_entry(i, j) for j in range(power.dim)] for i in range(power.dim)] == [
            [g.weight(u, v) for v in range(1, g.n + 1)] for u in range(1, g.n + 1)
        ]
        assert all(d == 1 for d in power.orbit_sizes)


def test_power_symmetry_and_dims():
    g = path(4)
    for k in (1, 2, 3):
        power = sym_power(g, k)
        dense = power.to_dense()
        assert dense.shape == (power.dim, power.dim)
        assert np.array_equal(dense, dense.T)


def test_kernels_agree_on_random_rational_graphs():
    rng = random.Random(9)
    for _ in range(10):
        n = rng.randint(2, 4)
        k = rng.randint(1, 4)
        weights = {}
        for u in range(1, n + 1):
            for v in range(u, n + 1):
                if rng.random() < 0.7:
                    weights[(u, v)] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        g = WeightedGraph(n, weights)
        a = sym_power(g, k, method="orbit")
        b = sym_power(g, k, method="permanent")
        assert a.core == b.core
        assert a.orbit_sizes == b.orbit_sizes


def test_python_fallback_matches_int64_paths():
    from symgraph.power import (
        _core_orbit_numpy,
        _core_orbit_python,
        _core_permanent_numpy,
        _core_permanent_python,
    )

    rng = random.Random(13)
    for _ in range(6):
        n = rng.randint(2, 3)
        k = rng.randint(1, 3)
        rows = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(u, n):
                w = rng.randint(-2, 3)
                rows[u][v] = w
                rows[v][u] = w
        a64 = np.array(rows, dtype=np.int64)
        assert _core_orbit_numpy(a64, n, k, "paper").tolist() == _core_orbit_python(
            rows, n, k, "paper"
        )
        assert _core_permanent_numpy(a64, n, k, "paper").tolist() == _core_permanent_python(
            rows, n, k, "paper", 20
        )


def test_float_mode_close_to_exact():
    g = scepter()
    exact = sym_power(g, 3).to_dense()
    float_graph = WeightedGraph(2, {(1, 1): 1.0, (1, 2): 1.0})
    for method in ("orbit", "permanent"):
        floaty = sym_power(float_graph, 3, method=method)
        assert not floaty.exact
        assert np.allclose(floaty.to_dense(), exact, atol=1e-12)
    with pytest.raises(ValueError):
        sym_power(float_graph, 3).entry_exact(0, 0)


def test_float_kernels_agree_on_irrational_weights():
    g = WeightedGraph(3, {(1, 2): math.sqrt(2), (2, 3): 0.75, (1, 1): math.pi / 3})
    for k in (1, 2, 3):
        a = sym_power(g, k, method="orbit").to_dense()
        b = sym_power(g, k, method="permanent").to_dense()
        assert np.allclose(a, b, rtol=1e-12, atol=1e-12)


def test_orders_describe_same_matrix():
    rng = random.Random(71)
    for _ in range(5):
        n = rng.randint(2, 4)
        k = rng.randint(1, 4)
        weights = {}
        for u in range(1, n + 1):
            for v in range(u, n + 1):
                if rng.random() < 0.6:
                    weights[(u, v)] = rng.randint(1, 2)
        g = WeightedGraph(n, weights or {(1, 1): 1})
        pp = sym_power(g, k, order="paper")
        ll = sym_power(g, k, order="lex")
        conv = [rank(VertexMultiset(t, n), "lex") for t in pp.tuples]
        for x in range(pp.dim):
            for y in range(pp.dim):
                assert ll.core_entry(conv[x], conv[y]) == pp.core_entry(x, y)
        assert [ll.orbit_sizes[c] for c in conv] == list(pp.orbit_sizes)


def test_huge_weights_use_python_exact_fallback():
    # (4!)^2 * (1e9)^4 blows the int64 bound, forcing the pure-Python path
    big = 10**9
    g = WeightedGraph(2, {(1, 1): big, (1, 2): big + 1})
    a = sym_power(g, 4, method="orbit")
    b = sym_power(g, 4, method="permanent")
    assert a.exact and isinstance(a.core, list)
    assert a.core == b.core
    assert a.core[0][1] == (big + 1) ** 4  # constant tuples: plain 4th power


def test_size_budget():
    with pytest.raises(SizeBudgetError):
        sym_power(complete(10), 6, max_dim=100)


def test_permanent_cap_in_power():
    with pytest.raises(PermanentCapError):
        sym_power(WeightedGraph(1, {(1, 1): 1}), 25, method="permanent", permanent_cap=20)


def test_bad_arguments():
    with pytest.raises(ValueError):
        sym_power(path(2), 0)
    with pytest.raises(ValueError):
        sym_power(path(2), 2, method="magic")


# ---------------------------------------------------------------------------
# power graphs
# ---------------------------------------------------------------------------


def test_path3_square_graph_structure():
    g = sym_power_graph(path(3), 2)
    assert g.n == 6
    labels = g.labels
    by_label = {lab: v for v, lab in enumerate(labels, start=1)}
    def w(a, b):
        return g.weight(by_label[a], by_label[b])
    assert w("1,1", "2,2") == 1
    assert w("2,2", "3,3") == 1
    assert w("2,2", "1,3") == pytest.approx(math.sqrt(2), rel=1e-15)
    assert w("1,2", "2,3") == 1
    assert w("1,2", "1,2") == 1  # loop
    assert w("2,3", "2,3") == 1  # loop
    assert g.pair_count() == 6


def test_complete_loops3_square_graph():
    g = sym_power_graph(complete_loops(3), 2)
    assert g.n == 6
    assert g.pair_count() == 21  # every unordered pair incl. loops
    by_label = {lab: v for v, lab in enumerate(g.labels, start=1)}
    assert g.weight(by_label["1,1"], by_label["1,1"]) == 1
    assert g.weight(by_label["1,2"], by_label["1,2"]) == 2
    assert g.weight(by_label["1,1"], by_label["2,3"]) == pytest.approx(math.sqrt(2), rel=1e-15)


def test_star3_square_graph():
    g = sym_power_graph(star(3), 2)
    by_label = {lab: v for v, lab in enumerate(g.labels, start=1)}
    assert g.weight(by_label["1,1"], by_label["2,3"]) == pytest.approx(math.sqrt(2), rel=1e-15)
    mixed = [by_label["1,2"], by_label["1,3"], by_label["1,4"]]
    for u in mixed:
        for v in mixed:
            assert g.has_edge(u, v)


# ---------------------------------------------------------------------------
# permutations and equivariance
# ---------------------------------------------------------------------------


def test_sym_power_permutation_examples():
    swap = sym_power_permutation([2, 1], 2)
    assert swap.matrix().tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    swap3 = sym_power_permutation([2, 1], 3)
    assert swap3.matrix().tolist() == [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    rot = sym_power_permutation([2, 3, 1], 2)
    assert rot.matrix().tolist() == [
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ]


def test_all_3_vertex_permutation_one_lines():
    # one-line forms of the induced rank permutations for n=3, k=2
    want = {
        (1, 2, 3): "123456",
        (1, 3, 2): "132546",
        (2, 1, 3): "213465",
        (2, 3, 1): "231645",
        (3, 1, 2): "312564",
        (3, 2, 1): "321654",
    }
    for sigma, line in want.items():
        sp = sym_power_permutation(list(sigma), 2)
        got = "".join(str(r + 1) for r in sp.mapping)
        assert got == line
        # the base permutation is a prefix of its induced power
        assert got[:3] == "".join(map(str, sigma))


def test_identity_permutation_power():
    sp = sym_power_permutation([1, 2, 3, 4], 3)
    assert sp.mapping == tuple(range(sp.dim))


def test_symmetric_permutation_matches_graph_power():
    # the swap matrix is symmetric, so the graph pipeline applies directly
    g = WeightedGraph.from_matrix([[0, 1], [1, 0]])
    power = sym_power(g, 2)
    sp = sym_power_permutation([2, 1], 2)
    assert np.array_equal(power.to_dense(), sp.matrix().astype(float))


def test_permutation_validation():
    with pytest.raises(ValueError):
        sym_power_permutation([1, 1], 2)
    with pytest.raises(ValueError):
        sym_power_permutation([1, 2], 0)


def test_relabel_basics():
    g = path(3)
    assert relabel(g, [1, 2, 3]) == g
    assert relabel(g, [3, 2, 1]) == g  # path reversal is an automorphism
    h = relabel(WeightedGraph(2, {(1, 1): 7}), [2, 1])
    assert h.weight(2, 2) == 7 and h.weight(1, 1) == 0
    with pytest.raises(ValueError):
        relabel(g, [1, 2])


def test_equivariance_random():
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(2, 5)
        k = rng.randint(1, 3)
        weights = {}
        for u in range(1, n + 1):
            for v in range(u, n + 1):
                if rng.random() < 0.6:
                    weights[(u, v)] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        g = WeightedGraph(n, weights)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        a = sym_power(g, k)
        b = sym_power(relabel(g, sigma), k)
        sp = sym_power_permutation(sigma, k)
        for x in range(a.dim):
            for y in range(a.dim):
                assert b.core_entry(sp.apply(x), sp.apply(y)) == a.core_entry(x, y)
        # matrix form: E_B = P^T E_A P with P[x, image(x)] = 1
        p = sp.matrix().astype(float)
        assert np.allclose(b.to_dense(), p.T @ a.to_dense() @ p, atol=1e-12)


def test_permutation_power_matrix_is_permutation():
    rng = random.Random(33)
    for _ in range(10):
        n = rng.randint(2, 5)
        k = rng.randint(1, 3)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        m = sym_power_permutation(sigma, k).matrix()
        assert np.array_equal(m.sum(axis=0), np.ones(m.shape[0], dtype=np.int64))
        assert np.array_equal(m.sum(axis=1), np.ones(m.shape[0], dtype=np.int64))


def test_permutation_matrix_helper():
    assert permutation_matrix([2, 3, 1]) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


# ---------------------------------------------------------------------------
# nesting
# ---------------------------------------------------------------------------


def test_injections():
    t = VertexMultiset((1, 2), 3)
    assert loop_injection(t, 3, 4).entries == (1, 2, 3, 3)
    assert edge_injection(t, 1, 2, 1).entries == (1, 1, 2, 2)
    with pytest.raises(ValueError):
        loop_injection(t, 1, 1)


def test_nesting_scepter_loop_vertex():
    g = scepter()
    for k1, k2 in ((1, 2), (2, 3), (2, 4), (3, 5)):
        small = sym_power(g, k1)
        big = sym_power(g, k2)
        for a in range(small.dim):
            for b in range(small.dim):
                if small.core_entry(a, b):
                    ra = rank(loop_injection(VertexMultiset(small.tuples[a], 2), 1, k2))
                    rb = rank(loop_injection(VertexMultiset(small.tuples[b], 2), 1, k2))
                    assert big.core_entry(ra, rb)


def test_nesting_path_edge_alternation():
    g = path(3)
    small = sym_power(g, 1)
    big = sym_power(g, 3)
    for a in range(small.dim):
        for b in range(small.dim):
            if small.core_entry(a, b):
                ra = rank(edge_injection(VertexMultiset(small.tuples[a], 3), 1, 2, 1))
                rb = rank(edge_injection(VertexMultiset(small.tuples[b], 3), 2, 1, 1))
                assert big.core_entry(ra, rb)


def test_weight_nesting_report_runs():
    rows = weight_nesting_report(scepter(), 2, 3)
    assert rows and all(len(row) == 4 for row in rows)
    assert all(w1 > 0 for _, _, w1, _ in rows)
    with pytest.raises(ValueError):
        weight_nesting_report(path(3), 2, 3)  # no loop and odd gap
