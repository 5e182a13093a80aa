import pytest

from symgraph.verify import (
    Failure,
    SuiteResult,
    family_graphs,
    random_connected_graph01,
    random_graph01,
    random_rational_graph,
    run_suites,
    suite_wiener,
)
from symgraph.analysis import components, is_bipartite
import random


def test_failure_line_format():
    f = Failure("spectra", "case one", "1 2", "3")
    assert f.line() == "FAIL spectra case one 1 2 3"
    # suites compact their payloads before building failures
    res = SuiteResult("demo")
    assert not res.check("my case", [1, 2], [1, 3])
    assert res.failures[0].line() == "FAIL demo mycase [1,2] [1,3]"
    assert res.check("fine", 5, 5)
    assert res.checks == 2


def test_run_suites_dispatch():
    results = run_suites(["wiener"], nmax=4)
    assert len(results) == 1 and results[0].name == "wiener"
    with pytest.raises(ValueError):
        run_suites(["nonsense"])


def test_run_all_returns_every_suite():
    names = [r.name for r in run_suites("all", nmax=2, kmax=1, seed=1)]
    assert names == ["kernels", "spectra", "subgraph", "components", "degrees", "wiener", "permutation"]


def test_wiener_suite_reports_every_case():
    res = suite_wiener(nmax=5, kmax=2)
    assert res.ok
    assert sum(1 for r in res.report if " complete " in r) == 3 * 2  # n in 3..5, k in 1..2
    assert sum(1 for r in res.report if " cycle_square " in r) == 2  # n in {3, 5}


def test_generators_deterministic():
    a = random_graph01(random.Random(5), 6)
    b = random_graph01(random.Random(5), 6)
    assert a == b
    assert random_rational_graph(random.Random(5), 4) == random_rational_graph(random.Random(5), 4)


def test_connected_generator_properties():
    rng = random.Random(2)
    for _ in range(20):
        g = random_connected_graph01(rng, rng.randint(2, 7), bipartite=True)
        assert components(g).count == 1
        assert is_bipartite(g)
    for _ in range(20):
        g = random_connected_graph01(rng, rng.randint(2, 7))
        assert components(g).count == 1


def test_family_graphs_cover_names():
    tags = {tag.rsplit("_", 1)[0] if tag[-1].isdigit() else tag for tag, _ in family_graphs(4)}
    assert "scepter" in tags
    assert any(t.startswith("path") for t in tags)
    assert any(t.startswith("complete_bipartite") for t in tags)
    assert all(g.n <= 4 or tag.startswith("complete_bipartite") for tag, g in family_graphs(4))
