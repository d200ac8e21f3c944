from itertools import combinations, product

import pytest

import reedcheck as rc
from reedcheck.graphs import Graph


# blunt exhaustive oracles, deliberately sharing no logic with the solvers

def oracle_clique(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for subset in combinations(range(g.n), r):
            if all(g.has_edge(v, w) for v, w in combinations(subset, 2)):
                return r
    return best


def oracle_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    edges = list(g.edges())
    for k in range(1, g.n + 1):
        for assignment in product(range(k), repeat=g.n):
            if all(assignment[v] != assignment[w] for v, w in edges):
                return k
    raise AssertionError("unreachable")


def oracle_independence(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for subset in combinations(range(g.n), r):
            if not any(g.has_edge(v, w) for v, w in combinations(subset, 2)):
                return r
    return best


def test_max_degree_examples():
    assert rc.max_degree(Graph.complete(5)) == 4
    assert rc.max_degree(Graph.cycle(5)) == 2
    assert rc.max_degree(Graph.empty(4)) == 0
    assert rc.max_degree(Graph.empty(0)) == 0


def test_clique_number_examples():
    assert rc.clique_number(Graph.complete(5)) == 5
    assert rc.clique_number(Graph.cycle(5)) == 2
    assert rc.clique_number(Graph.path(5)) == 2
    assert rc.clique_number(Graph.empty(0)) == 0


def test_chromatic_number_examples():
    assert rc.chromatic_number(Graph.cycle(5)) == 3
    assert rc.chromatic_number(Graph.complete(5)) == 5
    assert rc.chromatic_number(Graph.empty(3)) == 1


def test_independence_number_examples():
    assert rc.independence_number(Graph.cycle(5)) == 2
    assert rc.independence_number(Graph.complete(5)) == 1
    assert rc.independence_number(Graph.empty(4)) == 4


def test_reed_bound_examples():
    assert rc.reed_bound(4, 5) == 5
    assert rc.reed_bound(2, 2) == 3
    assert rc.reed_bound(0, 1) == 1
    with pytest.raises(ValueError):
        rc.reed_bound(-1, 0)


def test_reed_bound_is_exact_ceiling():
    for delta in range(11):
        for omega in range(11):
            total = delta + omega + 1
            assert rc.reed_bound(delta, omega) == -(-total // 2)


def test_bundle_examples():
    c5 = rc.invariant_bundle(Graph.cycle(5))
    assert (c5.delta, c5.omega, c5.chi, c5.reed_bound, c5.slack) == (2, 2, 3, 3, 0)
    k5 = rc.invariant_bundle(Graph.complete(5))
    assert (k5.delta, k5.omega, k5.chi, k5.reed_bound, k5.slack) == (4, 5, 5, 5, 0)
    p4 = rc.invariant_bundle(Graph.path(4))
    assert (p4.delta, p4.omega, p4.chi, p4.reed_bound, p4.slack) == (2, 2, 2, 3, 1)


def test_oracle_equivalence_up_to_5(graphs_by_n):
    # the full 208-graph n <= 6 run lives in the acceptance suite
    for n in range(1, 6):
        for g in graphs_by_n[n]:
            assert rc.clique_number(g) == oracle_clique(g)
            assert rc.chromatic_number(g) == oracle_chromatic(g)
            assert rc.independence_number(g) == oracle_independence(g)


def test_edge_addition_monotonicity(graphs_by_n):
    for n in range(2, 6):
        for g in graphs_by_n[n]:
            omega, chi = rc.clique_number(g), rc.chromatic_number(g)
            for v in range(n):
                for w in range(v + 1, n):
                    if g.has_edge(v, w):
                        continue
                    bigger = Graph.from_edges(n, list(g.edges()) + [(v, w)])
                    assert rc.clique_number(bigger) >= omega
                    assert rc.chromatic_number(bigger) >= chi


def test_omega_at_most_chi_up_to_7(graphs_by_n):
    for n in range(8):
        for g in graphs_by_n[n]:
            assert rc.clique_number(g) <= rc.chromatic_number(g)


def test_bundle_sanity_guard():
    with pytest.raises(ValueError):
        rc.InvariantBundle(n=3, m=0, delta=0, omega=2, chi=1, alpha=3, reed_bound=2, slack=1)
