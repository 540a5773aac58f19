import pytest

from nsw2v.generator import Lcg64
from nsw2v.matching import (
    ParityProblem,
    allowed_degrees,
    make_graph,
    max_matching,
    reduce_parity,
    solve_parity,
)
from nsw2v.oracle import brute_force_parity


def exhaustive_matching_size(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def best_from(v, used):
        if v == n:
            return 0
        if used >> v & 1:
            return best_from(v + 1, used)
        top = best_from(v + 1, used)
        for u in adj[v]:
            if u > v and not used >> u & 1:
                top = max(top, 1 + best_from(v + 1, used | 1 << v | 1 << u))
        return top

    return best_from(0, 0)


def test_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert len(max_matching(g)) == 1


def test_even_path():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert len(max_matching(g)) == 2


def test_petersen_graph():
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    g = make_graph(10, outer + spokes + inner)
    assert len(max_matching(g)) == 5 == exhaustive_matching_size(10, g.edges)


def test_matching_is_valid_matching():
    g = make_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (2, 3)])
    edges = max_matching(g)
    seen = set()
    for u, v in edges:
        assert (u, v) in g.edges
        assert u not in seen and v not in seen
        seen.update((u, v))


def test_make_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        make_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])


def test_matching_against_exhaustive_random():
    rng = Lcg64(2024)
    for trial in range(300):
        n = 2 + rng.next_u64() % 9
        threshold = (2, 5, 8)[trial % 3]
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.next_u64() % 10 < threshold
        ]
        g = make_graph(n, edges)
        assert len(max_matching(g)) == exhaustive_matching_size(n, g.edges)


def test_allowed_degrees():
    assert list(allowed_degrees(2)) == [0, 2]
    assert list(allowed_degrees(1)) == [1]
    assert list(allowed_degrees(0)) == [0]


def test_parity_both_goods_to_one_agent():
    problem = ParityProblem(n_goods=2, caps=(2,), eligible=((0,), (0,)))
    assert solve_parity(problem) == {0: 0, 1: 0}


def test_parity_wrong_parity_infeasible():
    problem = ParityProblem(n_goods=1, caps=(2,), eligible=((0,),))
    assert solve_parity(problem) is None


def test_parity_empty_problem():
    problem = ParityProblem(n_goods=0, caps=(2, 0), eligible=())
    assert solve_parity(problem) == {}


def test_parity_zero_cap_blocks_sole_agent():
    problem = ParityProblem(n_goods=1, caps=(0,), eligible=((0,),))
    assert solve_parity(problem) is None


def test_parity_forced_identity():
    problem = ParityProblem(
        n_goods=3, caps=(1, 1, 1), eligible=((0,), (1,), (2,))
    )
    assert solve_parity(problem) == {0: 0, 1: 1, 2: 2}


def test_parity_pair_choice():
    # both goods must land on a single agent; either agent works
    problem = ParityProblem(n_goods=2, caps=(2, 2), eligible=((0, 1), (0, 1)))
    solution = solve_parity(problem)
    assert solution is not None
    assert solution[0] == solution[1]


def _random_parity(rng):
    n_goods = rng.next_u64() % 7
    n_agents = 1 + rng.next_u64() % 4
    caps = tuple(rng.next_u64() % 4 for _ in range(n_agents))
    eligible = tuple(
        tuple(a for a in range(n_agents) if rng.next_u64() % 2)
        for _ in range(n_goods)
    )
    return ParityProblem(n_goods=n_goods, caps=caps, eligible=eligible)


def test_parity_against_brute_force_random():
    rng = Lcg64(77)
    for _ in range(300):
        problem = _random_parity(rng)
        solution = solve_parity(problem)
        assert (solution is not None) == brute_force_parity(problem)
        if solution is not None:
            degree = [0] * len(problem.caps)
            for g, a in solution.items():
                assert a in problem.eligible[g]
                degree[a] += 1
            for a, cap in enumerate(problem.caps):
                assert degree[a] in allowed_degrees(cap)


def test_reduction_size_bound():
    rng = Lcg64(99)
    for _ in range(100):
        problem = _random_parity(rng)
        reduction = reduce_parity(problem)
        bound = problem.n_goods + sum(2 * c - c % 2 for c in problem.caps)
        assert reduction.graph.n <= bound
