import pytest

from collapsed_core import (
    Decision,
    SolverOptions,
    build_graph,
    k_core,
    solve_brute,
    solve_k1,
)
from conftest import complete, naive_first_witness, small_instances, star

PY = SolverOptions(backend="python")


def test_star_center():
    out = solve_k1(star(5), 1, 0)
    assert out.is_yes and out.witness == {0}
    assert out.residual_core_size == 0


def test_matching():
    G = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    assert solve_k1(G, 2, 0).decision is Decision.NO
    assert solve_k1(G, 3, 0).is_yes


def test_single_edge():
    G = complete(2)
    assert solve_k1(G, 0, 1).decision is Decision.NO
    out = solve_k1(G, 0, 2)
    assert out.is_yes and out.witness == frozenset()


def test_negative_parameters():
    with pytest.raises(ValueError):
        solve_k1(complete(3), -1, 0)


def test_vertex_cover_mode():
    # x = 0 with k = 1 is vertex cover: K5 needs 4
    assert solve_k1(complete(5), 3, 0).decision is Decision.NO
    assert solve_k1(complete(5), 4, 0).is_yes


@pytest.mark.parametrize("backend", ["python", "numba"])
def test_matches_oracle(backend):
    opts = SolverOptions(backend=backend)
    for inst in small_instances(1, 50):
        out = solve_k1(inst.graph, inst.b, inst.x, opts)
        ref = solve_brute(inst.graph, inst.b, inst.x, 1)
        assert out.decision == ref.decision, inst.label
        # the oracle's witness is the definition-level first set
        assert ref.witness == naive_first_witness(inst.graph, inst.b, inst.x, 1)
        if out.is_yes:
            assert len(out.witness) <= inst.b
            assert len(k_core(inst.graph, 1, out.witness).core) <= inst.x


def test_backends_identical():
    for inst in small_instances(1, 80, first_seed=1000):
        for extra in ({}, {"disable_q_bound": True}, {"tiebreak": "high"}):
            a = solve_k1(inst.graph, inst.b, inst.x, SolverOptions(backend="python", **extra))
            b = solve_k1(inst.graph, inst.b, inst.x, SolverOptions(backend="numba", **extra))
            assert (a.decision, a.witness) == (b.decision, b.witness)
            sa, sb = a.stats.as_dict(), b.stats.as_dict()
            sa.pop("wall_time"), sb.pop("wall_time")
            assert sa == sb, inst.label


def test_q_bound_prune_is_sound():
    for inst in small_instances(1, 60, first_seed=2000):
        on = solve_k1(inst.graph, inst.b, inst.x)
        off = solve_k1(inst.graph, inst.b, inst.x, SolverOptions(disable_q_bound=True))
        assert on.decision == off.decision
        assert off.stats.nodes_visited >= on.stats.nodes_visited


def test_node_bound():
    for inst in small_instances(1, 60, first_seed=3000):
        out = solve_k1(inst.graph, inst.b, inst.x)
        assert out.stats.nodes_visited <= 2 ** (inst.x + 2 * inst.b + 2)


def test_tiebreak_does_not_change_decision():
    for inst in small_instances(1, 60, first_seed=4000):
        lo = solve_k1(inst.graph, inst.b, inst.x)
        hi = solve_k1(inst.graph, inst.b, inst.x, SolverOptions(tiebreak="high"))
        assert lo.decision == hi.decision


@pytest.mark.parametrize("opts", [PY, SolverOptions(backend="numba")])
def test_node_budget_aborts(opts):
    G = build_graph(12, [(2 * i, 2 * i + 1) for i in range(6)])
    full = solve_k1(G, 5, 0, opts)
    assert full.decision is Decision.NO and full.stats.nodes_visited > 3
    budgeted = SolverOptions(backend=opts.backend, node_budget=3)
    out = solve_k1(G, 5, 0, budgeted)
    assert out.decision is Decision.ABORTED
    assert out.witness is None and out.stats.nodes_visited == 3


def test_budget_large_enough_is_transparent():
    G = complete(4)
    full = solve_k1(G, 3, 0)
    out = solve_k1(G, 3, 0, SolverOptions(node_budget=full.stats.nodes_visited))
    assert out.decision is full.decision


def test_counters_consistent():
    for inst in small_instances(1, 30, first_seed=5000):
        s = solve_k1(inst.graph, inst.b, inst.x).stats
        assert s.prune_S + s.prune_Q + s.prune_stuck <= s.nodes_visited
        assert s.wall_time >= 0


def test_budget_clamped_to_n():
    out = solve_k1(complete(3), 10, 0)
    assert out.is_yes and len(out.witness) <= 3

