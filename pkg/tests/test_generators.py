from itertools import combinations

import pytest

from collapsed_core import (
    Instance,
    OracleLimits,
    PreconditionError,
    add_universal,
    boosted_or_gadget,
    build_graph,
    clique_to_collapse,
    components,
    degeneracy,
    k_core,
    or_gadget,
    pad_core_target,
    random_instance,
    solve_brute,
)
from collapsed_core.generators import OR_GADGET_OUTPUT, SplitMix64, random_graph
from conftest import complete, cycle, multipartite


def is_bipartite(G):
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s], stack = 0, [s]
        while stack:
            u = stack.pop()
            for w in G.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def has_clique(G, p):
    return any(all(G.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(range(G.n), p))


class TestSplitMix64:
    def test_reference_vectors(self):
        rng = SplitMix64(0)
        assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
        rng = SplitMix64(1234567)
        assert [rng.next() for _ in range(5)] == [
            6457827717110365317, 3203168211198807973, 9817491932198370423,
            4593380528125082431, 16408922859458223821,
        ]

    def test_unit_range(self):
        rng = SplitMix64(5)
        assert all(0.0 <= rng.unit() < 1.0 for _ in range(1000))


class TestPad:
    def test_small_target_keeps_graph(self):
        out = pad_core_target(Instance(cycle(5), 1, 0, 2), 2)
        assert out.graph == cycle(5) and out.x == 2

    def test_large_target_adds_clique(self):
        out = pad_core_target(Instance(cycle(5), 1, 0, 2), 4)
        assert out.graph.n == 9 and out.graph.m == 5 + 6 and out.x == 4
        assert components(out.graph)[1] == frozenset(range(5, 9))

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            pad_core_target(Instance(cycle(5), 1, 1, 2), 3)
        with pytest.raises(PreconditionError):
            pad_core_target(Instance(cycle(5), 1, 0, 2), 0)

    def test_preserves_decision(self):
        seen = 0
        for s in range(60):
            inst = random_instance(s, 8, 0.4, 3, 0, 2)
            if inst.graph.n < 2:
                continue
            seen += 1
            for x_new in (1, 2, 4):
                padded = pad_core_target(inst, x_new)
                assert (
                    solve_brute(inst.graph, inst.b, 0, 2).is_yes
                    == solve_brute(padded.graph, padded.b, padded.x, 2).is_yes
                ), inst.label
        assert seen >= 30

    def test_target_above_n_rejected(self):
        with pytest.raises(PreconditionError):
            pad_core_target(Instance(build_graph(1, []), 0, 0, 2), 2)


class TestUniversal:
    def test_triangle_to_k4(self):
        out = add_universal(Instance(complete(3), 1, 0, 2))
        assert out.graph == complete(4) and out.b == 2

    def test_edgeless_to_star(self):
        out = add_universal(Instance(build_graph(3, []), 0, 0, 1))
        assert out.graph.edges == ((0, 3), (1, 3), (2, 3)) and out.b == 1

    def test_preserves_decision(self):
        for s in range(30):
            inst = random_instance(s, 8, 0.4, 3, 2, 2)
            big = add_universal(inst)
            assert (
                solve_brute(inst.graph, inst.b, inst.x, 2).is_yes
                == solve_brute(big.graph, big.b, big.x, 2).is_yes
            ), inst.label


class TestCliqueReduction:
    @pytest.mark.parametrize("k,factor", [(1, 1), (2, 3), (3, 5)])
    def test_size(self, k, factor):
        G = complete(5)
        out = clique_to_collapse(G, 3, k)
        assert out.graph.n == G.n + factor * G.m and out.b == 3

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_structure(self, k):
        out = clique_to_collapse(multipartite([2, 2, 2]), 3, k)
        assert is_bipartite(out.graph)
        if k >= 2:
            assert degeneracy(out.graph) == k

    def test_degree_precondition(self):
        with pytest.raises(PreconditionError):
            clique_to_collapse(cycle(5), 2, 2)
        with pytest.raises(PreconditionError):
            clique_to_collapse(complete(4), 5, 2)

    @pytest.mark.parametrize("k", [1, 2])
    def test_fidelity_small(self, k):
        limits = OracleLimits(max_n=1000, max_b=8)
        for G, p in ((complete(5), 3), (multipartite([2, 2, 2]), 3), (multipartite([4, 4]), 3)):
            inst = clique_to_collapse(G, p, k)
            got = solve_brute(inst.graph, inst.b, inst.x, k, limits).is_yes
            assert got == has_clique(G, p)


class TestOrGadget:
    def test_shape(self):
        G = or_gadget()
        assert (G.n, G.m) == (8, 11)
        assert k_core(G, 3).core == frozenset()

    def test_boosted_output_deletion(self):
        G = boosted_or_gadget()
        assert all(G.degree(v) >= 3 for v in range(8))
        assert set(range(8)) <= k_core(G, 3).core
        after = k_core(G, 3, {OR_GADGET_OUTPUT}).core
        assert not after & set(range(8))


class TestRandom:
    def test_deterministic(self):
        a = random_instance(42, 10, 0.3, 3, 3, 2)
        b = random_instance(42, 10, 0.3, 3, 3, 2)
        assert a == b

    def test_distinct_labels(self):
        labels = {random_instance(s, 10, 0.3, 3, 3, 2).label for s in range(1, 101)}
        assert len(labels) == 100

    def test_zero_density(self):
        for s in range(20):
            assert random_instance(s, 10, 0.0, 3, 3, 1).graph.m == 0

    def test_m_max(self):
        G = random_graph(SplitMix64(3), 30, 0.5, m_max=40)
        assert G.m == 40

    def test_parameters_within_n(self):
        for s in range(50):
            inst = random_instance(s, 4, 0.5, 9, 9, 2)
            assert inst.b <= inst.graph.n and inst.x <= inst.graph.n

    def test_instance_preconditions(self):
        with pytest.raises(PreconditionError):
            Instance(complete(3), 4, 0, 2)
        with pytest.raises(PreconditionError):
            Instance(complete(3), 1, 0, 0)
