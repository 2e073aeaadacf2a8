from __future__ import annotations

from itertools import combinations

import pytest

from collapsed_core import build_graph, k_core


def complete(n):
    return build_graph(n, combinations(range(n), 2))


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless(n):
    return build_graph(n, [])


def disjoint_triangles():
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def multipartite(parts):
    blocks, c = [], 0
    for p in parts:
        blocks.append(range(c, c + p))
        c += p
    return build_graph(
        c,
        [(u, v) for i, j in combinations(range(len(blocks)), 2) for u in blocks[i] for v in blocks[j]],
    )


def naive_first_witness(G, b, x, k):
    """Definition-level enumeration: first set in size-then-lex order whose
    removal leaves a k-core of at most x vertices, or None."""
    for size in range(min(b, G.n) + 1):
        for S in combinations(range(G.n), size):
            if len(k_core(G, k, S).core) <= x:
                return frozenset(S)
    return None


def naive_min_budget(G, x, k):
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            if len(k_core(G, k, S).core) <= x:
                return size
    raise AssertionError("unreachable")


@pytest.fixture
def graphs():
    return {
        "K3": complete(3),
        "K4": complete(4),
        "K5": complete(5),
        "C5": cycle(5),
        "two_triangles": disjoint_triangles(),
        "petersen": petersen(),
    }


def small_instances(k, count, first_seed=0):
    """Seeded instances in the n <= 10, m <= 18, b <= 3, x <= 3 regime."""
    from collapsed_core import random_instance

    densities = (0.2, 0.35, 0.5)
    return [
        random_instance(s, 10, densities[s % 3], 3, 3, k, m_max=18)
        for s in range(first_seed, first_seed + count)
    ]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
