import numpy as np
import pytest

from orbitgraph import FiniteGraph, bfs_ball
from orbitgraph.errors import ConstructionError
from orbitgraph.schreier import (fibonacci_colors, ladder_action,
                                 ladder_graph, reconstruct_edges,
                                 schreier_ball, two_factorize)


def random_regular_multigraph(n_vertices, degree, seed):
    """Pairing construction; may produce loops and parallel edges."""
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n_vertices), degree)
    rng.shuffle(stubs)
    edges = list(zip(stubs[0::2].tolist(), stubs[1::2].tolist()))
    return FiniteGraph(vertices=list(range(n_vertices)), edges=edges)


def test_cycle_gives_single_cyclic_permutation():
    c4 = FiniteGraph(vertices=[0, 1, 2, 3],
                     edges=[(0, 1), (1, 2), (2, 3), (0, 3)])
    action = two_factorize(c4)
    assert len(action.permutations) == 1
    perm = action.permutations[0]
    # a single 4-cycle, in one of the two directions
    seen = {0}
    v = perm[0]
    while v != 0:
        seen.add(int(v))
        v = perm[v]
    assert seen == {0, 1, 2, 3}
    assert reconstruct_edges(action) == c4.edge_multiset()


def test_complete_graph_roundtrip():
    k5 = FiniteGraph(vertices=list(range(5)),
                     edges=[(i, j) for i in range(5) for j in range(i + 1, 5)])
    action = two_factorize(k5)
    assert len(action.permutations) == 2
    assert reconstruct_edges(action) == k5.edge_multiset()


def test_double_loop_vertex():
    loopy = FiniteGraph(vertices=[0], edges=[(0, 0), (0, 0)])
    action = two_factorize(loopy)
    assert all(int(p[0]) == 0 for p in action.permutations)
    assert reconstruct_edges(action) == loopy.edge_multiset()


def test_odd_degree_rejected():
    tri_plus = FiniteGraph(vertices=[0, 1, 2], edges=[(0, 1), (1, 2), (0, 2),
                                                      (0, 1)])
    with pytest.raises(ConstructionError):
        two_factorize(tri_plus)


def test_disconnected_rejected():
    two_cycles = FiniteGraph(
        vertices=list(range(8)),
        edges=[(0, 1), (1, 2), (2, 3), (0, 3),
               (4, 5), (5, 6), (6, 7), (4, 7)])
    with pytest.raises(ConstructionError, match="connected"):
        two_factorize(two_cycles)


@pytest.mark.parametrize("seed", range(12))
def test_random_4regular_roundtrip(seed):
    g = random_regular_multigraph(60, 4, seed)
    if not g.is_connected():
        pytest.skip("pairing produced a disconnected sample")
    action = two_factorize(g)
    assert reconstruct_edges(action) == g.edge_multiset()


def test_factorization_deterministic():
    g = random_regular_multigraph(40, 4, 7)
    if not g.is_connected():
        pytest.skip("pairing produced a disconnected sample")
    a1 = two_factorize(g)
    a2 = two_factorize(g)
    assert all((p == q).all() for p, q in zip(a1.permutations,
                                              a2.permutations))


def test_schreier_ball_matches_source_graph():
    g = random_regular_multigraph(30, 4, 3)
    if not g.is_connected():
        pytest.skip("pairing produced a disconnected sample")
    action = two_factorize(g)
    radius = 30  # covers the whole graph
    ball = schreier_ball(action, radius=radius)
    assert ball.edges == g.edge_multiset()


def test_ladder_action_ball_roundtrip():
    ladder = ladder_graph(fibonacci_colors())
    action = ladder_action(ladder)
    assert schreier_ball(action, radius=8).edges == bfs_ball(ladder, 8).edges
