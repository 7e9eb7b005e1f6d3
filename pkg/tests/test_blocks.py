import pytest

from orbitgraph import bfs_ball, growth_profile
from orbitgraph.errors import SpecError
from orbitgraph.schreier import (AssemblySpec, assembly_ball_counts,
                                 assembly_cross_edges, assembly_cutset_sizes,
                                 assembly_graph, assembly_level_census,
                                 assembly_level_size, block_graph,
                                 growth_assembly_spec, tube_graph,
                                 uniform_assembly_spec)


# ---------------------------------------------------------------- tubes

def test_tube_counts():
    t4 = tube_graph(4)
    assert t4.n_vertices == 12
    assert t4.n_edges == 15  # 9 rail edges + triangles on columns 2 and 3
    t1 = tube_graph(1)
    assert (t1.n_vertices, t1.n_edges) == (3, 0)
    t2 = tube_graph(2)
    assert (t2.n_vertices, t2.n_edges) == (6, 3)


def test_tube_rejects_nonpositive():
    with pytest.raises(SpecError):
        tube_graph(0)


def test_tube_interior_degree():
    degs = tube_graph(5).degrees()
    for (k, i), d in degs.items():
        assert d == (4 if 2 <= k <= 4 else 1)


# ---------------------------------------------------------------- blocks

def test_block_counts():
    h2 = block_graph(2)
    assert h2.n_vertices == 15  # 3 + 9 + 3
    assert h2.n_edges == 27  # 9 down-tree + 9 cycle + 9 up-tree
    h1 = block_graph(1)
    assert (h1.n_vertices, h1.n_edges) == (3, 3)  # a plain triangle


def test_block_rejects_nonpositive():
    with pytest.raises(SpecError):
        block_graph(0)


@pytest.mark.parametrize("k", [2, 3])
def test_block_degrees(k):
    degs = block_graph(k).degrees()
    for (j, i), d in degs.items():
        if j in (1, 2 * k - 1):
            assert d == 3
        else:
            assert d == 4  # middle level: parent + two cycle + one child


def test_block_vertex_count_formula():
    for k in range(1, 7):
        assert block_graph(k).n_vertices == 2 * 3 ** k - 3


# ---------------------------------------------------------------- specs

def test_spec_validation():
    with pytest.raises(SpecError, match="odd"):
        AssemblySpec(pairs=((1, 3),))
    with pytest.raises(SpecError, match="does not exceed"):
        AssemblySpec(pairs=((1, 2), (2, 5)))
    with pytest.raises(SpecError, match="positive"):
        AssemblySpec(pairs=((0, 1),))


def test_spec_text_roundtrip():
    spec = AssemblySpec(pairs=((2, 3), (5, 8)), name="demo", shift=4)
    again = AssemblySpec.from_text(spec.to_text())
    assert again == spec


# ---------------------------------------------------------------- assembly

def test_uniform_assembly_linear_growth():
    spec = uniform_assembly_spec(10, k=1, gap=1)
    counts = assembly_ball_counts(spec, 15)
    for l, d in enumerate(counts):
        assert d == 6 * l + 3  # every level holds exactly 3 vertices


def test_assembly_interior_degree_four():
    spec = AssemblySpec(pairs=((2, 3), (5, 8), (10, 15)))
    ball = bfs_ball(assembly_graph(spec), 12)
    for v in ball.interior_vertices():
        assert ball.degree(v) == 4


def test_assembly_census_matches_closed_form():
    spec = AssemblySpec(pairs=((2, 3), (5, 8), (10, 15)))
    graph = assembly_graph(spec)
    ball = bfs_ball(graph, 14)
    census = assembly_level_census(graph, ball)
    for j in range(-13, 14):
        assert census.get(j, 0) == assembly_level_size(spec, j)


def test_assembly_cross_edges_match_ball():
    spec = AssemblySpec(pairs=((2, 3), (5, 8), (10, 15)))
    graph = assembly_graph(spec)
    ball = bfs_ball(graph, 14)
    counted = {}
    for (u, v), m in ball.edges.items():
        lu, lv = graph.level(u), graph.level(v)
        if lu != lv and min(lu, lv) >= 0:
            counted[min(lu, lv)] = counted.get(min(lu, lv), 0) + m
    for l in range(0, 12):
        assert counted[l] == assembly_cross_edges(spec, l)


def test_assembly_cutsets_are_two_sided():
    spec = uniform_assembly_spec(6, k=1, gap=1)
    assert assembly_cutset_sizes(spec, 5) == [6, 6, 6, 6, 6]


def test_assembly_beyond_horizon_raises():
    spec = AssemblySpec(pairs=((2, 3),))
    with pytest.raises(SpecError, match="coverage"):
        assembly_level_size(spec, 10)


def test_block_level_sizes_inside_assembly():
    # block with k = 3 sits at levels [a, b-1] with a single largest level
    spec = AssemblySpec(pairs=((2, 3), (5, 8), (10, 15)))
    sizes = [assembly_level_size(spec, j) for j in range(9, 16)]
    assert sizes == [3, 3, 9, 27, 9, 3, 3]


# ---------------------------------------------------------------- growth specs

def test_growth_spec_cube_raw_levels():
    # one pair at raw index 9: top level max{l : l^3 <= 3^9} = 27
    spec = growth_assembly_spec(lambda l: l ** 3, count=1, shift=8)
    assert spec.pairs[0] == (10, 27)  # 27 - 2*9 + 1 = 10


def test_growth_spec_cube_minimal_shift():
    spec = growth_assembly_spec(lambda l: l ** 3, count=16)
    assert spec.shift == 10
    assert spec.pairs[0] == (35, 56)
    assert spec.pairs[1] == (58, 81)


def test_growth_spec_invalid_shift_reports_minimum():
    with pytest.raises(SpecError, match="smallest valid shift is 10"):
        growth_assembly_spec(lambda l: l ** 3, count=16, shift=7)


def test_growth_spec_linear_function():
    spec = growth_assembly_spec(lambda l: l, count=5, shift=2)
    for n, (a, b) in enumerate(spec.pairs, start=1):
        assert b == 3 ** (n + 2)


def test_growth_spec_rejects_exponential():
    with pytest.raises(SpecError, match="no shift"):
        growth_assembly_spec(lambda l: 2 ** l, count=8, max_shift=12)


def test_growth_spec_rejects_nonmonotone():
    with pytest.raises(SpecError, match="strictly increasing"):
        growth_assembly_spec(lambda l: (l - 10) ** 2, count=3, shift=2)


def test_cube_assembly_census_small_depth():
    spec = growth_assembly_spec(lambda l: l ** 3, count=16)
    graph = assembly_graph(spec)
    ball = bfs_ball(graph, 38)
    census = assembly_level_census(graph, ball)
    for j in range(-37, 38):
        assert census.get(j, 0) == assembly_level_size(spec, j)
