"""Graph constructions for coset actions, random-walk recurrence analytics,
and hyperbolic orbit counting at desk scale."""

from . import graphs, hyperbolic, schreier, walk
from .graphs import (Ball, FiniteGraph, GrowthProfile, LazyGraph, bfs_ball,
                     growth_csv, growth_profile, half_line_graph,
                     integer_lattice, line_graph, single_vertex_graph, to_dot)

__version__ = "0.1.0"

__all__ = [
    "graphs", "hyperbolic", "schreier", "walk",
    "Ball", "FiniteGraph", "GrowthProfile", "LazyGraph", "bfs_ball",
    "growth_csv", "growth_profile", "half_line_graph", "integer_lattice",
    "line_graph", "single_vertex_graph", "to_dot",
]
