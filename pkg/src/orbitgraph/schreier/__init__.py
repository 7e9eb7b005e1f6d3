from .ladder import (ColorSequence, LadderGraph, fibonacci_colors,
                     ladder_action, ladder_graph, periodic_colors)
from .blocks import (AssemblySpec, assembly_ball_count, assembly_ball_counts,
                     assembly_cross_edges, assembly_cutset_sizes,
                     assembly_graph, assembly_level_census,
                     assembly_level_size, block_graph, growth_assembly_spec,
                     tube_graph, uniform_assembly_spec)
from .factorize import (SchreierAction, reconstruct_edges, schreier_ball,
                        two_factorize)

__all__ = [
    "ColorSequence", "LadderGraph", "fibonacci_colors", "ladder_action",
    "ladder_graph", "periodic_colors",
    "AssemblySpec", "assembly_ball_count", "assembly_ball_counts",
    "assembly_cross_edges", "assembly_cutset_sizes", "assembly_graph",
    "assembly_level_census", "assembly_level_size", "block_graph",
    "growth_assembly_spec", "tube_graph", "uniform_assembly_spec",
    "SchreierAction", "reconstruct_edges", "schreier_ball", "two_factorize",
]
