"""Hamilton cycles in cubic bipartite plane graphs with a 2-factor of facial
4-cycles, built from induced-tree covers of the dual Eulerian triangulation."""

from .alpha_generator import AlphaOp, GenerationHistory, apply_alpha, octahedron, random_instance
from .e4_membership import TriColouring, classify, three_colour, tricolouring
from .oracle import verify_theorem11, verify_theorem12
from .planar_core import PlanarGraph, build_graph, dual_graph, emit_rot1, parse_rot1

__all__ = [
    "AlphaOp",
    "GenerationHistory",
    "PlanarGraph",
    "TriColouring",
    "apply_alpha",
    "build_graph",
    "classify",
    "dual_graph",
    "emit_rot1",
    "octahedron",
    "parse_rot1",
    "random_instance",
    "three_colour",
    "tricolouring",
    "verify_theorem11",
    "verify_theorem12",
]
