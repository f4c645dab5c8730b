"""graphchomp: exact solver for the vertex-and-edge deletion game on multigraphs.

Two players alternately delete either one edge or one vertex with all its
incident edges; whoever removes the last vertex wins. This package computes
exact game values by memoized search, applies value-preserving reductions,
evaluates closed-form family predictions, and ships a CLI plus a
verification suite for the known results about the game.
"""

from .graph import (
    DeleteEdge,
    DeleteVertex,
    Graph,
    GraphInputError,
    Move,
    apply_move,
    build_graph,
    components,
    is_bipartite,
    parse_graph,
    parse_graph_file,
    format_graph,
    phi,
)
from .canon import CanonKey, canonical_key
from .engine import (
    BudgetExhausted,
    GrundyTable,
    MoveValuation,
    grundy,
    legal_moves,
    mex,
    move_values,
    nim_sum,
    winning_moves,
)

__all__ = [
    "BudgetExhausted",
    "CanonKey",
    "DeleteEdge",
    "DeleteVertex",
    "Graph",
    "GraphInputError",
    "GrundyTable",
    "Move",
    "MoveValuation",
    "apply_move",
    "build_graph",
    "canonical_key",
    "components",
    "format_graph",
    "grundy",
    "is_bipartite",
    "legal_moves",
    "mex",
    "move_values",
    "nim_sum",
    "parse_graph",
    "parse_graph_file",
    "phi",
    "winning_moves",
]

__version__ = "0.1.0"
