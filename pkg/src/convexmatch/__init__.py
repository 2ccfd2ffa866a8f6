"""Optimal-time induced matchings and chain covers on convex bipartite graphs."""

from .certify import Verdict, check_certificate, check_chain_cover, check_induced_matching
from .chain_cover import ChainCover, ChainEntry, InconsistentColorings, expand_cover_edges, minimum_chain_cover
from .graph_core import (
    CompactConvexGraph,
    Edge,
    InvariantViolation,
    NotConvex,
    WeightedConvexGraph,
    edges_independent,
    from_adjacency,
    rows_sorted_by_left,
)
from .unweighted import (
    CardinalityResult,
    ReconstructionFailure,
    RowColoring,
    SweepState,
    matching_from_witnesses,
    max_cardinality_induced_matching,
)
from .weighted import MatchingResult, earliest_starts, max_weight_induced_matching

__all__ = [
    "CardinalityResult",
    "ChainCover",
    "ChainEntry",
    "CompactConvexGraph",
    "Edge",
    "InconsistentColorings",
    "InvariantViolation",
    "MatchingResult",
    "NotConvex",
    "ReconstructionFailure",
    "RowColoring",
    "SweepState",
    "Verdict",
    "WeightedConvexGraph",
    "check_certificate",
    "check_chain_cover",
    "check_induced_matching",
    "earliest_starts",
    "edges_independent",
    "expand_cover_edges",
    "from_adjacency",
    "matching_from_witnesses",
    "max_cardinality_induced_matching",
    "max_weight_induced_matching",
    "minimum_chain_cover",
    "rows_sorted_by_left",
]
