"""Graph representation, graph6 codec and distance primitives."""

from .graph import (
    MAX_ORDER, Graph, DistanceMatrix, VertexStats,
    all_pairs_distances, is_connected, vertex_stats,
)
from .graph6 import HEADER, parse_graph6, encode_graph6, to_graph6_str, record_order

__all__ = [
    'MAX_ORDER', 'Graph', 'DistanceMatrix', 'VertexStats',
    'all_pairs_distances', 'is_connected', 'vertex_stats',
    'HEADER', 'parse_graph6', 'encode_graph6', 'to_graph6_str', 'record_order',
]
