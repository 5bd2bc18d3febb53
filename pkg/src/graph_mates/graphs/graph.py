"""
Simple undirected graphs and their metric primitives.

Adjacency is stored as one neighbour bitmask per vertex, which keeps graphs
small, hashable and cheap to ship to worker processes. Distances come from
scipy's breadth-first shortest paths on the unweighted adjacency matrix.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, shortest_path

from ..errors import DisconnectedGraph, UnsupportedGraph

logger = logging.getLogger(__name__)

MAX_ORDER = 62
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..order-1.

    Args:
        order: vertex count, 1 <= order <= 62
        rows: rows[v] is the bitmask of neighbours of v
    """
    order: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise UnsupportedGraph(f"order must be between 1 and {MAX_ORDER}, got {self.order}")
        if len(self.rows) != self.order:
            raise ValueError(f"expected {self.order} adjacency rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbour outside 0..{self.order - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count('1')

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.order)) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v, in graph6 bit order."""
        for v in range(1, self.order):
            for u in range(v):
                if self.rows[v] >> u & 1:
                    yield (u, v)

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graph with vertex u renamed to permutation[u]."""
        perm = [int(p) for p in permutation]
        if sorted(perm) != list(range(self.order)):
            raise ValueError("not a permutation of the vertex set")
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def with_vertex(self, neighbours: int) -> 'Graph':
        """Graph extended by a new vertex `order` adjacent to the bitmask `neighbours`."""
        new = self.order
        rows = [row | ((neighbours >> u & 1) << new) for u, row in enumerate(self.rows)]
        rows.append(neighbours)
        return Graph(self.order + 1, tuple(rows))

    def adjacency_array(self) -> np.ndarray:
        matrix = np.zeros((self.order, self.order), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts between all vertex pairs; UNREACHABLE marks pairs with no path."""
    order: int
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.entries for d in row)

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@dataclass(frozen=True)
class VertexStats:
    degrees: Tuple[int, ...]
    transmissions: Tuple[int, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _csgraph(g: Graph) -> csr_matrix:
    return csr_matrix(g.adjacency_array())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first hop counts between every pair of vertices."""
    if g.order == 1:
        return DistanceMatrix(1, ((0,),))
    hops = shortest_path(_csgraph(g), method='D', directed=False, unweighted=True)
    entries: List[Tuple[int, ...]] = []
    for row in hops:
        entries.append(tuple(UNREACHABLE if np.isinf(d) else int(d) for d in row))
    return DistanceMatrix(g.order, tuple(entries))


def is_connected(g: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches every vertex."""
    if g.order == 1:
        return True
    reached = breadth_first_order(_csgraph(g), 0, directed=False, return_predecessors=False)
    return len(reached) == g.order


def vertex_stats(g: Graph, d: DistanceMatrix) -> VertexStats:
    """Degrees and transmissions (distance row sums) of every vertex."""
    if not d.connected:
        raise DisconnectedGraph()
    degrees = tuple(g.degree(v) for v in range(g.order))
    transmissions = tuple(sum(row) for row in d.entries)
    return VertexStats(degrees, transmissions)
