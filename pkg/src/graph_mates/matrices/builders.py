"""
Exact integer matrices of a graph.

Base matrices are assembled from the adjacency matrix A, the degree diagonal
deg, the distance matrix D and the transmission diagonal tr:

    L = deg - A        Q = deg + A
    D^L = tr - D       D^Q = tr + D
    D^deg = deg - D    D^deg_+ = deg + D
    A^tr = tr - A      A^tr_+ = tr + A

Walk lifts W_B = [e, Be, ..., B^(n-1)e] are built column by column with
matrix-vector products over Python integers (numpy object arrays), so walk
entries never overflow. Relabelling the graph permutes the rows of W_B only,
which changes its characteristic polynomial, so build() returns the lift with
rows in ascending lexicographic order: the vertices ordered by their walk
counts. Tied rows are equal, so the result is the same for every labelling.
walk_lift() keeps the rows in the graph's own vertex order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from ..errors import DisconnectedGraph
from ..graphs.graph import DistanceMatrix, Graph, VertexStats, all_pairs_distances, vertex_stats
from ..graphs.graph6 import to_graph6_str
from .kinds import MatrixKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of arbitrary-precision integers."""
    order: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'IntMatrix':
        rows, cols = array.shape
        if rows != cols:
            raise ValueError(f"matrix must be square, got {rows}x{cols}")
        return cls(rows, tuple(tuple(int(x) for x in row) for row in array))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> 'IntMatrix':
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise ValueError("matrix must be square")
        return cls(len(entries), entries)

    @classmethod
    def zeros(cls, order: int) -> 'IntMatrix':
        return cls(order, tuple((0,) * order for _ in range(order)))

    @classmethod
    def identity(cls, order: int) -> 'IntMatrix':
        return cls(order, tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    def to_array(self) -> np.ndarray:
        """Object-dtype copy; arithmetic on it stays exact."""
        array = np.empty((self.order, self.order), dtype=object)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                array[i, j] = x
        return array

    def permuted(self, permutation) -> 'IntMatrix':
        """P M P^T, i.e. row and column u moved to permutation[u]."""
        inverse = [0] * self.order
        for u, p in enumerate(permutation):
            inverse[int(p)] = u
        return IntMatrix(self.order, tuple(
            tuple(self.entries[inverse[i]][inverse[j]] for j in range(self.order))
            for i in range(self.order)
        ))

    def rows_sorted(self) -> 'IntMatrix':
        return IntMatrix(self.order, tuple(sorted(self.entries)))

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.order) for j in range(i))

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.order))

    def dump(self) -> str:
        """One row per line, space-separated decimal integers."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


class MatrixBuilder:
    """
    Builds every matrix kind of one graph, sharing the distance matrix and
    the base matrices between kinds.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._distances: Optional[DistanceMatrix] = None
        self._stats: Optional[VertexStats] = None
        self._base: Dict[MatrixKind, np.ndarray] = {}

    @property
    def distances(self) -> DistanceMatrix:
        if self._distances is None:
            self._distances = all_pairs_distances(self.graph)
            if not self._distances.connected:
                raise DisconnectedGraph(to_graph6_str(self.graph))
        return self._distances

    @property
    def stats(self) -> VertexStats:
        if self._stats is None:
            self._stats = vertex_stats(self.graph, self.distances)
        return self._stats

    def _degree_diagonal(self) -> np.ndarray:
        degrees = [self.graph.degree(v) for v in range(self.graph.order)]
        return np.diag(np.array(degrees, dtype=np.int64))

    def _base_array(self, kind: MatrixKind) -> np.ndarray:
        if kind in self._base:
            return self._base[kind]

        adjacency = self.graph.adjacency_array()
        if kind is MatrixKind.A:
            matrix = adjacency
        elif kind is MatrixKind.L:
            matrix = self._degree_diagonal() - adjacency
        elif kind is MatrixKind.Q:
            matrix = self._degree_diagonal() + adjacency
        else:
            distance = self.distances.to_array()
            transmission = np.diag(np.array(self.stats.transmissions, dtype=np.int64))
            degree = np.diag(np.array(self.stats.degrees, dtype=np.int64))
            matrix = {
                MatrixKind.D: distance,
                MatrixKind.DL: transmission - distance,
                MatrixKind.DQ: transmission + distance,
                MatrixKind.DDEG: degree - distance,
                MatrixKind.DDEG_PLUS: degree + distance,
                MatrixKind.ATR: transmission - adjacency,
                MatrixKind.ATR_PLUS: transmission + adjacency,
            }[kind]

        self._base[kind] = matrix
        return matrix

    def _walk_array(self, base: MatrixKind) -> np.ndarray:
        n = self.graph.order
        step = self._base_array(base).astype(object)
        walk = np.empty((n, n), dtype=object)
        column = np.array([1] * n, dtype=object)
        walk[:, 0] = column
        for k in range(1, n):
            column = step.dot(column)
            walk[:, k] = column
        return walk

    def walk_lift(self, base: MatrixKind) -> IntMatrix:
        """[e, Be, ..., B^(n-1)e] with rows in the graph's vertex order."""
        if base.is_walk:
            raise ValueError(f"{base.value} is already a walk matrix")
        return IntMatrix.from_array(self._walk_array(base))

    def build(self, kind: MatrixKind) -> IntMatrix:
        if kind.is_walk:
            return self.walk_lift(kind.base).rows_sorted()
        return IntMatrix.from_array(self._base_array(kind))


def build_matrix(kind: MatrixKind, g: Graph) -> IntMatrix:
    """The matrix of the given kind for graph g."""
    return MatrixBuilder(g).build(kind)
