"""
Canonical labelling by exhaustive search.

The canonical form of a graph is its relabelling whose upper-triangle bit
string, read column by column in graph6 order, is lexicographically minimal.
The search places vertices one position at a time and only follows vertices
that give the smallest next column. Twin vertices (N(v) - w == N(w) - v) are
interchangeable, so only one of each twin class is tried per position.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..errors import TooLarge
from ..graphs.graph import Graph
from ..graphs.graph6 import encode_graph6, parse_graph6

logger = logging.getLogger(__name__)

MAX_CANONICAL_ORDER = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabelled graph."""
    data: bytes

    def to_graph(self) -> Graph:
        return parse_graph6(self.data)

    def __str__(self) -> str:
        return self.data.decode('ascii')


def _twin_classes(g: Graph) -> List[int]:
    rows = g.rows
    rep = list(range(g.order))
    for v in range(g.order):
        for w in range(v):
            if rows[v] & ~(1 << w) == rows[w] & ~(1 << v):
                rep[v] = rep[w]
                break
    return rep


def canonical_labelling(g: Graph) -> List[int]:
    """Permutation (vertex -> new label) producing the canonical form."""
    n = g.order
    if n > MAX_CANONICAL_ORDER:
        raise TooLarge(f"canonical form is exhaustive and limited to n <= {MAX_CANONICAL_ORDER}, got {n}")
    rows = g.rows
    twins = _twin_classes(g)

    placed: List[int] = []
    columns: List[int] = []
    best: Optional[List[int]] = None
    best_order: List[int] = []

    def search():
        nonlocal best, best_order
        depth = len(placed)
        if depth == n:
            if best is None or columns < best:
                best = list(columns)
                best_order = list(placed)
            return
        if best is not None and columns > best[:depth]:
            return

        candidates = []
        seen_classes = set()
        lowest = None
        for v in range(n):
            if v in placed or twins[v] in seen_classes:
                continue
            seen_classes.add(twins[v])
            column = 0
            for u in placed:
                column = column << 1 | (rows[u] >> v & 1)
            if lowest is None or column < lowest:
                lowest = column
                candidates = [v]
            elif column == lowest:
                candidates.append(v)

        if best is not None and columns == best[:depth] and lowest > best[depth]:
            return
        columns.append(lowest)
        for v in candidates:
            placed.append(v)
            search()
            placed.pop()
        columns.pop()

    search()
    labelling = [0] * n
    for position, v in enumerate(best_order):
        labelling[v] = position
    return labelling


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant form; equal iff the graphs are isomorphic."""
    return CanonicalForm(encode_graph6(g.relabel(canonical_labelling(g))))
