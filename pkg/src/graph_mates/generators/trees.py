"""
Free trees, one per isomorphism class.

networkx.nonisomorphic_trees runs the Wright-Richmond-Odlyzko-McKay
successor algorithm in constant amortised time per tree; the single-vertex
tree is handled here.
"""

import logging
from typing import Iterator

import networkx as nx

from ..graphs.graph import Graph

logger = logging.getLogger(__name__)


def gen_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on n vertices."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        yield Graph(1, (0,))
        return
    count = 0
    for tree in nx.nonisomorphic_trees(n):
        count += 1
        yield Graph.from_networkx(tree)
    logger.info(f"Generated {count:,} trees on {n} vertices")
