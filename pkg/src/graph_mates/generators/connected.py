"""
Connected graphs by vertex augmentation.

Every connected graph on n vertices has a non-cut vertex (a leaf of any
spanning tree), so it arises from a connected (n-1)-vertex graph by adding a
vertex with a nonempty neighbourhood. Each level is deduplicated by
canonical form and emitted in canonical-form order.
"""

import logging
from typing import Dict, Iterator, List

from ..errors import TooLarge
from ..graphs.graph import Graph
from .canonical import CanonicalForm, canonical_form

logger = logging.getLogger(__name__)

MAX_GENERATED_ORDER = 8


def _check_order(n: int):
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_GENERATED_ORDER:
        raise TooLarge(
            f"built-in generator stops at n={MAX_GENERATED_ORDER}; "
            f"use a graph6 file (e.g. from geng -c {n}) for larger orders"
        )


def _augment(level: List[Graph]) -> List[Graph]:
    classes: Dict[CanonicalForm, None] = {}
    for g in level:
        for neighbours in range(1, 1 << g.order):
            classes.setdefault(canonical_form(g.with_vertex(neighbours)))
    return [form.to_graph() for form in sorted(classes)]


def _levels(n: int) -> Iterator[List[Graph]]:
    level = [Graph(1, (0,))]
    yield level
    for order in range(2, n + 1):
        level = _augment(level)
        logger.info(f"Generated {len(level):,} connected graphs on {order} vertices")
        yield level


def connected_graph_levels(n: int) -> Iterator[List[Graph]]:
    """Lists of connected graphs on 1, 2, ..., n vertices."""
    _check_order(n)
    return _levels(n)


def gen_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    _check_order(n)
    level: List[Graph] = []
    for level in _levels(n):
        pass
    return iter(level)
