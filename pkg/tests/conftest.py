"""Shared fixtures: generated graphs and signature tables, computed once per session."""

import os
import sys
from typing import Dict, List

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from graph_mates.census import SignatureTable, build_signature_table
from graph_mates.core import SignatureProcessor
from graph_mates.generators import connected_graph_levels
from graph_mates.graphs import Graph, parse_graph6
from graph_mates.invariants import InvariantKind


class GraphCorpus:
    """Connected graphs per order, generated lazily up to the largest order asked for."""

    def __init__(self):
        self._levels: List[List[Graph]] = []
        self._tables: Dict[int, SignatureTable] = {}

    def graphs(self, n: int) -> List[Graph]:
        if n > len(self._levels):
            self._levels = list(connected_graph_levels(n))
        return self._levels[n - 1]

    def up_to(self, n: int) -> List[Graph]:
        return [g for order in range(1, n + 1) for g in self.graphs(order)]

    def signatures(self, n: int) -> SignatureTable:
        """Every one of the 40 invariants of every connected graph on n vertices."""
        if n not in self._tables:
            processor = SignatureProcessor(workers=None, chunk_size=64)
            self._tables[n] = build_signature_table(self.graphs(n), InvariantKind.all(), processor)
        return self._tables[n]


@pytest.fixture(scope='session')
def corpus() -> GraphCorpus:
    return GraphCorpus()


@pytest.fixture
def k3() -> Graph:
    return parse_graph6("Bw")


@pytest.fixture
def p3() -> Graph:
    return parse_graph6("Bg")


@pytest.fixture
def star4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

