"""Tests for the graph6 codec."""

import os
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.errors import MalformedGraph6
from graph_mates.graphs import Graph, encode_graph6, parse_graph6, record_order

WITNESS_EDGES = [
    (0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (3, 5), (0, 6), (1, 6), (2, 6), (3, 6),
    (0, 7), (1, 7), (2, 7), (3, 7), (4, 7), (0, 8), (2, 8), (3, 8), (4, 8), (5, 8),
    (1, 9), (2, 9), (4, 9), (5, 9), (6, 9),
]


class TestParse:
    def test_triangle(self, k3):
        assert k3 == Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])

    def test_path(self, p3):
        assert p3 == Graph.from_edges(3, [(0, 1), (1, 2)])

    def test_single_vertex(self):
        assert parse_graph6("@") == Graph(1, (0,))

    def test_ten_vertex_record(self):
        g = parse_graph6("ICpvfq{Z_")
        assert g.order == 10
        assert g.edge_count == 25
        assert set(g.edges()) == set(WITNESS_EDGES)

    def test_header_and_newline(self):
        assert parse_graph6(b">>graph6<<Bw\n") == parse_graph6("Bw")
        assert parse_graph6("Bg\r\n") == parse_graph6("Bg")

    def test_agrees_with_networkx(self, corpus):
        for g in corpus.graphs(6):
            theirs = nx.from_graph6_bytes(encode_graph6(g))
            assert Graph.from_networkx(theirs) == g

    @pytest.mark.parametrize("record", [
        "Bww",       # one data byte too many
        "B",         # data byte missing
        "B ",        # byte below 63
        "Bx",        # nonzero padding bits
        "?",         # zero vertices
        "~??????",   # long form, n > 62
        "",
    ])
    def test_malformed(self, record):
        with pytest.raises(MalformedGraph6):
            parse_graph6(record)

    def test_trailing_garbage_rejected(self):
        with pytest.raises(MalformedGraph6):
            parse_graph6("Bw\nBw")


class TestEncode:
    def test_triangle(self, k3):
        assert encode_graph6(k3) == b"Bw"

    def test_single_vertex(self):
        assert encode_graph6(Graph(1, (0,))) == b"@"

    def test_ten_vertex_round_trip(self):
        assert encode_graph6(parse_graph6("ICxvFjYN_")) == b"ICxvFjYN_"

    def test_matches_networkx(self, corpus):
        for g in corpus.graphs(5):
            expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
            assert encode_graph6(g) == expected

    def test_round_trip_every_generated_graph(self, corpus):
        for g in corpus.up_to(7):
            assert parse_graph6(encode_graph6(g)) == g


class TestRecordOrder:
    def test_record_order(self):
        assert record_order("ICpvfq{Z_") == 10
        assert record_order(">>graph6<<Bw") == 3
