"""Tests for canonical forms and the exhaustive generators."""

import os
import random
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.errors import TooLarge
from graph_mates.graphs import Graph, encode_graph6, is_connected, parse_graph6
from graph_mates.generators import (
    canonical_form, canonical_labelling, connected_graph_levels, gen_connected_graphs, gen_trees,
)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


class TestCanonicalForm:
    def test_relabelling_invariance(self, corpus):
        rng = random.Random(7)
        for g in corpus.graphs(6):
            perm = list(range(6))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_labelling_is_a_permutation(self, corpus):
        for g in corpus.graphs(5):
            assert sorted(canonical_labelling(g)) == list(range(5))

    def test_paths_share_a_form(self):
        a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_form(a) == canonical_form(b)
        assert canonical_form(a) != canonical_form(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))

    def test_form_is_a_relabelled_copy(self, corpus):
        for g in corpus.graphs(5):
            assert nx.is_isomorphic(canonical_form(g).to_graph().to_networkx(), g.to_networkx())

    def test_agrees_with_networkx_isomorphism(self, corpus):
        rng = random.Random(2)
        graphs = corpus.graphs(6)
        for _ in range(200):
            g, h = rng.choice(graphs), rng.choice(graphs)
            perm = list(range(6))
            rng.shuffle(perm)
            h = h.relabel(perm)
            same = nx.is_isomorphic(g.to_networkx(), h.to_networkx())
            assert (canonical_form(g) == canonical_form(h)) == same

    def test_ten_vertex_mates_are_not_isomorphic(self):
        left, right = parse_graph6("ICpvfq{Z_"), parse_graph6("ICxvFjYN_")
        assert canonical_form(left) != canonical_form(right)

    def test_order_guard(self):
        with pytest.raises(TooLarge):
            canonical_form(Graph.from_edges(11, [(i, i + 1) for i in range(10)]))


class TestConnectedGraphs:
    @pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
    def test_counts(self, corpus, n, count):
        graphs = corpus.graphs(n)
        assert len(graphs) == count
        assert all(g.order == n and is_connected(g) for g in graphs)
        assert len({canonical_form(g) for g in graphs}) == count

    def test_levels(self):
        sizes = [len(level) for level in connected_graph_levels(5)]
        assert sizes == [1, 1, 2, 6, 21]

    def test_output_is_in_canonical_order(self):
        graphs = list(gen_connected_graphs(5))
        forms = [canonical_form(g) for g in graphs]
        assert forms == sorted(forms)
        assert [f.data for f in forms] == [encode_graph6(g) for g in graphs]

    def test_matches_networkx_atlas(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6 and nx.is_connected(g)]
        ours = {canonical_form(Graph.from_networkx(g)) for g in atlas}
        assert ours == {canonical_form(g) for g in gen_connected_graphs(6)}

    @pytest.mark.parametrize("n", [0, 9])
    def test_order_limits(self, n):
        with pytest.raises((ValueError, TooLarge)):
            gen_connected_graphs(n)

    def test_too_large_is_reported(self):
        with pytest.raises(TooLarge, match="geng"):
            gen_connected_graphs(9)


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts(self, n):
        trees = list(gen_trees(n))
        assert len(trees) == TREE_COUNTS[n - 1]
        if n >= 2:
            assert len(trees) == nx.number_of_nonisomorphic_trees(n)
        assert all(g.edge_count == n - 1 and is_connected(g) for g in trees)

    def test_pairwise_non_isomorphic(self):
        trees = list(gen_trees(10))
        assert len({canonical_form(t) for t in trees}) == 106

    def test_path_and_star_appear_once(self):
        max_degrees = [max(t.degree(v) for v in range(7)) for t in gen_trees(7)]
        assert max_degrees.count(2) == 1
        assert max_degrees.count(6) == 1

    def test_rejects_empty_order(self):
        with pytest.raises(ValueError):
            list(gen_trees(0))
