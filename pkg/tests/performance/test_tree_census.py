"""Censuses over all free trees on up to 14 vertices (slow)."""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.census import CensusConfig, GraphSource, build_signature_table, census_from_table
from graph_mates.invariants import InvariantKind

pytestmark = pytest.mark.slow

KINDS = [InvariantKind.parse(t) for t in ('snf:D', 'snf:DL', 'snf:DQ', 'snf:Atr', 'snf:Ddeg', 'snf:DdegPlus')]
DDEG_PLUS_MATES = {9: 2, 10: 6, 11: 20, 12: 46, 13: 148}


@pytest.fixture(scope='module')
def tree_tables():
    return {n: build_signature_table(GraphSource.generated("trees", n), KINDS) for n in range(2, 15)}


def _with_mate(table, token: str) -> int:
    report, _ = census_from_table(table, CensusConfig(InvariantKind.parse(token)))
    return report.with_mate


def test_trees_share_distance_snf(tree_tables):
    for n, table in tree_tables.items():
        assert len(set(table.columns[InvariantKind.parse('snf:D')])) == 1, n


@pytest.mark.parametrize("token", ['snf:DL', 'snf:DQ', 'snf:Atr'])
def test_invariants_without_tree_mates(tree_tables, token):
    assert all(_with_mate(table, token) == 0 for table in tree_tables.values())


def test_degree_distance_mates_at_fourteen(tree_tables):
    assert _with_mate(tree_tables[14], 'snf:Ddeg') == 2


def test_signless_degree_distance_mates(tree_tables):
    assert {n: _with_mate(tree_tables[n], 'snf:DdegPlus') for n in DDEG_PLUS_MATES} == DDEG_PLUS_MATES
