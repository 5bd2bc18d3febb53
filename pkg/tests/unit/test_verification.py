"""Tests for the oracle suite."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.matrices import IntMatrix
from graph_mates.verification import (
    check_graph6_round_trip, check_permutation_invariance, determinantal_factors, run_oracle_suite,
)


def test_determinantal_factors():
    assert determinantal_factors(IntMatrix.from_rows([[2, 0], [0, 3]])) == [1, 6]
    assert determinantal_factors(IntMatrix.from_rows([[3, -1, -2], [-1, 2, -1], [-2, -1, 3]])) == [1, 5]
    assert determinantal_factors(IntMatrix.zeros(3)) == []


def test_suite_passes_on_small_orders():
    seen = []
    results = run_oracle_suite(max_order=4, minor_order=3, samples=20, seed=1, on_result=seen.append)
    assert len(results) == 6
    assert seen == results
    assert all(r.ok for r in results), [r.message for r in results if not r.ok]
    assert all(r.status == "✅" for r in results)


def test_individual_checks(corpus):
    graphs = corpus.up_to(5)
    assert check_graph6_round_trip(graphs).checked == len(graphs)
    result = check_permutation_invariance(graphs, samples=30, seed=3)
    assert result.ok and result.checked == 30
