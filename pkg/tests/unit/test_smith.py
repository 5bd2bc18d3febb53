"""Tests for Smith normal forms and cokernels."""

import os
import random
import sys
from math import prod

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.generators import gen_trees
from graph_mates.matrices import (
    IntMatrix, MatrixBuilder, MatrixKind, SnfResult, build_matrix, char_poly, cokernel_decomposition, snf,
)
from graph_mates.verification import determinantal_factors


class TestExamples:
    def test_laplacian_of_triangle(self, k3):
        s = snf(build_matrix(MatrixKind.L, k3))
        assert s.factors == (1, 3) and s.rank == 2

    def test_distance_matrix_of_path(self, p3):
        s = snf(build_matrix(MatrixKind.D, p3))
        assert s.factors == (1, 1, 4) and s.rank == 3

    def test_distance_laplacian_of_path(self, p3):
        # every 2 x 2 cofactor of tr - D equals 5
        s = snf(build_matrix(MatrixKind.DL, p3))
        assert s.factors == (1, 5) and s.rank == 2

    def test_identity(self):
        assert snf(IntMatrix.identity(4)).factors == (1, 1, 1, 1)

    def test_zero_matrix(self):
        s = snf(IntMatrix.zeros(2))
        assert s.factors == () and s.rank == 0

    def test_divisibility_fix_up(self):
        assert snf(IntMatrix.from_rows([[2, 0], [0, 3]])).factors == (1, 6)
        assert snf(IntMatrix.from_rows([[4, 0, 0], [0, 6, 0], [0, 0, 10]])).factors == (2, 2, 60)

    def test_signs_normalised(self):
        assert snf(IntMatrix.from_rows([[-3, 0], [0, -6]])).factors == (3, 6)

    def test_inconsistent_result_rejected(self):
        with pytest.raises(ValueError):
            SnfResult((1, 2), 3, 3)


class TestCokernel:
    def test_sandpile_group_of_triangle(self, k3):
        c = cokernel_decomposition(snf(build_matrix(MatrixKind.L, k3)))
        assert c.torsion == (3,) and c.free_rank == 1
        assert str(c) == "Z_3 + Z"

    def test_identity(self):
        c = cokernel_decomposition(snf(IntMatrix.identity(4)))
        assert c.torsion == () and c.free_rank == 0
        assert str(c) == "0"

    def test_zero_matrix(self):
        c = cokernel_decomposition(snf(IntMatrix.zeros(2)))
        assert c.torsion == () and c.free_rank == 2


class TestProperties:
    def test_divisibility_chain_and_determinant(self, corpus):
        for g in corpus.up_to(6):
            builder = MatrixBuilder(g)
            for kind in MatrixKind:
                m = builder.build(kind)
                s = snf(m)
                assert all(f >= 1 for f in s.factors)
                assert all(b % a == 0 for a, b in zip(s.factors, s.factors[1:]))
                det = abs(char_poly(m).coeffs[-1])
                assert det == (prod(s.factors) if s.rank == g.order else 0)

    def test_agrees_with_minors(self, corpus):
        for g in corpus.up_to(4):
            builder = MatrixBuilder(g)
            for kind in MatrixKind:
                m = builder.build(kind)
                assert list(snf(m).factors) == determinantal_factors(m), (kind, g)

    def test_independent_of_permutation(self, corpus):
        rng = random.Random(11)
        for g in rng.sample(corpus.graphs(6), 15):
            perm = list(range(6))
            rng.shuffle(perm)
            for kind in MatrixKind.base_kinds():
                m = build_matrix(kind, g)
                assert snf(m) == snf(m.permuted(perm))

    def test_degenerate_walk_matrices_have_rank_one(self, corpus):
        for g in corpus.up_to(6):
            for kind in (MatrixKind.WL, MatrixKind.WDL):
                s = snf(build_matrix(kind, g))
                assert s.factors == (1,) and s.rank == 1

    def test_trees_share_distance_snf(self):
        for n in range(2, 11):
            forms = {snf(build_matrix(MatrixKind.D, t)) for t in gen_trees(n)}
            assert len(forms) == 1
