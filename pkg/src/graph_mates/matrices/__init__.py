"""The twenty integer matrices of a graph, with exact char polys and Smith forms."""

from .kinds import MatrixKind
from .builders import IntMatrix, MatrixBuilder, build_matrix
from .charpoly import CharPoly, char_poly, char_poly_oracle
from .smith import SnfResult, Cokernel, snf, cokernel_decomposition

__all__ = [
    'MatrixKind', 'IntMatrix', 'MatrixBuilder', 'build_matrix',
    'CharPoly', 'char_poly', 'char_poly_oracle',
    'SnfResult', 'Cokernel', 'snf', 'cokernel_decomposition',
]
