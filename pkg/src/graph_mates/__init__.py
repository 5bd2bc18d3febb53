"""
Graph Mates

Exact census engine for cospectral and coinvariant graph mates. Builds twenty
integer matrices per graph, computes their characteristic polynomials and
Smith normal forms, and counts non-isomorphic graphs sharing one invariant or
a joint pair of invariants.
"""

__version__ = "1.0.0"

from . import graphs, matrices, invariants, census, generators
