"""
Smith normal form over the integers.

Elimination with a minimal-absolute-value pivot: the smallest nonzero entry
of the working submatrix is moved to the corner, its column and row are
reduced by exact quotient steps, and whenever a remainder survives the
smallest remainder becomes the new pivot. A final pass replaces every
diagonal pair (d_i, d_j) with d_i not dividing d_j by (gcd, lcm).
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from .builders import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors f_1 | f_2 | ... | f_r of an order-n matrix of rank r."""
    factors: Tuple[int, ...]
    rank: int
    order: int

    def __post_init__(self):
        if self.rank != len(self.factors) or self.rank > self.order:
            raise ValueError(f"inconsistent SNF: rank {self.rank}, {len(self.factors)} factors, order {self.order}")


@dataclass(frozen=True)
class Cokernel:
    """Z^n / im(M) = Z_t1 + ... + Z_tk + Z^free_rank, listing only torsion orders > 1."""
    torsion: Tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def _find_pivot(a: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    best = None
    best_value = 0
    size = len(a)
    for i in range(t, size):
        row = a[i]
        for j in range(t, size):
            x = row[j]
            if x and (best is None or abs(x) < best_value):
                best = (i, j)
                best_value = abs(x)
                if best_value == 1:
                    return best
    return best


def _swap_columns(a: List[List[int]], j: int, k: int):
    if j != k:
        for row in a:
            row[j], row[k] = row[k], row[j]


def _diagonalise(a: List[List[int]]) -> List[int]:
    size = len(a)
    diagonal = []
    for t in range(size):
        pivot = _find_pivot(a, t)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        _swap_columns(a, t, j)

        while True:
            p = a[t][t]
            smallest = None
            for i in range(t + 1, size):
                x = a[i][t]
                if x:
                    q = x // p
                    row_i, row_t = a[i], a[t]
                    for k in range(t, size):
                        row_i[k] -= q * row_t[k]
                    if row_i[t] and (smallest is None or abs(row_i[t]) < abs(a[smallest[0]][smallest[1]])):
                        smallest = (i, t)
            for j in range(t + 1, size):
                x = a[t][j]
                if x:
                    q = x // p
                    for k in range(t, size):
                        a[k][j] -= q * a[k][t]
                    if a[t][j] and (smallest is None or abs(a[t][j]) < abs(a[smallest[0]][smallest[1]])):
                        smallest = (t, j)
            if smallest is None:
                # row and column reduction may have reintroduced column entries
                if any(a[i][t] for i in range(t + 1, size)):
                    continue
                break
            i, j = smallest
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                _swap_columns(a, t, j)
        diagonal.append(abs(a[t][t]))
    return diagonal


def _fix_divisibility(diagonal: List[int]) -> List[int]:
    d = list(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            if d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] // g * d[j]
    return d


def snf(m: IntMatrix) -> SnfResult:
    """Invariant factors and rank of m."""
    a = [list(row) for row in m.entries]
    factors = _fix_divisibility(_diagonalise(a))
    return SnfResult(tuple(factors), len(factors), m.order)


def cokernel_decomposition(s: SnfResult) -> Cokernel:
    """Torsion cyclic orders (factors > 1) and free rank n - r."""
    return Cokernel(tuple(f for f in s.factors if f > 1), s.order - s.rank)
