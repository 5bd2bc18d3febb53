"""
Exact characteristic polynomials.

char_poly runs the Faddeev-LeVerrier recurrence over Python integers:

    M_0 = 0,  c_n = 1
    M_k = A M_(k-1) + c_(n-k+1) I
    c_(n-k) = -tr(A M_k) / k

Every division by k is exact for integer A; a remainder means a bug and
raises InternalDivisionInexact. char_poly_oracle evaluates det(tI - A) with
sympy's fraction-free Bareiss elimination as an independent check.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from sympy import Matrix

from ..errors import InternalDivisionInexact
from .builders import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of det(xI - M) from degree n down to degree 0."""
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t: int) -> int:
        value = 0
        for c in self.coeffs:
            value = value * t + c
        return value

    def __str__(self) -> str:
        terms = []
        for power, c in zip(range(self.degree, -1, -1), self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                x = "x" if power == 1 else f"x^{power}"
                body = x if magnitude == 1 else f"{magnitude}*{x}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def char_poly(m: IntMatrix) -> CharPoly:
    """det(xI - m) by Faddeev-LeVerrier with exact division checks."""
    n = m.order
    a = m.to_array()
    identity = np.zeros((n, n), dtype=object)
    for i in range(n):
        identity[i, i] = 1

    coeffs = [1]
    product = np.zeros((n, n), dtype=object)  # A M_(k-1)
    for k in range(1, n + 1):
        mk = product + coeffs[-1] * identity
        product = a.dot(mk)
        trace = int(sum(product[i, i] for i in range(n)))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise InternalDivisionInexact(f"trace {trace} not divisible by {k} at step {k} of {n}")
        coeffs.append(quotient)
    return CharPoly(tuple(coeffs))


def char_poly_oracle(m: IntMatrix, t: int) -> int:
    """det(tI - m) by Bareiss elimination."""
    n = m.order
    shifted = Matrix(n, n, lambda i, j: (t if i == j else 0) - m.entries[i][j])
    return int(shifted.det(method='bareiss'))
