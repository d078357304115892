"""Exact rational linear algebra on small integer matrices."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_rref(rows)[1])


def independent(vectors: Sequence[Sequence[int]]) -> bool:
    return rank(vectors) == len(vectors)


def solve_combination(generators: Sequence[Sequence[int]], point: Sequence[int]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum(c_k * generators[k]) == point`` for
    linearly independent generators, or ``None`` if ``point`` is outside their span."""
    k = len(generators)
    if k == 0:
        return [] if not any(point) else None
    # augmented system: one row per coordinate, one column per generator
    rows = [[g[i] for g in generators] + [point[i]] for i in range(len(point))]
    reduced, pivots = _rref(rows)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        coeffs[c] = reduced[r][k]
    return coeffs


def determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def is_positive_definite(matrix: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion on a symmetric matrix."""
    return all(determinant([row[:k] for row in matrix[:k]]) > 0 for k in range(1, len(matrix) + 1))
