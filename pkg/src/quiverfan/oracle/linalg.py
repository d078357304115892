"""Linear algebra over small prime fields, batched with numpy where it pays."""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

FIELDS = (2, 3, 5)


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


def batched_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a stack of matrices with shape ``(N, m, n)``."""
    a = np.array(mats, dtype=np.int64) % p
    count, m, n = a.shape
    rank = np.zeros(count, dtype=np.int64)
    if m == 0 or n == 0 or count == 0:
        return rank
    inv = inverse_table(p)
    rows = np.arange(m)
    for j in range(n):
        mask = (a[:, :, j] != 0) & (rows[None, :] >= rank[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        r = rank[idx]
        piv = mask[idx].argmax(axis=1)
        top = a[idx, r].copy()
        a[idx, r] = a[idx, piv]
        a[idx, piv] = top
        pivot_row = a[idx, r] * inv[a[idx, r, j]][:, None] % p
        a[idx, r] = pivot_row
        factors = a[idx, :, j].copy()
        factors[rows[None, :] <= r[:, None]] = 0
        a[idx] = (a[idx] - factors[:, :, None] * pivot_row[:, None, :]) % p
        rank[idx] += 1
    return rank


def rank(mat, p: int) -> int:
    """Rank of a single matrix; plain Python is faster than numpy at this size."""
    a = [[int(x) % p for x in row] for row in np.asarray(mat, dtype=np.int64)]
    if not a or not a[0]:
        return 0
    r = 0
    for j in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][j], p - 2, p)
        for i in range(r + 1, len(a)):
            f = a[i][j] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def det(mat, p: int) -> int:
    """Determinant over F_p, as an integer in ``range(p)``."""
    a = [[int(x) % p for x in row] for row in np.asarray(mat, dtype=np.int64)]
    n = len(a)
    result = 1
    for j in range(n):
        piv = next((i for i in range(j, n) if a[i][j]), None)
        if piv is None:
            return 0
        if piv != j:
            a[j], a[piv] = a[piv], a[j]
            result = -result
        result = result * a[j][j] % p
        inv = pow(a[j][j], p - 2, p)
        for i in range(j + 1, n):
            f = a[i][j] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[j])]
    return result % p


def rref_subspaces(d: int, p: int) -> list[np.ndarray]:
    """Every subspace of F_p^d, each as its reduced row echelon basis
    (shape ``(k, d)``), listed by dimension and then pivot pattern."""
    spaces = []
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                basis = np.zeros((k, d), dtype=np.int64)
                for r, pc in enumerate(pivots):
                    basis[r, pc] = 1
                for (r, c), x in zip(free, values):
                    basis[r, c] = x
                spaces.append(basis)
    return spaces


def gaussian_binomial(d: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den
