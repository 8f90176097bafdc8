"""Gaussian elimination over GF(p) on small integer matrices."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import NotABasis


def row_reduce(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, p: int) -> int:
    if len(mat) == 0:
        return 0
    return len(row_reduce(mat, p)[1])


def inverse(mat, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64) % p
    k = a.shape[0]
    if a.shape != (k, k):
        raise ValueError("matrix must be square")
    red, pivots = row_reduce(np.hstack([a, np.eye(k, dtype=np.int64)]), p)
    if pivots[:k] != list(range(k)):
        raise NotABasis("matrix is singular over GF(%d)" % p)
    return red[:, k:]


def matvec(mat: np.ndarray, vec: Sequence[int], p: int) -> np.ndarray:
    return (np.asarray(mat, dtype=np.int64) @ np.asarray(vec, dtype=np.int64)) % p
