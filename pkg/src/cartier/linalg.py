"""Dense linear algebra over F_p on int64 numpy arrays."""

from __future__ import annotations

import numpy as np

from .fields import inv_mod

_INT64_MAX = np.iinfo(np.int64).max


def as_mod_array(rows, p: int) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim != 2:
        a = a.reshape(len(rows), -1) if a.size else np.zeros((len(rows), 0), dtype=np.int64)
    return a % p


def rank_mod_p(mat, p: int) -> int:
    """Rank over F_p by Gaussian elimination, pivoting on the first nonzero entry."""
    if p * p >= _INT64_MAX:
        raise OverflowError(f"p = {p} too large for int64 elimination")
    a = as_mod_array(mat, p).copy()
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * inv_mod(int(a[r, c]), p) % p
        below = a[r + 1 :, c]
        hit = np.flatnonzero(below)
        if hit.size:
            rows = r + 1 + hit
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] and (p - 1) ** 2 * a.shape[1] >= _INT64_MAX:
        raise OverflowError("matrix product would overflow int64")
    return (a @ b) % p


def stable_rank(mat, p: int) -> int:
    """Rank of A^k for k >= dim, via repeated squaring with early exit.

    Ranks of powers are non-increasing and stay constant once two consecutive
    ones agree, so rank(A^(2t)) == rank(A^t) already means stabilisation.
    """
    a = as_mod_array(mat, p)
    dim = a.shape[0]
    if dim == 0:
        return 0
    power, prev = 1, rank_mod_p(a, p)
    while power < dim and prev:
        a = matmul_mod(a, a, p)
        power *= 2
        cur = rank_mod_p(a, p)
        if cur == prev:
            break
        prev = cur
    return prev
