"""Dense exact linear algebra over F_q on int64 arrays.

Gaussian elimination with the leftmost-pivot convention; reduced row echelon
form is canonical, so equal row spaces have identical RREFs.
"""

from __future__ import annotations

import numpy as np


def asmat(mat, q: int) -> np.ndarray:
    A = np.array(mat, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A[None, :]
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    return A % q


def rref(mat, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_q.  Returns (R, pivot_columns);
    R keeps only the nonzero rows."""
    A = asmat(mat, q)
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, q) % q
        factors = A[:, c].copy()
        factors[r] = 0
        if np.any(factors):
            A -= factors[:, None] * A[r][None, :]
            A %= q
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(mat, q: int) -> int:
    return len(rref(mat, q)[1])


def solve(A, b, q: int) -> np.ndarray | None:
    """One solution x of A x = b over F_q (free variables set to 0), or
    None when the system is inconsistent."""
    A = asmat(A, q)
    b = np.asarray(b, dtype=np.int64).reshape(-1) % q
    if b.shape[0] != A.shape[0]:
        raise ValueError("shape mismatch")
    aug = np.hstack([A, b[:, None]])
    R, pivots = rref(aug, q)
    cols = A.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = R[row, cols]
    return x


def reduce_vector(R: np.ndarray, pivots: list[int], v, q: int) -> np.ndarray:
    """Residue of v after elimination against an RREF basis."""
    w = np.array(v, dtype=np.int64, copy=True).reshape(-1) % q
    for row, c in enumerate(pivots):
        if w[c]:
            w = (w - w[c] * R[row]) % q
    return w


def in_row_space(R: np.ndarray, pivots: list[int], v, q: int) -> bool:
    return not np.any(reduce_vector(R, pivots, v, q))


def same_row_space(A, B, q: int) -> bool:
    """Row-space equality by mutual rank checks."""
    A = asmat(A, q)
    B = asmat(B, q)
    if A.shape[1] != B.shape[1]:
        return False
    ra, rb = rank(A, q), rank(B, q)
    if ra != rb:
        return False
    return rank(np.vstack([A, B]), q) == ra
