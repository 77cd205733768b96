"""Row-oriented linear algebra over F_p on int64 numpy arrays.

Vectors are rows; a linear map is a matrix whose rows are the images of the
basis vectors, so x -> x @ M.
"""

from __future__ import annotations

import numpy as np


def as_mod(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns (first-nonzero pivoting)."""
    A = as_mod(M, p).copy()
    if A.ndim == 1:
        A = A[None, :]
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, p: int) -> int:
    return len(rref(M, p)[1])


def span_basis(vectors, p: int, width: int | None = None) -> np.ndarray:
    """Echelon basis of the span of the given rows (possibly empty)."""
    V = np.asarray(vectors, dtype=np.int64)
    if V.size == 0:
        return np.zeros((0, width if width is not None else V.shape[-1]), dtype=np.int64)
    return rref(V, p)[0]


def independent_rows(vectors, p: int) -> list[int]:
    """Indices of the greedy maximal independent subset, scanning in order."""
    V = as_mod(vectors, p)
    chosen: list[int] = []
    basis = np.zeros((0, V.shape[1]), dtype=np.int64)
    for i, v in enumerate(V):
        trial = np.vstack([basis, v])
        if rank(trial, p) > len(chosen):
            chosen.append(i)
            basis = trial
    return chosen


def left_kernel(M, p: int) -> np.ndarray:
    """Basis (rows, echelon form) of {x : x @ M == 0}."""
    M = as_mod(M, p)
    n = M.shape[0]
    # x @ M = 0  <=>  M.T @ x = 0
    R, pivots = rref(M.T, p)
    free = [j for j in range(n) if j not in pivots]
    out = []
    for f in free:
        x = np.zeros(n, dtype=np.int64)
        x[f] = 1
        for row, pc in zip(R, pivots):
            x[pc] = -row[f] % p
        out.append(x)
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    return rref(np.array(out), p)[0]


def coordinates(basis, v, p: int) -> np.ndarray:
    """Coefficients c with c @ basis == v; ValueError if v is outside the span."""
    B = as_mod(basis, p)
    v = as_mod(v, p)
    d = B.shape[0]
    aug = np.hstack([B.T, v.reshape(-1, 1)])
    R, pivots = rref(aug, p)
    if d in pivots:
        raise ValueError("vector is not in the span")
    if len(pivots) != d:
        raise ValueError("basis is not linearly independent")
    c = np.zeros(d, dtype=np.int64)
    for row, pc in zip(R, pivots):
        c[pc] = row[d]
    return c


def in_span(basis, v, p: int) -> bool:
    B = as_mod(basis, p)
    if B.shape[0] == 0:
        return not as_mod(v, p).any()
    return rank(np.vstack([B, as_mod(v, p)]), p) == rank(B, p)


def matpow(M, e: int, p: int) -> np.ndarray:
    M = as_mod(M, p)
    out = np.eye(M.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            out = out @ M % p
        M = M @ M % p
        e >>= 1
    return out


def coordinate_map(basis, p: int):
    """Return a function v -> coordinates of v (rows) in the given independent basis."""
    B = as_mod(basis, p)
    d, n = B.shape
    _, piv = rref(B, p)
    if len(piv) != d:
        raise ValueError("basis is not linearly independent")
    sub = B[:, piv]
    R, _ = rref(np.hstack([sub, np.eye(d, dtype=np.int64)]), p)
    inv = R[:, d:]

    def coords(v):
        v = as_mod(v, p)
        c = v[..., piv] @ inv % p
        if not np.array_equal(c @ B % p, v):
            raise ValueError("vector is not in the span")
        return c

    return coords


def all_vectors(p: int, d: int) -> np.ndarray:
    """Every vector of F_p^d, shape (p**d, d), in lexicographic order."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((p,) * d).reshape(d, -1).T
    return grids.astype(np.int64)
