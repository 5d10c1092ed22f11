"""Dense exact linear algebra over the prime field GF(p).

Everything here works on numpy integer arrays with entries reduced mod p.
Gaussian elimination drives rank, RREF, nullspace and solving; p = 2 gets
a packed-bitset fast path for rank (rows packed 8 bits per byte, row
updates are vectorized XORs).  All routines are exact.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p):
    if not is_prime(p):
        raise ValidationError(f"p must be prime, got {p}")
    return p


def as_gfp(M, p):
    """Coerce to a 2-d int64 array with entries in 0..p-1."""
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2:
        raise ValidationError(f"expected a matrix, got ndim={A.ndim}")
    return np.mod(A, p)


def matmul(A, B, p):
    # int64 products stay well below 2**63 for the dimensions in scope
    return np.mod(np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64), p)


def matpow(A, k, p):
    A = as_gfp(A, p)
    n = A.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = A
    while k > 0:
        if k & 1:
            result = matmul(result, base, p)
        k >>= 1
        if k:
            base = matmul(base, base, p)
    return result


def kron(A, B, p):
    return np.mod(np.kron(np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)), p)


def _rank_gf2_packed(M):
    """Rank over GF(2) with rows packed into bytes (np.packbits order: MSB first)."""
    A = np.packbits(np.asarray(M, dtype=np.uint8) & 1, axis=1)
    m = A.shape[0]
    n = M.shape[1]
    r = 0
    for col in range(n):
        if r == m:
            break
        byte, bit = divmod(col, 8)
        mask = np.uint8(0x80 >> bit)
        hits = np.nonzero(A[r:, byte] & mask)[0]
        if hits.size == 0:
            continue
        piv = r + hits[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        below = r + 1 + np.nonzero(A[r + 1 :, byte] & mask)[0]
        if below.size:
            A[below] ^= A[r]
        r += 1
    return r


def rank(M, p):
    A = as_gfp(M, p)
    if A.size == 0:
        return 0
    if p == 2:
        return _rank_gf2_packed(A)
    m, n = A.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        hits = np.nonzero(A[r:, col])[0]
        if hits.size == 0:
            continue
        piv = r + hits[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, col]), p - 2, p)
        A[r, col:] = np.mod(A[r, col:] * inv, p)
        below = r + 1 + np.nonzero(A[r + 1 :, col])[0]
        if below.size:
            A[below, col:] = np.mod(
                A[below, col:] - np.outer(A[below, col], A[r, col:]), p
            )
        r += 1
    return r


def rref(M, p):
    """Reduced row echelon form.

    Returns (R, pivots) where pivots lists the pivot column of each
    nonzero row of R.
    """
    A = as_gfp(M, p)
    m, n = A.shape
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        hits = np.nonzero(A[r:, col])[0]
        if hits.size == 0:
            continue
        piv = r + hits[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, col]), p - 2, p)
        A[r, col:] = np.mod(A[r, col:] * inv, p)
        others = np.nonzero(A[:, col])[0]
        others = others[others != r]
        if others.size:
            A[np.ix_(others, range(col, n))] = np.mod(
                A[np.ix_(others, range(col, n))] - np.outer(A[others, col], A[r, col:]), p
            )
        pivots.append(col)
        r += 1
    return A, pivots


def nullspace(M, p):
    """Column basis of the right kernel: columns x with M x = 0."""
    A = as_gfp(M, p)
    m, n = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for j, c in enumerate(free):
        basis[c, j] = 1
        for row, pc in enumerate(pivots):
            basis[pc, j] = (-R[row, c]) % p
    return basis


def left_nullspace(M, p):
    """Row basis of the left kernel: rows y with y M = 0 (returned as rows)."""
    return nullspace(as_gfp(M, p).T, p).T


def column_space(M, p):
    """Echelonized basis of the column space, as columns.

    Each basis column has a leading 1 in a distinct pivot row and zeros in
    the other pivot rows, which makes quotient projections cheap.
    """
    A = as_gfp(M, p)
    R, pivots = rref(A.T, p)
    basis = R[: len(pivots)].T
    return basis, pivots


def solve(A, B, p):
    """Solve A X = B exactly; raises ValidationError when inconsistent."""
    A = as_gfp(A, p)
    B = as_gfp(B, p)
    if A.shape[0] != B.shape[0]:
        raise ValidationError("incompatible shapes in solve")
    n = A.shape[1]
    aug = np.hstack([A, B])
    R, pivots = rref(aug, p)
    if any(c >= n for c in pivots):
        raise ValidationError("inconsistent linear system over GF(p)")
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        X[pc] = R[row, n:]
    if not np.array_equal(matmul(A, X, p), B):
        raise ValidationError("inconsistent linear system over GF(p)")
    return X


def inverse(A, p):
    A = as_gfp(A, p)
    n = A.shape[0]
    if A.shape[0] != A.shape[1]:
        raise ValidationError("inverse of a non-square matrix")
    return solve(A, np.eye(n, dtype=np.int64), p)


def random_invertible(rng, n, p):
    """Random invertible n x n matrix over GF(p) (rejection sampling)."""
    while True:
        A = np.array([[rng.randrange(p) for _ in range(n)] for _ in range(n)], dtype=np.int64)
        if rank(A, p) == n:
            return A
