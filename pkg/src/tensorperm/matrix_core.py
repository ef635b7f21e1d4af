"""Dense matrices over two scalar domains, with Kronecker-product algebra.

Matrices are plain numpy arrays in one of two domains: exact integers
(int64, compared with exact equality) or complex floats (complex128,
compared within an explicit tolerance). Floating real arrays are rejected
so that every comparison is either exact or deliberately toleranced.

Integer arithmetic here is exact as long as magnitudes stay inside int64;
everything at the intended desk scale (dimension bound 4096, small integer
entries) is many orders of magnitude below that limit.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "DEFAULT_DENSE_BOUND",
    "CapacityError",
    "int_matrix",
    "complex_matrix",
    "domain_of",
    "kron",
    "matmul",
    "transpose",
    "elementary",
    "elementary_kron_index",
    "rect_identity",
    "kron_basis_rank",
    "rank_over_rationals",
    "matrices_equal",
    "matrices_close",
]

# Largest row/column count for dense materialization; beyond it only
# implicit index-permutation operations are allowed.
DEFAULT_DENSE_BOUND = 4096

INT_DOMAIN = "int"
COMPLEX_DOMAIN = "complex"


class CapacityError(Exception):
    """A dense object would exceed the configured row/column bound."""


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got {m.ndim}-d data")
    if m.dtype.kind in "iu":
        return m.astype(np.int64, copy=False)
    if m.dtype.kind == "c":
        return m.astype(np.complex128, copy=False)
    raise ValueError(
        f"unsupported scalar domain {m.dtype}: use exact integers or complex floats"
    )


def int_matrix(rows) -> np.ndarray:
    """Exact-integer matrix from nested sequences."""
    m = _as_matrix(rows)
    if m.dtype != np.int64:
        raise ValueError("entries are not integers")
    return m


def complex_matrix(rows) -> np.ndarray:
    """Complex-float matrix from nested sequences (real input is promoted)."""
    m = np.asarray(rows)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got {m.ndim}-d data")
    return m.astype(np.complex128)


def domain_of(a: np.ndarray) -> str:
    """Scalar domain tag of a matrix: 'int' or 'complex'."""
    kind = np.asarray(a).dtype.kind
    if kind in "iu":
        return INT_DOMAIN
    if kind == "c":
        return COMPLEX_DOMAIN
    raise ValueError(f"unsupported scalar domain {np.asarray(a).dtype}")


def _common_domain(a: np.ndarray, b: np.ndarray) -> str:
    da, db = domain_of(a), domain_of(b)
    if da != db:
        raise ValueError(f"scalar domain mismatch: {da} vs {db}")
    return da


def kron(a, b, dense_bound: int = DEFAULT_DENSE_BOUND) -> np.ndarray:
    """Kronecker product: the block matrix whose (i, j) block is a[i, j] * b."""
    a, b = _as_matrix(a), _as_matrix(b)
    _common_domain(a, b)
    ra, ca = a.shape
    rb, cb = b.shape
    if ra * rb > dense_bound or ca * cb > dense_bound:
        raise CapacityError(
            f"kron result {ra * rb}x{ca * cb} exceeds dense bound {dense_bound}"
        )
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(ra * rb, ca * cb)


def matmul(a, b) -> np.ndarray:
    a, b = _as_matrix(a), _as_matrix(b)
    _common_domain(a, b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}")
    return a @ b


def transpose(a) -> np.ndarray:
    return _as_matrix(a).T.copy()


def elementary(shape, i: int, j: int) -> np.ndarray:
    """Matrix with a single 1 at (i, j), 1-based. ``shape`` is a side length
    for a square matrix or a (rows, cols) pair."""
    rows, cols = (shape, shape) if isinstance(shape, int) else (int(shape[0]), int(shape[1]))
    if rows < 1 or cols < 1:
        raise ValueError(f"invalid elementary matrix shape {rows}x{cols}")
    if not 1 <= i <= rows:
        raise ValueError(f"row index out of range: got {i}, matrix has {rows} rows")
    if not 1 <= j <= cols:
        raise ValueError(f"column index out of range: got {j}, matrix has {cols} columns")
    m = np.zeros((rows, cols), dtype=np.int64)
    m[i - 1, j - 1] = 1
    return m


def elementary_kron_index(n: int, p: int, i: int, j: int, k: int, l: int) -> tuple[int, int]:
    """Position (row, col) of the single 1 in the product of an n x n
    elementary matrix at (i, j) with a p x p elementary matrix at (k, l):

        row = p*(i - 1) + k,   col = p*(j - 1) + l
    """
    if not 1 <= i <= n or not 1 <= j <= n:
        raise ValueError(f"elementary indices ({i}, {j}) out of range for size {n}")
    if not 1 <= k <= p or not 1 <= l <= p:
        raise ValueError(f"elementary indices ({k}, {l}) out of range for size {p}")
    return p * (i - 1) + k, p * (j - 1) + l


def rect_identity(rows: int, cols: int) -> np.ndarray:
    """Rectangular identity: entry (i, j) is 1 iff i = j."""
    if rows < 1 or cols < 1:
        raise ValueError(f"invalid identity shape {rows}x{cols}")
    return np.eye(rows, cols, dtype=np.int64)


def rank_over_rationals(rows) -> int:
    """Rank by Gaussian elimination over exact rationals.

    Takes any iterable of equal-length integer (or Fraction) rows. This is
    deliberately independent of floating-point linear algebra so it can serve
    as an exact oracle.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def kron_basis_rank(n: int, m: int, p: int, r: int,
                    dense_bound: int = DEFAULT_DENSE_BOUND) -> int:
    """Rank of the n*m*p*r Kronecker products of the two elementary bases,
    each flattened to a vector. Full rank (= n*m*p*r) means the products form
    a basis of the (n*p) x (m*r) matrices."""
    if min(n, m, p, r) < 1:
        raise ValueError("all dimensions must be >= 1")
    total = n * m * p * r
    if total > dense_bound:
        raise CapacityError(f"stacked basis size {total} exceeds dense bound {dense_bound}")
    stacked = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            left = elementary((n, m), i, j)
            for k in range(1, p + 1):
                for l in range(1, r + 1):
                    right = elementary((p, r), k, l)
                    stacked.append(kron(left, right, dense_bound=dense_bound).ravel().tolist())
    return rank_over_rationals(stacked)


def matrices_equal(a, b) -> bool:
    """Exact equality for exact-integer matrices. Complex matrices are
    refused: compare those with :func:`matrices_close` and a tolerance."""
    a, b = _as_matrix(a), _as_matrix(b)
    if domain_of(a) != INT_DOMAIN or domain_of(b) != INT_DOMAIN:
        raise ValueError("complex matrices require an explicit tolerance; use matrices_close")
    return a.shape == b.shape and bool(np.array_equal(a, b))


def matrices_close(a, b, tol: float) -> bool:
    """Entrywise comparison within ``tol`` (mandatory). Accepts either domain,
    so complex results can be checked against exact integer references."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        return False
    return bool(np.max(np.abs(a.astype(np.complex128) - b.astype(np.complex128))) <= tol)
