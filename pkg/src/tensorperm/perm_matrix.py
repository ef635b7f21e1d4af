"""Tensor permutation matrices built three independent ways, applied
implicitly, and classified.

The matrix U for factor dimensions (n1, ..., nk) and a position permutation
sigma is the unique 0/1 matrix with

    U . (a1 (x) a2 (x) ... (x) ak) = a_sigma(1) (x) ... (x) a_sigma(k)

for all column vectors a_t of size n_t. The two-factor swap case
U[n(x)p] . (a (x) b) = b (x) a (a of size n, b of size p) is the tensor
commutation matrix, labelled here ``TcmLabel(n, p)``.

Three constructions are provided and must agree:

* :func:`build_delta` places row r's 1 by the index relation j_sigma(t) = i_t
  (rows read over the permuted dimension list, columns over the original);
* :func:`build_elementary_sum` accumulates one elementary matrix per column
  multi-index, at the row given by flattening the sigma-reordered parts over
  the permuted dimensions;
* :func:`build_stride_rule` (two factors, swap only) walks a cursor down the
  columns, descending n rows per column and restarting each sweep one row
  lower, and cross-checks the walk against the closed form that puts the 1 of
  column p*(j-1)+l at row n*(l-1)+j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .index_algebra import DimList, Sigma, _flatten, induced_index_perm
from .matrix_core import DEFAULT_DENSE_BOUND, CapacityError, rect_identity

__all__ = [
    "TensorPermSpec",
    "TcmLabel",
    "ClosureReport",
    "tcm_spec",
    "build_delta",
    "build_elementary_sum",
    "build_stride_rule",
    "apply",
    "commutation_conjugation_check",
    "classify_tcm",
    "closure_check",
    "is_permutation_matrix",
]


@dataclass(frozen=True)
class TensorPermSpec:
    """Factor dimensions plus the permutation acting on factor positions."""

    dims: DimList
    sigma: Sigma

    def __post_init__(self) -> None:
        if not isinstance(self.dims, DimList):
            object.__setattr__(self, "dims", DimList(tuple(self.dims)))
        if not isinstance(self.sigma, Sigma):
            object.__setattr__(self, "sigma", Sigma(tuple(self.sigma)))
        if len(self.sigma) != len(self.dims):
            raise ValueError(
                f"sigma has {len(self.sigma)} positions but there are {len(self.dims)} factors"
            )

    @property
    def size(self) -> int:
        return self.dims.size


@dataclass(frozen=True)
class TcmLabel:
    """Name of the two-factor swap U[n(x)p], which sends a (x) b to b (x) a."""

    n: int
    p: int

    @property
    def order(self) -> int:
        return self.n * self.p

    def spec(self) -> TensorPermSpec:
        return tcm_spec(self.n, self.p)

    def __str__(self) -> str:
        return f"{self.n}x{self.p}"


def tcm_spec(n: int, p: int) -> TensorPermSpec:
    """Spec of the tensor commutation matrix U[n(x)p]."""
    return TensorPermSpec(DimList((n, p)), Sigma((2, 1)))


def _check_capacity(n: int, dense_bound: int) -> None:
    if n > dense_bound:
        raise CapacityError(f"dense order {n} exceeds dense bound {dense_bound}")


def build_delta(spec: TensorPermSpec, dense_bound: int = DEFAULT_DENSE_BOUND) -> np.ndarray:
    """Dense materialization of the induced index permutation.

    Entry (r, c) is 1 exactly when the row multi-index i (over the permuted
    dimensions) and column multi-index j (over the original dimensions)
    satisfy i_t = j_sigma(t) for every t.
    """
    n = spec.size
    _check_capacity(n, dense_bound)
    cols = induced_index_perm(spec.dims, spec.sigma).col_of_row
    dense = np.zeros((n, n), dtype=np.int64)
    dense[np.arange(n), np.asarray(cols, dtype=np.intp) - 1] = 1
    return dense


def build_elementary_sum(spec: TensorPermSpec,
                         dense_bound: int = DEFAULT_DENSE_BOUND) -> np.ndarray:
    """Sum of one order-N elementary matrix per column multi-index.

    The multi-index (j1, ..., jk) contributes a 1 in the column it flattens
    to and in the row obtained by flattening (j_sigma(1), ..., j_sigma(k))
    over the permuted dimension list. A valid result has exactly N ones.
    """
    n = spec.size
    _check_capacity(n, dense_bound)
    dims = spec.dims.dims
    mapping = spec.sigma.mapping
    out_dims = tuple(dims[s - 1] for s in mapping)
    dense = np.zeros((n, n), dtype=np.int64)
    for j in itertools.product(*(range(1, d + 1) for d in dims)):
        col = _flatten(dims, j)
        row = _flatten(out_dims, tuple(j[s - 1] for s in mapping))
        dense[row - 1, col - 1] += 1
    return dense


def _stride_positions_walk(n: int, p: int) -> list[tuple[int, int]]:
    # Cursor walk: 1 at (1, 1), then one column right and n rows down per
    # step; when the cursor falls off the bottom, the next sweep restarts
    # one row lower than the previous one.
    size = n * p
    ones = []
    row, col = 1, 1
    for _ in range(size):
        ones.append((row, col))
        col += 1
        row += n
        if row > size:
            row = row - size + 1
    return ones


def _stride_positions_closed(n: int, p: int) -> list[tuple[int, int]]:
    # Column p*(j-1)+l carries its 1 at row n*(l-1)+j.
    ones = []
    for j in range(1, n + 1):
        for l in range(1, p + 1):
            ones.append((n * (l - 1) + j, p * (j - 1) + l))
    ones.sort(key=lambda rc: rc[1])
    return ones


def build_stride_rule(n: int, p: int, dense_bound: int = DEFAULT_DENSE_BOUND) -> np.ndarray:
    """The swap U[n(x)p] built by the column-walk rule, cross-checked against
    its closed form."""
    if n < 1 or p < 1:
        raise ValueError(f"factor dimensions must be positive, got ({n}, {p})")
    size = n * p
    _check_capacity(size, dense_bound)
    walked = _stride_positions_walk(n, p)
    if walked != _stride_positions_closed(n, p):
        raise RuntimeError(f"stride walk and closed form disagree for ({n}, {p})")
    dense = np.zeros((size, size), dtype=np.int64)
    for row, col in walked:
        dense[row - 1, col - 1] = 1
    return dense


def apply(spec: TensorPermSpec, v):
    """Permute a length-N vector in O(N) without materializing the matrix.

    For v = a1 (x) ... (x) ak the result is a_sigma(1) (x) ... (x) a_sigma(k).
    """
    return induced_index_perm(spec.dims, spec.sigma).apply(v)


def _kron_unchecked(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ra, ca = a.shape
    rb, cb = b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(ra * rb, ca * cb)


def commutation_conjugation_check(spec: TensorPermSpec, matrices) -> bool:
    """True iff U . (A1 (x) ... (x) Ak) = (A_sigma(1) (x) ... (x) A_sigma(k)) . U
    holds exactly, with A_t square of size dims[t]."""
    mats = [np.asarray(a) for a in matrices]
    dims = spec.dims.dims
    if len(mats) != len(dims):
        raise ValueError(f"expected {len(dims)} matrices, got {len(mats)}")
    for t, (a, d) in enumerate(zip(mats, dims), start=1):
        if a.shape != (d, d):
            raise ValueError(f"matrix {t} must be {d}x{d}, got {a.shape}")
    n = spec.size
    u = build_delta(spec, dense_bound=max(n, DEFAULT_DENSE_BOUND))
    forward = mats[0]
    for a in mats[1:]:
        forward = _kron_unchecked(forward, a)
    mapping = spec.sigma.mapping
    permuted = mats[mapping[0] - 1]
    for s in mapping[1:]:
        permuted = _kron_unchecked(permuted, mats[s - 1])
    if forward.dtype == np.int64:
        # Every partial sum in U . K is an integer bounded by n * max|K|;
        # while that stays below 2**53 the float64 product is exact and the
        # BLAS path is much faster than numpy's integer matmul.
        peak = n * max(1, int(np.abs(forward).max()))
        if peak < 2**53:
            uf = u.astype(np.float64)
            return bool(
                np.array_equal(uf @ forward.astype(np.float64),
                               permuted.astype(np.float64) @ uf)
            )
    return bool(np.array_equal(u @ forward, permuted @ u))


def is_permutation_matrix(m) -> bool:
    """Square 0/1 matrix with exactly one 1 per row and per column."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if not np.isin(m, (0, 1)).all():
        return False
    return bool((m.sum(axis=0) == 1).all() and (m.sum(axis=1) == 1).all())


def classify_tcm(m) -> list[TcmLabel]:
    """Every label (n, p) whose swap matrix equals ``m``; empty if none.

    The input must be a square 0/1 matrix. Candidates are rebuilt fresh and
    compared entry for entry, one per factorization of the order.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("classification needs a square matrix")
    if not np.isin(m, (0, 1)).all():
        raise ValueError("classification needs a 0/1 matrix")
    order = m.shape[0]
    labels = []
    for n in range(1, order + 1):
        if order % n:
            continue
        p = order // n
        if np.array_equal(m, build_delta(tcm_spec(n, p), dense_bound=order)):
            labels.append(TcmLabel(n, p))
    return labels


@dataclass(frozen=True)
class ClosureReport:
    """Whether {identity, U[n(x)p], U[p(x)n]} is closed under matrix product;
    if not, ``witness`` names the first product that escapes the set."""

    closed: bool
    witness: str | None = None


def closure_check(n: int, p: int, dense_bound: int = DEFAULT_DENSE_BOUND) -> ClosureReport:
    """Test closure of {U[1(x)np], U[n(x)p], U[p(x)n]} under matrix product.

    This brute-force check multiplies every ordered pair and looks the result
    up in the set. Closure holds when n = p or min(n, p) = 1 (the set then
    collapses to {I, U} with U involutive) but fails in general: already for
    (n, p) = (3, 2) the square of U[3(x)2] is a permutation matrix outside
    the set.
    """
    size = n * p
    _check_capacity(size, dense_bound)
    elements = [
        (f"U[1x{size}]", rect_identity(size, size)),
        (f"U[{n}x{p}]", build_delta(tcm_spec(n, p), dense_bound=dense_bound)),
        (f"U[{p}x{n}]", build_delta(tcm_spec(p, n), dense_bound=dense_bound)),
    ]
    members = {mat.tobytes() for _, mat in elements}
    for name_a, a in elements:
        for name_b, b in elements:
            if (a @ b).tobytes() not in members:
                return ClosureReport(closed=False, witness=f"{name_a} * {name_b}")
    return ClosureReport(closed=True)
