"""Multi-index flattening and the index permutations induced by reordering tensor factors.

All indices in the public model are 1-based: a multi-index (i1, ..., ik) over
factor dimensions (n1, ..., nk) flattens to the linear position

    s = nk*...*n2*(i1 - 1) + nk*...*n3*(i2 - 1) + ... + nk*(i_{k-1} - 1) + ik

which is exactly the rank of the multi-index in lexicographic order.
Reordering the factors by a permutation ``sigma`` induces a permutation of the
linear indices {1, ..., N}; that induced permutation *is* the tensor
permutation matrix in implicit form, stored one column index per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Sequence

import numpy as np

__all__ = [
    "DimList",
    "Sigma",
    "IndexPerm",
    "flatten",
    "unflatten",
    "sigma_inverse",
    "induced_index_perm",
]


@dataclass(frozen=True)
class DimList:
    """Ordered factor dimensions (n1, ..., nk) of a tensor-product space."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("dimension list must contain at least one factor")
        for t, n in enumerate(dims, start=1):
            if n < 1:
                raise ValueError(f"factor {t} must be a positive dimension, got {n}")

    @property
    def size(self) -> int:
        """Total linear size N = n1*n2*...*nk."""
        return prod(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, t: int) -> int:
        return self.dims[t]

    def permuted(self, sigma: "Sigma") -> "DimList":
        """The reordered list (n_sigma(1), ..., n_sigma(k))."""
        if len(sigma) != len(self.dims):
            raise ValueError(
                f"sigma has {len(sigma)} positions but there are {len(self.dims)} factors"
            )
        return DimList(tuple(self.dims[s - 1] for s in sigma.mapping))


@dataclass(frozen=True)
class Sigma:
    """A permutation of the factor positions {1, ..., k}, stored as the image list.

    ``mapping[t-1]`` is sigma(t). The identity on three factors is (1, 2, 3);
    the swap of two factors is (2, 1).
    """

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        k = len(mapping)
        if sorted(mapping) != list(range(1, k + 1)):
            raise ValueError(f"sigma is not a permutation of 1..{k}: {mapping}")

    @classmethod
    def identity(cls, k: int) -> "Sigma":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def reversal(cls, k: int) -> "Sigma":
        """The full reversal (k, k-1, ..., 1); for k=2 this is the swap."""
        return cls(tuple(range(k, 0, -1)))

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, t: int) -> int:
        """Image sigma(t) of the 1-based position t."""
        return self.mapping[t - 1]

    @property
    def is_identity(self) -> bool:
        return all(v == t for t, v in enumerate(self.mapping, start=1))

    def inverse(self) -> "Sigma":
        inv = [0] * len(self.mapping)
        for t, v in enumerate(self.mapping, start=1):
            inv[v - 1] = t
        return Sigma(tuple(inv))

    def compose(self, other: "Sigma") -> "Sigma":
        """The permutation t -> self(other(t))."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different lengths")
        return Sigma(tuple(self.mapping[v - 1] for v in other.mapping))


def sigma_inverse(sigma: Sigma) -> Sigma:
    """Inverse permutation, so that sigma.compose(result) is the identity."""
    return sigma.inverse()


def _flatten(dims: tuple[int, ...], parts: tuple[int, ...]) -> int:
    # no validation: internal hot path
    s = 0
    for n, i in zip(dims, parts):
        s = s * n + (i - 1)
    return s + 1


def flatten(dims: DimList, parts: Sequence[int]) -> int:
    """Linear position (1-based) of a multi-index, per the lexicographic rule."""
    parts = tuple(int(i) for i in parts)
    if len(parts) != len(dims):
        raise ValueError(
            f"multi-index has {len(parts)} parts but there are {len(dims)} factors"
        )
    for t, (n, i) in enumerate(zip(dims, parts), start=1):
        if not 1 <= i <= n:
            raise ValueError(f"index part {t} out of range: got {i}, factor dimension is {n}")
    return _flatten(dims.dims, parts)


def _unflatten(dims: tuple[int, ...], s: int) -> tuple[int, ...]:
    rem = s - 1
    parts = [0] * len(dims)
    for t in range(len(dims) - 1, -1, -1):
        rem, r = divmod(rem, dims[t])
        parts[t] = r + 1
    return tuple(parts)


def unflatten(dims: DimList, s: int) -> tuple[int, ...]:
    """Multi-index whose linear position is ``s``; inverse of :func:`flatten`."""
    s = int(s)
    if not 1 <= s <= dims.size:
        raise ValueError(f"linear index out of range: got {s}, size is {dims.size}")
    return _unflatten(dims.dims, s)


@dataclass(frozen=True)
class IndexPerm:
    """A permutation of {1, ..., N} in matrix form: row r carries its 1 in
    column ``col_of_row[r-1]``.

    Applying it to a vector v therefore yields out[r] = v[col_of_row[r]].
    """

    col_of_row: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.col_of_row)
        object.__setattr__(self, "col_of_row", cols)
        n = len(cols)
        if sorted(cols) != list(range(1, n + 1)):
            raise ValueError(f"col_of_row is not a permutation of 1..{n}")

    @property
    def n_rows(self) -> int:
        return len(self.col_of_row)

    def _gather_index(self) -> np.ndarray:
        # 0-based gather index, built once per instance; the value is
        # immutable so memoizing on self is safe
        cached = getattr(self, "_idx0", None)
        if cached is None:
            cached = np.asarray(self.col_of_row, dtype=np.intp) - 1
            object.__setattr__(self, "_idx0", cached)
        return cached

    def apply(self, v):
        """Permute a vector in O(N) without materializing the matrix.

        Lists and tuples come back as lists; numpy arrays come back as numpy
        arrays (gathered, so the input is never modified).
        """
        if len(v) != self.n_rows:
            raise ValueError(f"vector length {len(v)} does not match size {self.n_rows}")
        if isinstance(v, np.ndarray):
            return v[self._gather_index()]
        return [v[c - 1] for c in self.col_of_row]

    def inverse(self) -> "IndexPerm":
        inv = [0] * self.n_rows
        for r, c in enumerate(self.col_of_row, start=1):
            inv[c - 1] = r
        return IndexPerm(tuple(inv))

    def compose(self, other: "IndexPerm") -> "IndexPerm":
        """Index permutation of the matrix product self . other."""
        if other.n_rows != self.n_rows:
            raise ValueError("cannot compose index permutations of different sizes")
        return IndexPerm(tuple(other.col_of_row[c - 1] for c in self.col_of_row))


@lru_cache(maxsize=512)
def _induced_perm_cached(dims: tuple[int, ...], mapping: tuple[int, ...]) -> IndexPerm:
    k = len(dims)
    out_dims = tuple(dims[s - 1] for s in mapping)
    n = prod(dims)
    cols = [0] * n
    j = [0] * k
    for r in range(1, n + 1):
        i = _unflatten(out_dims, r)
        for t in range(k):
            j[mapping[t] - 1] = i[t]
        cols[r - 1] = _flatten(dims, tuple(j))
    return IndexPerm(tuple(cols))


def induced_index_perm(dims: DimList, sigma: Sigma) -> IndexPerm:
    """The permutation of linear indices induced by reordering factors by sigma.

    Row r, read as a multi-index (i1, ..., ik) over the *output* dimensions
    (n_sigma(1), ..., n_sigma(k)), is sent to the column obtained by
    flattening, over the *input* dimensions, the multi-index (j1, ..., jk)
    with j_sigma(t) = i_t. Equivalently: applying the result to a1 (x) ... (x) ak
    produces a_sigma(1) (x) ... (x) a_sigma(k).
    """
    if len(sigma) != len(dims):
        raise ValueError(
            f"sigma has {len(sigma)} positions but there are {len(dims)} factors"
        )
    return _induced_perm_cached(dims.dims, sigma.mapping)
