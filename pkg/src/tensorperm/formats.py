"""Deterministic text formats for permutation matrices and decompositions.

Every writer produces byte-identical output for identical input. Floats are
printed with 10 significant digits.
"""

from __future__ import annotations

import numpy as np

from .index_algebra import IndexPerm
from .gellmann import SwapDecomposition

__all__ = [
    "MM_HEADER",
    "write_matrix_market",
    "parse_matrix_market",
    "write_perm",
    "parse_perm",
    "write_dense",
    "write_blocks",
    "write_decomposition",
]

MM_HEADER = "%%MatrixMarket matrix coordinate integer general"


def _fmt_float(x: float) -> str:
    return f"{x:.10g}"


def write_matrix_market(m) -> str:
    """Coordinate Matrix Market text: header, size line, then 1-based
    ``row col value`` lines sorted by row then column."""
    m = np.asarray(m)
    if m.ndim != 2:
        raise ValueError("matrix market writer needs a 2-d matrix")
    if m.dtype.kind not in "iu":
        raise ValueError("matrix market writer emits integer matrices only")
    rows, cols = m.shape
    entries = np.argwhere(m != 0)
    lines = [MM_HEADER, f"{rows} {cols} {len(entries)}"]
    for r, c in entries:
        lines.append(f"{r + 1} {c + 1} {m[r, c]}")
    return "\n".join(lines) + "\n"


def parse_matrix_market(text: str) -> np.ndarray:
    """Inverse of :func:`write_matrix_market`; tolerates % comment lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ValueError("missing MatrixMarket header line")
    header = lines[0].split()
    if header[1:] != ["matrix", "coordinate", "integer", "general"]:
        raise ValueError(f"unsupported MatrixMarket flavor: {lines[0]}")
    body = [ln for ln in lines[1:] if ln and not ln.startswith("%")]
    if not body:
        raise ValueError("missing size line")
    try:
        rows, cols, nnz = (int(tok) for tok in body[0].split())
    except Exception as exc:
        raise ValueError(f"bad size line: {body[0]!r}") from exc
    if rows < 1 or cols < 1 or nnz < 0:
        raise ValueError(f"bad size line: {body[0]!r}")
    if len(body) - 1 != nnz:
        raise ValueError(f"expected {nnz} coordinate lines, found {len(body) - 1}")
    m = np.zeros((rows, cols), dtype=np.int64)
    for ln in body[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise ValueError(f"bad coordinate line: {ln!r}")
        r, c, v = int(toks[0]), int(toks[1]), int(toks[2])
        if not 1 <= r <= rows or not 1 <= c <= cols:
            raise ValueError(f"coordinate out of range: {ln!r}")
        m[r - 1, c - 1] = v
    return m


def write_perm(perm: IndexPerm) -> str:
    """Two lines: the size, then the column of each row's 1."""
    return f"{perm.n_rows}\n" + " ".join(str(c) for c in perm.col_of_row) + "\n"


def parse_perm(text: str) -> IndexPerm:
    toks = text.split()
    if not toks:
        raise ValueError("empty permutation text")
    n = int(toks[0])
    if len(toks) - 1 != n:
        raise ValueError(f"expected {n} entries, found {len(toks) - 1}")
    return IndexPerm(tuple(int(t) for t in toks[1:]))


def write_dense(m) -> str:
    m = np.asarray(m)
    if m.ndim != 2 or m.dtype.kind not in "iu":
        raise ValueError("dense writer needs a 2-d integer matrix")
    return "\n".join(" ".join(str(v) for v in row) for row in m.tolist()) + "\n"


def write_blocks(m, block: int) -> str:
    """Nested display: row-blocks of ``block`` x ``block`` sub-blocks, with a
    blank line between row-blocks. Display only, not meant to be re-parsed."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("block writer needs a square matrix")
    size = m.shape[0]
    if block < 1 or size % block:
        raise ValueError(f"block size {block} does not divide order {size}")
    groups = []
    for top in range(0, size, block):
        rows = []
        for r in range(top, top + block):
            cells = [
                " ".join(str(v) for v in m[r, left:left + block].tolist())
                for left in range(0, size, block)
            ]
            rows.append("  ".join(cells))
        groups.append("\n".join(rows))
    return "\n\n".join(groups) + "\n"


def write_decomposition(dec: SwapDecomposition, tol: float) -> str:
    """Header fields ``n`` and ``c00``, then one ``a b real imag`` line per
    coefficient of magnitude above ``tol``, ordered by (a, b)."""
    lines = [f"n {dec.n}", f"c00 {_fmt_float(dec.c00)}"]
    count = dec.table.shape[0]
    for a in range(count):
        for b in range(count):
            if a == 0 and b == 0:
                continue
            c = dec.table[a, b]
            if abs(c) > tol:
                lines.append(f"{a} {b} {_fmt_float(c.real)} {_fmt_float(c.imag)}")
    return "\n".join(lines) + "\n"
