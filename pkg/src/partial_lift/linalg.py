"""Exact Gaussian elimination over GF(2^ell) on integer-coded numpy arrays."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec, inv, vmul


def row_echelon(spec: FieldSpec, matrix) -> tuple[np.ndarray, list[int]]:
    """Forward elimination with first-nonzero pivoting.

    Returns the echelon form (pivot rows normalised to a leading 1) and the
    pivot columns; ``len(pivots)`` is the rank.
    """
    R = np.array(matrix, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if R.size and (R.min() < 0 or R.max() >= spec.q):
        raise ValueError(f"entries must lie in [0, {spec.q})")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        p = row + int(nz[0])
        if p != row:
            R[[row, p]] = R[[p, row]]
        R[row, col:] = vmul(spec, inv(spec, int(R[row, col])), R[row, col:])
        if row + 1 < m:
            R[row + 1 :, col:] ^= vmul(spec, R[row + 1 :, col][:, None], R[row, col:][None, :])
        pivots.append(col)
        row += 1
    return R, pivots


def rank(spec: FieldSpec, matrix) -> int:
    return len(row_echelon(spec, matrix)[1])
