"""Gaussian elimination over F_q using the field's lookup tables."""
from __future__ import annotations

import numpy as np

from .field import FiniteField


def _axpy(F, a, x, y):
    """y + a*x, elementwise over F."""
    return F.add_table[y, F.mul_table[a, x]]


class EchelonBasis:
    """Incrementally grown basis that remembers how each pivot row was built.

    Vectors are offered in order; a vector is kept iff it is independent of
    the ones kept before it.  ``coefficients`` expresses any vector in the
    span as a combination of the kept vectors.
    """

    def __init__(self, field: FiniteField, dim: int):
        self.F = field
        self.dim = dim
        self.rows = []  # reduced rows, pivot entry normalised to 1
        self.pivots = []
        self.combos = []  # rows[r] = sum combos[r][i] * kept[i]
        self.kept = []

    def _reduce(self, vec):
        F = self.F
        vec = np.asarray(vec, dtype=np.int64).copy()
        combo = np.zeros(len(self.kept), dtype=np.int64)
        for row, piv, c in zip(self.rows, self.pivots, self.combos):
            a = vec[piv]
            if a:
                na = F.neg_table[a]
                vec = _axpy(F, na, row, vec)
                combo = _axpy(F, na, c[: len(combo)], combo)
        return vec, combo

    def add(self, vec) -> bool:
        F = self.F
        residual, combo = self._reduce(vec)
        nz = np.flatnonzero(residual)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        scale = F.inv_table[residual[piv]]
        # residual = vec + sum combo_i kept_i, and vec becomes kept[-1]
        self.kept.append(np.asarray(vec, dtype=np.int64))
        k = len(self.kept)
        full = np.zeros(k, dtype=np.int64)
        full[: k - 1] = combo
        full[k - 1] = 1
        self.combos = [np.concatenate([c, np.zeros(k - len(c), dtype=np.int64)]) for c in self.combos]
        self.rows.append(F.mul_table[scale, residual].astype(np.int64))
        self.combos.append(F.mul_table[scale, full].astype(np.int64))
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.kept)

    def coefficients(self, vec):
        """Coefficients over the kept vectors, or None if vec is outside the span."""
        residual, combo = self._reduce(vec)
        if np.any(residual):
            return None
        # 0 = vec + sum combo_i kept_i
        return self.F.neg_table[combo].astype(np.int64)


def rank(field: FiniteField, rows) -> int:
    rows = np.asarray(rows, dtype=np.int64)
    eb = EchelonBasis(field, rows.shape[1] if rows.ndim == 2 else 0)
    for r in rows:
        eb.add(r)
    return eb.rank


def matmul(field: FiniteField, a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    terms = field.mul_table[a[:, :, None], b[None, :, :]]
    return field.sum(terms, axis=1)


def inverse(field: FiniteField, mat):
    """Inverse of a square matrix over F, or None if singular."""
    F = field
    a = np.asarray(mat, dtype=np.int64).copy()
    n = a.shape[0]
    inv = np.eye(n, dtype=np.int64)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r, col]), None)
        if pivot is None:
            return None
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            inv[[col, pivot]] = inv[[pivot, col]]
        s = F.inv_table[a[col, col]]
        a[col] = F.mul_table[s, a[col]]
        inv[col] = F.mul_table[s, inv[col]]
        for r in range(n):
            if r != col and a[r, col]:
                f = F.neg_table[a[r, col]]
                a[r] = _axpy(F, f, a[col], a[r])
                inv[r] = _axpy(F, f, inv[col], inv[r])
    return inv
