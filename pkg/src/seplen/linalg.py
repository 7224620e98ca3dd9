"""Rank, determinant and semidefiniteness kernels for both scalar backends.

Exact ranks come from Gaussian elimination on Gaussian-integer rows (each row
is scaled by the least common denominator and stripped of its integer content
after every update, which keeps growth polynomial).  Exact determinants use
Bareiss fraction-free elimination.  Float ranks count singular values above a
relative threshold.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .scalars import GaussianRational

# Relative singular-value threshold per unit of matrix dimension.  The
# default rank tolerance for an m x n float matrix is max(m, n) * 2**-40,
# far below the O(1) spectral gaps the matrices in this package exhibit.
RANK_TOL_PER_DIM = 2.0 ** -40


def default_rank_tol(shape: tuple[int, int]) -> float:
    return max(shape) * RANK_TOL_PER_DIM


def rank_float(matrix, tol: float | None = None) -> int:
    """Numerical rank: number of singular values above ``tol * sigma_max``."""
    a = np.asarray(matrix)
    if a.dtype == object:
        a = a.astype(complex)
    if a.size == 0:
        return 0
    sigma = np.linalg.svd(a, compute_uv=False)
    if sigma.size == 0 or sigma[0] <= 0.0:
        return 0
    if tol is None:
        tol = default_rank_tol(a.shape)
    return int(np.count_nonzero(sigma > tol * sigma[0]))


def _as_gaussian(value) -> GaussianRational:
    return GaussianRational.from_value(value)


def _iter_rows(matrix):
    a = np.asarray(matrix, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    for i in range(a.shape[0]):
        yield [_as_gaussian(a[i, j]) for j in range(a.shape[1])]


def _integer_pair_rows(matrix) -> list[list[tuple[int, int]]]:
    """Scale each row by its least common denominator; entries become Gaussian integers."""
    rows = []
    for row in _iter_rows(matrix):
        scale = 1
        for e in row:
            scale = scale * e.re.denominator // math.gcd(scale, e.re.denominator)
            scale = scale * e.im.denominator // math.gcd(scale, e.im.denominator)
        rows.append([(int(e.re * scale), int(e.im * scale)) for e in row])
    return rows


def _strip_row_content(row: list[tuple[int, int]]) -> None:
    g = 0
    for re, im in row:
        g = math.gcd(g, re)
        g = math.gcd(g, im)
        if g == 1:
            return
    if g > 1:
        for j, (re, im) in enumerate(row):
            row[j] = (re // g, im // g)


def rank_exact(matrix) -> int:
    """Unconditional rank of a matrix with Gaussian-rational entries."""
    rows = _integer_pair_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    rank = 0
    top = 0
    for col in range(ncols):
        if top >= nrows:
            break
        # smallest nonzero entry as pivot limits coefficient growth
        pivot = -1
        pivot_size = None
        for i in range(top, nrows):
            re, im = rows[i][col]
            if re or im:
                size = abs(re) + abs(im)
                if pivot_size is None or size < pivot_size:
                    pivot, pivot_size = i, size
        if pivot < 0:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        pre, pim = rows[top][col]
        base = rows[top]
        for i in range(top + 1, nrows):
            are, aim = rows[i][col]
            if not (are or aim):
                continue
            target = rows[i]
            if pim == 0 and aim == 0:  # common all-real case, half the work
                for j in range(col, ncols):
                    xre, xim = target[j]
                    yre, yim = base[j]
                    target[j] = (pre * xre - are * yre, pre * xim - are * yim)
            else:
                for j in range(col, ncols):
                    xre, xim = target[j]
                    yre, yim = base[j]
                    target[j] = (pre * xre - pim * xim - are * yre + aim * yim,
                                 pre * xim + pim * xre - are * yim - aim * yre)
            _strip_row_content(target)
        top += 1
        rank += 1
    return rank


def _det_bareiss_int(m: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_exact(matrix) -> Fraction:
    """Exact determinant of a square matrix with rational (real) entries."""
    rows = []
    scaling = Fraction(1)
    for row in _iter_rows(matrix):
        ints = []
        scale = 1
        for e in row:
            if e.im:
                raise ValueError("det_exact expects a real matrix")
            scale = scale * e.re.denominator // math.gcd(scale, e.re.denominator)
        for e in row:
            ints.append(int(e.re * scale))
        scaling *= scale
        rows.append(ints)
    if rows and len(rows) != len(rows[0]):
        raise ValueError("determinant of a non-square matrix")
    return Fraction(_det_bareiss_int(rows)) / scaling


def is_psd_exact(matrix) -> bool:
    """Exact positive-semidefiniteness of a Hermitian Gaussian-rational matrix.

    Pivoted rational LDL^dagger: repeatedly pick the largest remaining
    diagonal entry; a negative pivot, a nonreal diagonal, or a nonzero
    residual block with an all-zero diagonal each certify indefiniteness.
    """
    a = [row[:] for row in _iter_rows(matrix)]
    n = len(a)
    for k in range(n):
        pivot = k
        for i in range(k + 1, n):
            if a[i][i].re > a[pivot][pivot].re:
                pivot = i
        diag = a[pivot][pivot]
        if diag.im:
            return False
        if diag.re < 0:
            return False
        if diag.re == 0:
            # every remaining diagonal is <= 0; PSD forces the whole block to vanish
            for r in range(k, n):
                for c in range(k, n):
                    if not a[r][c].is_zero():
                        return False
            return True
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            for row in a:
                row[k], row[pivot] = row[pivot], row[k]
        inv = 1 / diag
        for r in range(k + 1, n):
            if a[r][k].is_zero():
                continue
            factor = a[r][k] * inv
            for c in range(k + 1, n):
                a[r][c] = a[r][c] - factor * a[k][c]
    return True
