"""Exact linear algebra over Q(i).

Rows are cleared to Gaussian-integer pairs, then reduced by fraction-free
Bareiss condensation: every intermediate entry is a minor of the scaled
matrix, so all divisions are exact integer divisions and no rational
arithmetic happens inside the elimination loop.  Pivots are chosen by
smallest digit size with row order as the tie break, which keeps the whole
pipeline deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PreconditionError
from .gaussian import GaussianRational

Pair = tuple[int, int]


def _gi_div(a: Pair, b: Pair) -> Pair:
    """Exact division in Z[i]; the caller guarantees divisibility."""
    br, bi = b
    if bi == 0:
        if br == 1:
            return a
        return (a[0] // br, a[1] // br)
    n = br * br + bi * bi
    nr = a[0] * br + a[1] * bi
    ni = a[1] * br - a[0] * bi
    return (nr // n, ni // n)


def clear_rows(matrix) -> tuple[list[list[Pair]], Fraction]:
    """Scale each row by the lcm of its denominators.

    Returns integer-pair rows plus the product of the scale factors, which
    is what the determinant of the scaled matrix must be divided by.
    """
    out = []
    scale = Fraction(1)
    for row in matrix:
        l = 1
        for z in row:
            l = math.lcm(l, z.re.denominator, z.im.denominator)
        scale *= l
        out.append([(int(z.re * l), int(z.im * l)) for z in row])
    return out, scale


def echelon_int(rows: list[list[Pair]], ncols: int):
    """Fraction-free row echelon form in place.

    Returns (pivots, sign) where pivots is the list of (row, col) positions.
    """
    m = len(rows)
    k = 0
    prev: Pair = (1, 0)
    sign = 1
    pivots: list[tuple[int, int]] = []
    for c in range(ncols):
        if k >= m:
            break
        best = -1
        best_size = None
        for r in range(k, m):
            ar, ai = rows[r][c]
            if ar or ai:
                size = abs(ar).bit_length() + abs(ai).bit_length()
                if best_size is None or size < best_size:
                    best, best_size = r, size
        if best < 0:
            continue
        if best != k:
            rows[k], rows[best] = rows[best], rows[k]
            sign = -sign
        krow = rows[k]
        pr, pi = krow[c]
        for r in range(k + 1, m):
            rrow = rows[r]
            xr, xi = rrow[c]
            if xr or xi:
                for j in range(c + 1, ncols):
                    ar, ai = krow[j]
                    br, bi = rrow[j]
                    nr = pr * br - pi * bi - (xr * ar - xi * ai)
                    ni = pr * bi + pi * br - (xr * ai + xi * ar)
                    rrow[j] = _gi_div((nr, ni), prev)
            elif prev != (1, 0):
                for j in range(c + 1, ncols):
                    br, bi = rrow[j]
                    if br or bi:
                        rrow[j] = _gi_div((pr * br - pi * bi, pr * bi + pi * br), prev)
            else:
                for j in range(c + 1, ncols):
                    br, bi = rrow[j]
                    if br or bi:
                        rrow[j] = (pr * br - pi * bi, pr * bi + pi * br)
            rrow[c] = (0, 0)
        prev = (pr, pi)
        pivots.append((k, c))
        k += 1
    return pivots, sign


def rank_int(rows: list[list[Pair]], ncols: int) -> int:
    pivots, _ = echelon_int(rows, ncols)
    return len(pivots)


def rank(matrix) -> int:
    if not matrix:
        return 0
    rows, _ = clear_rows(matrix)
    return rank_int(rows, len(matrix[0]))


def det(matrix) -> GaussianRational:
    """Determinant of a square matrix of GaussianRational entries."""
    n = len(matrix)
    if n == 0:
        return GaussianRational(1)
    if any(len(row) != n for row in matrix):
        raise PreconditionError("determinant of a non-square matrix")
    rows, scale = clear_rows(matrix)
    pivots, sign = echelon_int(rows, n)
    if len(pivots) < n:
        return GaussianRational(0)
    pr, pc = pivots[-1]
    vr, vi = rows[pr][pc]
    return GaussianRational(Fraction(sign * vr) / scale, Fraction(sign * vi) / scale)


def nullspace(matrix, ncols: int | None = None) -> list[list[GaussianRational]]:
    """Basis of the right kernel, one vector per free column.

    The basis vector attached to a free column has a 1 there and support on
    the pivot columns only, so the output is canonical for a fixed matrix.
    """
    if not matrix:
        if ncols is None:
            return []
        basis = []
        for j in range(ncols):
            v = [GaussianRational(0)] * ncols
            v[j] = GaussianRational(1)
            basis.append(v)
        return basis
    ncols = len(matrix[0]) if ncols is None else ncols
    rows, _ = clear_rows(matrix)
    pivots, _ = echelon_int(rows, ncols)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for fc in range(ncols):
        if fc in pivot_cols:
            continue
        v = [GaussianRational(0)] * ncols
        v[fc] = GaussianRational(1)
        for pr, pc in reversed(pivots):
            if pc > fc:
                continue
            acc = GaussianRational(0)
            row = rows[pr]
            for j in range(pc + 1, ncols):
                ar, ai = row[j]
                if (ar or ai) and v[j]:
                    acc = acc + GaussianRational(ar, ai) * v[j]
            if acc:
                v[pc] = -acc / GaussianRational(*row[pc])
        basis.append(v)
    return basis


def nullity(matrix, ncols: int | None = None) -> int:
    if not matrix:
        if ncols is None:
            raise PreconditionError("nullity of an empty matrix needs ncols")
        return ncols
    ncols = len(matrix[0]) if ncols is None else ncols
    return ncols - rank(matrix)
