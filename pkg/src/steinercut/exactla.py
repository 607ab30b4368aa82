"""Exact rational linear algebra on small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .core import SteinerCutError


class DimensionMismatch(SteinerCutError):
    pass


class SingularMatrix(SteinerCutError):
    pass


class ZeroVector(SteinerCutError):
    pass


class NegativeComponent(SteinerCutError):
    pass


def _as_rows(rows) -> list:
    return [[Fraction(x) for x in r] for r in rows]


def row_echelon(rows) -> list:
    """Reduced row echelon form (nonzero rows only)."""
    a = _as_rows(rows)
    if not a:
        return []
    ncols = len(a[0])
    if any(len(r) != ncols for r in a):
        raise DimensionMismatch("rows have different lengths")
    pivot_row = 0
    for col in range(ncols):
        piv = next((i for i in range(pivot_row, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[pivot_row], a[piv] = a[piv], a[pivot_row]
        p = a[pivot_row][col]
        a[pivot_row] = [x / p for x in a[pivot_row]]
        for i in range(len(a)):
            if i != pivot_row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[pivot_row])]
        pivot_row += 1
        if pivot_row == len(a):
            break
    return a[:pivot_row]


def rank(rows) -> int:
    return len(row_echelon(rows))


class EchelonBasis:
    """Incrementally maintained basis of a row space.

    ``add`` returns False (and keeps the basis unchanged) when the vector is
    already in the span.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows = {}  # pivot column -> row with 1 at pivot

    def __len__(self):
        return len(self._rows)

    def reduce(self, v) -> list:
        r = [Fraction(x) for x in v]
        if len(r) != self.ncols:
            raise DimensionMismatch(f"expected length {self.ncols}, got {len(r)}")
        for col in sorted(self._rows):
            if r[col] != 0:
                f = r[col]
                r = [x - f * y for x, y in zip(r, self._rows[col])]
        return r

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        r = self.reduce(v)
        piv = next((i for i, x in enumerate(r) if x != 0), None)
        if piv is None:
            return False
        p = r[piv]
        r = [x / p for x in r]
        for col, row in self._rows.items():
            if row[piv] != 0:
                f = row[piv]
                self._rows[col] = [x - f * y for x, y in zip(row, r)]
        self._rows[piv] = r
        return True

    @property
    def full(self) -> bool:
        return len(self._rows) == self.ncols


def solve_square(m, rhs) -> tuple:
    """Unique solution of ``m x = rhs``; raises SingularMatrix when rank-deficient."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a) or len(rhs) != n:
        raise DimensionMismatch("solve_square needs an n x n matrix and length-n rhs")
    aug = [r + [Fraction(b)] for r, b in zip(a, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {col})")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(r[n] for r in aug)


def solve_square_int(m: Sequence[Sequence[int]], rhs: Sequence[int]):
    """Fraction-free (Bareiss) solve for integer systems.

    Returns ``(numerators, det)`` with ``x = numerators / det`` and ``det > 0``,
    or None when singular.
    """
    n = len(m)
    a = [list(r) + [b] for r, b in zip(m, rhs)]
    prev = 1
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    det = a[n - 1][n - 1]
    # back substitution in exact rationals scaled by det
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        for j in range(i + 1, n):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    den = lcm(*(v.denominator for v in x)) if n else 1
    nums = [int(v * den) for v in x]
    return nums, den


def minimum_integer_form(v) -> tuple:
    """The positive multiple of ``v`` with coprime nonnegative integer entries."""
    v = [Fraction(x) for x in v]
    if any(x < 0 for x in v):
        raise NegativeComponent("minimum integer form needs a nonnegative vector")
    if not any(v):
        raise ZeroVector("minimum integer form of the zero vector is undefined")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(Fraction(x // g) for x in ints)


def scale_to_minimum_integer_form(v, rhs) -> tuple:
    """Scale the pair (v, rhs) jointly so that v is in minimum integer form."""
    v = [Fraction(x) for x in v]
    w = minimum_integer_form(v)
    i = next(i for i, x in enumerate(v) if x != 0)
    factor = w[i] / v[i]
    return w, Fraction(rhs) * factor


def is_minimum_integer_form(v) -> bool:
    v = [Fraction(x) for x in v]
    if any(x < 0 or x.denominator != 1 for x in v) or not any(v):
        return False
    g = 0
    for x in v:
        g = gcd(g, x.numerator)
    return g == 1


def mat_vec(m, x) -> tuple:
    return tuple(sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) for row in m)
