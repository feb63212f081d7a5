"""Signed Stirling numbers of the first kind and their k-generalization.

There are several sign/offset conventions for Stirling numbers of the first
kind in the literature; this module fixes the recursive one

    s(i+1, j) = s(i, j-1) - i * s(i, j),   s(0,0) = 1,  s(i,0) = s(0,j) = 0

for i, j > 0, and generalizes to

    c(i, j, k) = sum_{r=j}^{i} C(r, j) * (-k)**(r-j) * s(i, r)

so that c(i, j, 0) == s(i, j).  The c family is the two-sided inverse of the
b family of :mod:`msnlib.msn` in the sense checked by
:func:`inversion_product`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import RationalLike, as_rational, binom, qpow
from .msn import msn_table


def stirling1_triangle(i_max: int) -> list[list[int]]:
    """Rows 0..i_max of the signed Stirling-1 triangle."""
    rows = [[1]]
    for i in range(1, i_max + 1):
        prev = rows[i - 1]
        row = [0] * (i + 1)
        for j in range(1, i + 1):
            row[j] = prev[j - 1] - (i - 1) * (prev[j] if j <= i - 1 else 0)
        rows.append(row)
    return rows


def stirling1(i: int, j: int) -> int:
    """Signed Stirling number of the first kind s(i, j)."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    if j > i:
        return 0
    return stirling1_triangle(i)[i][j]


def msn1(i: int, j: int, k: RationalLike) -> Fraction:
    """c(i, j, k) from its defining sum over the Stirling-1 triangle."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    k = as_rational(k)
    srow = stirling1_triangle(i)[i]
    total = Fraction(0)
    for r in range(j, i + 1):
        total += binom(r, j) * qpow(-k, r - j) * srow[r]
    return total


class Msn1Table:
    """Triangles of s(i, j) and c(i, j, k) for one fixed k, up to i_max."""

    __slots__ = ("k", "i_max", "s_values", "c_values")

    def __init__(self, k: RationalLike, i_max: int):
        self.k = as_rational(k)
        self.i_max = i_max
        self.s_values = stirling1_triangle(i_max)
        self.c_values = [
            [msn1(i, j, self.k) for j in range(i + 1)] for i in range(i_max + 1)
        ]

    def s(self, i: int, j: int) -> int:
        return self.s_values[i][j] if j <= i else 0

    def c(self, i: int, j: int) -> Fraction:
        return self.c_values[i][j] if j <= i else Fraction(0)


def msn1_table(i_max: int, k: RationalLike) -> Msn1Table:
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    return Msn1Table(k, i_max)


def inversion_product(i: int, j: int, k1: RationalLike, k2: RationalLike) -> Fraction:
    """sum_{r=j}^{i} b(i, r, k1) * c(r, j, k2) / r!.

    Contract: equals C(i, j) * (k1 - k2)**(i - j), so at k1 == k2 the b and c
    triangles (scaled by 1/r!) are mutually inverse lower-triangular matrices.
    """
    if not 0 <= j <= i:
        raise ValueError(f"need 0 <= j <= i, got i={i}, j={j}")
    k1 = as_rational(k1)
    k2 = as_rational(k2)
    btab = msn_table(i, k1)
    total = Fraction(0)
    for r in range(j, i + 1):
        total += btab.value(i, r) * msn1(r, j, k2) / math.factorial(r)
    return total
