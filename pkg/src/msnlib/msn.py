"""Moment-generating Stirling numbers of the second kind.

The family computed here is

    b(i, j, k) = sum_{r=0}^{j} C(j, r) * (-1)**(j-r) * (r + k)**i

for integers i, j >= 0 and rational k, with 0**0 == 1.  At k == 0 the slice
``b(i, j, 0)`` equals ``S(i, j) * j!`` with the classical Stirling numbers of
the second kind, which is why no division by j! is built into the family: the
moment formulas downstream stay free of factorials this way.

Three independent computation routes are provided: the defining sum
(:func:`msn_direct`), a recurrence-filled triangle (:func:`msn_table`), and
the shift formula over the k == 0 slice (:func:`msn_shift`), so each can
serve as a cross-check for the others.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import RationalLike, as_rational, binom, qpow


def msn_direct(i: int, j: int, k: RationalLike) -> Fraction:
    """b(i, j, k) straight from the defining alternating sum."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    k = as_rational(k)
    total = Fraction(0)
    for r in range(j + 1):
        sign = -1 if (j - r) % 2 else 1
        total += sign * binom(j, r) * qpow(r + k, i)
    return total


class MsnTable:
    """Dense triangle of b(i, j, k) values for one fixed k.

    Entries are stored for 0 <= i <= i_max, 0 <= j <= min(i, j_max); the
    triangle is zero for i < j, and queries beyond j_max return 0 without
    error.  Instances are immutable after construction.
    """

    __slots__ = ("k", "i_max", "j_max", "_rows")

    def __init__(self, k: Fraction, i_max: int, j_max: int, rows: tuple):
        self.k = k
        self.i_max = i_max
        self.j_max = j_max
        self._rows = rows

    def value(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            raise ValueError("indices must be nonnegative")
        if i > self.i_max:
            raise IndexError(f"row {i} beyond table size {self.i_max}")
        if j > min(i, self.j_max):
            return Fraction(0)
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        if i > self.i_max:
            raise IndexError(f"row {i} beyond table size {self.i_max}")
        return self._rows[i]

    def __repr__(self):
        return f"MsnTable(k={self.k}, i_max={self.i_max}, j_max={self.j_max})"


def msn_table(i_max: int, k: RationalLike, j_max: int | None = None) -> MsnTable:
    """Build the triangle by recurrence.

    Base column b(i, 0, k) = k**i and base row b(0, j, k) = [j == 0]; interior
    entries come from b(i+1, j+1, k) = (j+1)*b(i, j, k) + (j+1+k)*b(i, j+1, k).
    This is quadratically cheaper than evaluating the defining sum per entry
    and exercises a different code path than :func:`msn_direct`.
    """
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    k = as_rational(k)
    if j_max is None:
        j_max = i_max
    zero = Fraction(0)
    rows = [[Fraction(1)]]
    for i in range(1, i_max + 1):
        prev = rows[i - 1]
        width = min(i, j_max)
        row = [qpow(k, i)]
        for j in range(1, width + 1):
            above_left = prev[j - 1]
            above = prev[j] if j < len(prev) else zero
            row.append(j * above_left + (j + k) * above)
        rows.append(row)
    return MsnTable(k, i_max, j_max, tuple(tuple(r) for r in rows))


def msn_shift(i: int, j: int, k: int) -> Fraction:
    """b(i, j, k) for integer k >= 0 via the k == 0 slice.

    Uses b(i, j, k) = sum_{r=0}^{k} C(k, r) * b(i, j+r, 0).
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"shift route requires integer k, got {k!r}")
    if k < 0:
        raise ValueError(f"shift route requires k >= 0, got {k}")
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    base = msn_table(i, Fraction(0))
    total = Fraction(0)
    for r in range(k + 1):
        if j + r > i:
            break
        total += binom(k, r) * base.value(i, j + r)
    return total


def stirling2_triangle(i_max: int) -> list[list[int]]:
    """Classical Stirling-2 triangle S(i, j) via S(i+1, j) = S(i, j-1) + j*S(i, j).

    Built independently of the b family so the two can be checked against
    each other.
    """
    rows = [[1]]
    for i in range(1, i_max + 1):
        prev = rows[i - 1]
        row = [0] * (i + 1)
        for j in range(1, i + 1):
            row[j] = prev[j - 1] + (j * prev[j] if j <= i - 1 else 0)
        rows.append(row)
    return rows


def stirling2(i: int, j: int) -> int:
    """Stirling number of the second kind S(i, j); equals b(i, j, 0) / j!."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    if j > i:
        return 0
    return stirling2_triangle(i)[i][j]


def surjection_count(i: int, j: int, k: int) -> int:
    """Brute-force count of functions {1..i} -> {1..j+k} hitting all of {1..j}.

    Enumerates every one of the (j+k)**i functions explicitly (as base-(j+k)
    digit vectors) and keeps those whose image covers the first j boxes.  For
    integer k >= 0 this count equals b(i, j, k); the enumeration is the
    independent combinatorial oracle for that fact.
    """
    import numpy as np

    if k < 0:
        raise ValueError("combinatorial count needs integer k >= 0")
    boxes = j + k
    if boxes == 0:
        return 1 if i == 0 else 0
    if i == 0:
        return 1 if j == 0 else 0
    total = boxes**i
    codes = np.arange(total, dtype=np.int64)
    digits = (codes[:, None] // boxes ** np.arange(i, dtype=np.int64)) % boxes
    covered = np.ones(total, dtype=bool)
    for box in range(j):
        covered &= (digits == box).any(axis=1)
    return int(covered.sum())
