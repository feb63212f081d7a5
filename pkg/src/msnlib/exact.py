"""Exact scalar arithmetic and combinatorial primitives.

Every quantity in this library except the Monte Carlo estimates is an exact
rational.  ``Rational`` is the standard-library :class:`fractions.Fraction`,
which already guarantees a positive canonical denominator and gcd-reduced
representation after every operation.  This module adds the combinatorial
building blocks the rest of the package is written in terms of: integer
powers with the ``0**0 == 1`` convention, binomial coefficients extended to
negative upper arguments, the generalized (rational upper argument) binomial,
and multinomial coefficients.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or string like ``"-3/7"`` to an exact Fraction.

    Decimal notation is rejected deliberately: accepting it would force a
    rounding policy, and this library performs no rounding anywhere.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render as ``"num/den"``, or plain ``"n"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def qpow(base: RationalLike, exp: int) -> Fraction:
    """``base ** exp`` for exp >= 0, with ``qpow(0, 0) == 1``."""
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return as_rational(base) ** exp


def binom(n: int, r: int) -> int:
    """Binomial coefficient, extended beyond the classical triangle.

    * 0 <= r <= n: the usual value.
    * r < 0, or r > n >= 0: zero.
    * n < 0, r >= 0: ``(-1)**r * binom(r - n - 1, r)``, the unique polynomial
      (falling factorial) extension in the upper argument.
    """
    if r < 0:
        return 0
    if n < 0:
        sign = -1 if r % 2 else 1
        return sign * math.comb(r - n - 1, r)
    if r > n:
        return 0
    return math.comb(n, r)


def binom_gen(x: RationalLike, j: int) -> Fraction:
    """Generalized binomial ``x*(x-1)*...*(x-j+1) / j!`` for rational x."""
    if j < 0:
        raise ValueError(f"lower index must be nonnegative, got {j}")
    x = as_rational(x)
    num = Fraction(1)
    for t in range(j):
        num *= x - t
    return num / math.factorial(j)


def multinom(i: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient ``i! / (parts[0]! * ... * parts[-1]!)``."""
    if i < 0:
        raise ValueError(f"total must be nonnegative, got {i}")
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative, got {list(parts)}")
    if sum(parts) != i:
        raise ValueError(f"parts {list(parts)} do not sum to {i}")
    result = math.factorial(i)
    for p in parts:
        result //= math.factorial(p)
    return result


def compositions(total: int, count: int, positive_prefix: int = 0) -> Iterable[tuple[int, ...]]:
    """All tuples of `count` nonnegative ints summing to `total`.

    The first `positive_prefix` entries are required to be >= 1.
    """
    if count == 0:
        if total == 0:
            yield ()
        return

    def rec(remaining: int, slots: int, need_positive: int):
        if slots == 1:
            if remaining >= (1 if need_positive > 0 else 0):
                yield (remaining,)
            return
        low = 1 if need_positive > 0 else 0
        for first in range(low, remaining + 1):
            for rest in rec(remaining - first, slots - 1, max(need_positive - 1, 0)):
                yield (first,) + rest

    yield from rec(total, count, positive_prefix)
