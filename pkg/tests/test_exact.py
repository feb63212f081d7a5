from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from msnlib.exact import (
    as_rational,
    binom,
    binom_gen,
    compositions,
    format_rational,
    multinom,
    qpow,
)


class TestQpow:
    def test_zero_to_zero_is_one(self):
        assert qpow(0, 0) == 1

    def test_sign(self):
        assert qpow(-1, 1) == -1

    def test_rational_base(self):
        assert qpow(Fraction(3, 2), 3) == Fraction(27, 8)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            qpow(2, -1)


class TestBinom:
    def test_standard(self):
        assert binom(5, 2) == 10

    def test_out_of_range(self):
        assert binom(3, 5) == 0
        assert binom(3, -1) == 0

    def test_negative_upper(self):
        # falling-factorial extension
        assert binom(-1, 2) == 1
        assert binom(-1, 0) == 1
        assert binom(-2, 3) == -4

    def test_pascal(self):
        for n in range(1, 31):
            for r in range(n + 1):
                assert binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r)


class TestBinomGen:
    def test_half(self):
        assert binom_gen(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_empty_product(self):
        for x in (0, 5, Fraction(-7, 3)):
            assert binom_gen(x, 0) == 1

    def test_agrees_with_integer_binom(self):
        assert binom_gen(4, 2) == 6
        for x in range(13):
            for j in range(13):
                assert binom_gen(x, j) == binom(x, j)


class TestMultinom:
    def test_basic(self):
        assert multinom(4, [2, 1, 1]) == 12

    def test_empty(self):
        assert multinom(0, []) == 1

    def test_single_part(self):
        assert multinom(3, [3]) == 1

    def test_bad_sum_rejected(self):
        with pytest.raises(ValueError):
            multinom(4, [2, 1])

    def test_matches_composition_count(self):
        # sum of multinomials over all compositions of i into t parts is t**i
        for t in (2, 3):
            for i in range(6):
                total = sum(multinom(i, parts) for parts in compositions(i, t))
                assert total == t**i


class TestRationalParsing:
    def test_round_trip_strings(self):
        for text in ("-3/7", "5", "0", "12/5"):
            assert format_rational(as_rational(text)) == text

    def test_integer_formatting(self):
        assert format_rational(Fraction(6, 3)) == "2"

    def test_decimal_rejected(self):
        with pytest.raises(ValueError):
            as_rational("0.5")

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)


@given(
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
    st.integers(-10**6, 10**6),
    st.integers(1, 10**6),
)
def test_rational_arithmetic_round_trips(a, b, c, d):
    x = Fraction(a, b)
    y = Fraction(c, d)
    assert (x + y) - y == x
    assert x.denominator > 0


@given(st.fractions(), st.integers(0, 8))
def test_binom_gen_degree(x, j):
    # a polynomial identity: C(x, j) * j = C(x, j-1) * (x - j + 1) for j >= 1
    if j >= 1:
        assert binom_gen(x, j) * j == binom_gen(x, j - 1) * (x - j + 1)
