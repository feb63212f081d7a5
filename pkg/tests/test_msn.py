import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msnlib.exact import qpow
from msnlib.msn import (
    msn_direct,
    msn_shift,
    msn_table,
    stirling2,
    stirling2_triangle,
    surjection_count,
)

K_SAMPLE = [Fraction(v) for v in (-5, -3, -1)] + [
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 3),
    Fraction(1),
    Fraction(2),
    Fraction(5),
]


class TestDirect:
    def test_single_box_negative_k(self):
        assert msn_direct(1, 0, -1) == -1

    def test_diagonal_is_factorial(self):
        assert msn_direct(4, 4, 7) == 24

    def test_brute_force_sum(self):
        # 1*1^3 - 2*2^3 + 1*3^3 = 12, and 3*b(3,2,1) = b(4,3,0) = 36
        assert msn_direct(3, 2, 1) == 12
        assert 3 * msn_direct(3, 2, 1) == msn_direct(4, 3, 0) == 36

    def test_base_row_and_column(self):
        for k in K_SAMPLE:
            assert msn_direct(0, 0, k) == 1
            for j in range(1, 6):
                assert msn_direct(0, j, k) == 0
            for i in range(6):
                assert msn_direct(i, 0, k) == qpow(k, i)


class TestTable:
    def test_row_matches_stirling_triangle(self):
        tab = msn_table(3, 0)
        assert [tab.value(3, j) for j in range(4)] == [0, 1, 6, 6]

    def test_single_entry(self):
        tab = msn_table(0, Fraction(5, 7))
        assert tab.value(0, 0) == 1

    def test_entry_2_1_at_k3(self):
        assert msn_table(2, 3).value(2, 1) == (3 + 1) ** 2 - 3**2 == 7

    def test_agrees_with_direct(self):
        for k in K_SAMPLE:
            tab = msn_table(9, k)
            for i in range(10):
                for j in range(10):
                    assert tab.value(i, j) == msn_direct(i, j, k)

    def test_queries_beyond_jmax_return_zero(self):
        tab = msn_table(4, 1, j_max=2)
        assert tab.value(4, 3) == 0
        assert tab.value(2, 4) == 0

    def test_row_beyond_imax_raises(self):
        with pytest.raises(IndexError):
            msn_table(3, 1).value(4, 0)

    def test_zero_above_diagonal_and_factorial_diagonal(self):
        for k in K_SAMPLE:
            tab = msn_table(8, k)
            for i in range(9):
                assert tab.value(i, i) == math.factorial(i)
                for j in range(i + 1, 9):
                    assert tab.value(i, j) == 0


class TestShiftRoute:
    def test_example(self):
        # b(3,2,0) + b(3,3,0) = 6 + 6
        assert msn_shift(3, 2, 1) == 12

    def test_k0_slice(self):
        for i in range(6):
            assert msn_shift(i, 0, 0) == (1 if i == 0 else 0)

    def test_agrees_with_direct(self):
        assert msn_shift(2, 1, 3) == msn_direct(2, 1, 3) == 7
        for k in range(6):
            for i in range(9):
                for j in range(9):
                    assert msn_shift(i, j, k) == msn_direct(i, j, k)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            msn_shift(2, 1, -1)
        with pytest.raises(ValueError):
            msn_shift(2, 1, Fraction(1, 2))


class TestStirling2:
    def test_values(self):
        assert stirling2(3, 2) == 3
        assert stirling2(5, 5) == 1
        assert stirling2(2, 3) == 0

    def test_triangle_recurrence(self):
        tri = stirling2_triangle(12)
        for i in range(1, 12):
            for j in range(1, i + 1):
                above = tri[i][j] if j <= i else 0
                assert tri[i + 1][j] == tri[i][j - 1] + j * above

    def test_k0_slice_is_scaled_stirling(self):
        for i in range(10):
            for j in range(10):
                assert msn_direct(i, j, 0) == stirling2(i, j) * math.factorial(j)


class TestSurjectionOracle:
    def test_matches_algebra(self):
        assert surjection_count(3, 2, 1) == msn_direct(3, 2, 1) == 12

    def test_no_boxes(self):
        assert surjection_count(0, 0, 0) == 1
        assert surjection_count(2, 0, 0) == 0

    def test_pure_count_without_constraint(self):
        # j = 0 leaves all (k)^i functions admissible
        assert surjection_count(3, 0, 4) == 64


@settings(max_examples=60, deadline=None)
@given(
    st.integers(0, 8),
    st.integers(0, 8),
    st.fractions(min_value=0, max_value=6, max_denominator=8),
)
def test_nonnegative_for_nonnegative_k(i, j, k):
    assert msn_direct(i, j, k) >= 0


@settings(max_examples=60, deadline=None)
@given(
    st.integers(0, 9),
    st.integers(0, 9),
    st.fractions(min_value=-6, max_value=6, max_denominator=8),
)
def test_one_step_shift_recurrence(i, j, k):
    assert msn_direct(i, j, k + 1) == msn_direct(i, j, k) + msn_direct(i, j + 1, k)
