import random
from fractions import Fraction

import pytest

from conftest import random_chain, scalar_block_chain
from msnlib.linalg import (
    ChainError,
    RationalMatrix,
    SingularMatrixError,
    chain_from_dict,
    is_commutable,
    mat_inverse,
    partition,
)


class TestInverse:
    def test_identity(self):
        assert mat_inverse(RationalMatrix([[1]])) == RationalMatrix([[1]])

    def test_scalar(self):
        assert mat_inverse(RationalMatrix([[Fraction(1, 2)]])) == RationalMatrix([[2]])

    def test_singular_reports_column(self):
        with pytest.raises(SingularMatrixError) as err:
            mat_inverse(RationalMatrix([[1, 1], [1, 1]]))
        assert err.value.pivot_col == 1

    def test_needs_pivot_swap(self):
        m = RationalMatrix([[0, 1], [1, 0]])
        assert mat_inverse(m) == m

    def test_random_round_trip(self):
        rng = random.Random(20240917)
        produced = 0
        while produced < 25:
            n = rng.randint(1, 6)
            m = RationalMatrix(
                [
                    [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
                    for _ in range(n)
                ]
            )
            try:
                inv = mat_inverse(m)
            except SingularMatrixError:
                continue
            produced += 1
            assert m @ inv == RationalMatrix.identity(n)
            assert inv @ m == RationalMatrix.identity(n)


class TestMatrixOps:
    def test_power(self):
        m = RationalMatrix([[1, 1], [0, 1]])
        assert (m**5)[0, 1] == 5
        assert m**0 == RationalMatrix.identity(2)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            RationalMatrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            RationalMatrix([[1]]) @ RationalMatrix([[1, 2], [3, 4]])

    def test_scalar_mul_and_add(self):
        m = RationalMatrix([[1, 2], [3, 4]])
        assert (Fraction(1, 2) * m + m * Fraction(1, 2)) == m

    def test_entries_are_exact(self):
        m = RationalMatrix([["1/3", "2/3"]])
        assert m[0, 0] + m[0, 1] == 1


class TestPartition:
    def test_two_state_blocks(self, two_state_chain):
        c = two_state_chain
        assert c.p_m == RationalMatrix([[Fraction(1, 2)]])
        assert c.p_mn == RationalMatrix([[Fraction(1, 2)]])
        assert c.p_nm == RationalMatrix([[Fraction(2, 3)]])
        assert c.p_n == RationalMatrix([[Fraction(1, 3)]])
        assert c.s_m == Fraction(1, 2)
        assert c.s_n == Fraction(1, 3)
        assert c.q == RationalMatrix([[Fraction(1, 3)]])
        assert c.q_bar == RationalMatrix([[Fraction(1, 3)]])

    def test_absorbing_state_rejected(self):
        with pytest.raises(ChainError, match="singular"):
            partition(RationalMatrix.identity(2), [1])

    def test_bad_row_sum_named(self):
        bad = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [0, 1]])
        with pytest.raises(ChainError, match="row 1 sums to 5/6"):
            partition(bad, [1])

    def test_entry_out_of_range(self):
        bad = RationalMatrix([[Fraction(3, 2), Fraction(-1, 2)], [0, 1]])
        with pytest.raises(ChainError, match="row 1"):
            partition(bad, [1])

    def test_empty_or_full_m_rejected(self):
        p = RationalMatrix([[Fraction(1, 2), Fraction(1, 2)]] * 2)
        with pytest.raises(ChainError):
            partition(p, [])
        with pytest.raises(ChainError):
            partition(p, [1, 2])

    def test_reassembly(self):
        rng = random.Random(7)
        for _ in range(10):
            m_size = rng.randint(1, 3)
            n_size = rng.randint(1, 3)
            c = random_chain(rng, m_size, n_size)
            for bi, gi in enumerate(c.m_indices):
                for bj, gj in enumerate(c.m_indices):
                    assert c.p_m[bi, bj] == c.p[gi - 1, gj - 1]
                for bj, gj in enumerate(c.n_indices):
                    assert c.p_mn[bi, bj] == c.p[gi - 1, gj - 1]
            for bi, gi in enumerate(c.n_indices):
                for bj, gj in enumerate(c.m_indices):
                    assert c.p_nm[bi, bj] == c.p[gi - 1, gj - 1]
                for bj, gj in enumerate(c.n_indices):
                    assert c.p_n[bi, bj] == c.p[gi - 1, gj - 1]

    def test_noncontiguous_m(self):
        rng = random.Random(11)
        c = random_chain(rng, 2, 2)
        shuffled = partition(c.p, [1, 3])
        assert shuffled.m_indices == (1, 3)
        assert shuffled.p_m[0, 1] == c.p[0, 2]

    def test_swapped_roles(self, two_state_chain):
        sw = two_state_chain.swapped()
        assert sw.p_m == two_state_chain.p_n
        assert sw.p_mn == two_state_chain.p_nm
        assert sw.swapped().p_m == two_state_chain.p_m

    def test_json_schema(self):
        c = chain_from_dict({"P": [["1/2", "1/2"], ["2/3", "1/3"]], "M": [1]})
        assert c.p_m[0, 0] == Fraction(1, 2)
        with pytest.raises(ChainError):
            chain_from_dict({"P": [["1"]]})


def _brute_commutable(chain, side, r_max, s_max):
    if side == "M":
        inner, outer, lift, drop = chain.p_n, chain.p_m, chain.p_mn, chain.p_nm
    else:
        inner, outer, lift, drop = chain.p_m, chain.p_n, chain.p_nm, chain.p_mn
    for s in range(s_max + 1):
        w = lift @ inner**s @ drop
        for r in range(r_max + 1):
            if w @ outer**r != outer**r @ w:
                return False
    return True


class TestCommutability:
    def test_single_state_m_side(self, two_state_chain):
        assert is_commutable(two_state_chain, "M")

    def test_scalar_diagonal_blocks(self):
        rng = random.Random(3)
        c = scalar_block_chain(rng, 2, 2)
        assert is_commutable(c, "M")
        assert is_commutable(c, "Mbar")

    def test_non_commuting_blocks(self):
        # P_M has distinct diagonal entries while Q = P_NM @ P_MN is dense,
        # so P_M Q != Q P_M
        p = RationalMatrix(
            [
                [Fraction(1, 2), 0, Fraction(1, 4), Fraction(1, 4)],
                [0, Fraction(1, 8), Fraction(1, 2), Fraction(3, 8)],
                [Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 4)],
                [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8)],
            ]
        )
        c = partition(p, [1, 2])
        assert not is_commutable(c, "M")
        assert not _brute_commutable(c, "M", 8, 8)

    def test_finite_check_matches_brute_force(self):
        rng = random.Random(123)
        for _ in range(12):
            m_size = rng.randint(1, 3)
            n_size = rng.randint(1, 3)
            c = (
                scalar_block_chain(rng, m_size, n_size)
                if rng.random() < 0.5
                else random_chain(rng, m_size, n_size)
            )
            dim = c.size
            for side in ("M", "Mbar"):
                assert is_commutable(c, side) == _brute_commutable(
                    c, side, 2 * dim, 2 * dim
                )

    def test_bad_side_rejected(self, two_state_chain):
        with pytest.raises(ValueError):
            is_commutable(two_state_chain, "X")
