"""Shared chain builders for the test suite.

All randomized chains are drawn from seeded ``random.Random`` instances so
every run sees the same matrices.  Entries are kept strictly positive with
denominator 12 unless a construction needs otherwise, which guarantees both
diagonal blocks are strictly substochastic (their resolvents exist).
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from msnlib import PartitionedChain, RationalMatrix, partition


def positive_composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Split `total` into `parts` strictly positive integers, uniformly at random."""
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    bounds = [0] + cuts + [total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_chain(
    rng: random.Random, m_size: int, n_size: int, denom: int = 12
) -> PartitionedChain:
    """A fully positive stochastic matrix split as (m_size, n_size)."""
    size = m_size + n_size
    assert size < denom
    rows = [
        [Fraction(x, denom) for x in positive_composition(rng, denom, size)]
        for _ in range(size)
    ]
    return partition(RationalMatrix(rows), list(range(1, m_size + 1)))


def scalar_block_chain(
    rng: random.Random, m_size: int, n_size: int, denom: int = 12
) -> PartitionedChain:
    """Both diagonal blocks are scalar multiples of I, so the chain is
    commutable on both sides whatever the off-diagonal blocks are."""
    p_num = rng.randint(1, denom - n_size)
    q_num = rng.randint(1, denom - m_size)
    rows = []
    for i in range(m_size):
        off = positive_composition(rng, denom - p_num, n_size)
        row = [Fraction(p_num if j == i else 0, denom) for j in range(m_size)]
        row += [Fraction(x, denom) for x in off]
        rows.append(row)
    for i in range(n_size):
        off = positive_composition(rng, denom - q_num, m_size)
        row = [Fraction(x, denom) for x in off]
        row += [Fraction(q_num if j == i else 0, denom) for j in range(n_size)]
        rows.append(row)
    return partition(RationalMatrix(rows), list(range(1, m_size + 1)))


def rowsum_chain(
    rng: random.Random, n_size: int, denom: int = 12
) -> PartitionedChain:
    """|M| = 1 and P_N with constant row sums (hypothesis of the scalar
    recurrence form)."""
    p_num = rng.randint(n_size, denom - 1)
    s_num = rng.randint(0, denom - n_size)
    rows = [[Fraction(denom - p_num, denom)] + [
        Fraction(x, denom) for x in positive_composition(rng, p_num, n_size)
    ]]
    for _ in range(n_size):
        inner = (
            positive_composition(rng, s_num, n_size)
            if s_num >= n_size
            else ([s_num] + [0] * (n_size - 1) if n_size else [])
        )
        rng.shuffle(inner)
        back = positive_composition(rng, denom - s_num, 1)
        rows.append(
            [Fraction(back[0], denom)] + [Fraction(x, denom) for x in inner]
        )
    return partition(RationalMatrix(rows), [1])


def renewal_chain(
    rng: random.Random, m_size: int, denom: int = 12, absorbing_loop: bool = False
) -> PartitionedChain:
    """|Mbar| = 1 with P_Mbar = (q) and constant row sums in P_M.

    absorbing_loop=False gives q = 0 (the renewal hypothesis); True draws a
    positive q (the alternating passage-time hypothesis).
    """
    s_num = rng.randint(1, denom - 1)
    q_num = rng.randint(1, denom - m_size) if absorbing_loop else 0
    rows = []
    for _ in range(m_size):
        inner = positive_composition(rng, s_num, m_size) if s_num >= m_size else None
        if inner is None:
            inner = [s_num] + [0] * (m_size - 1)
            rng.shuffle(inner)
        rows.append([Fraction(x, denom) for x in inner] + [Fraction(denom - s_num, denom)])
    back = positive_composition(rng, denom - q_num, m_size)
    rows.append([Fraction(x, denom) for x in back] + [Fraction(q_num, denom)])
    return partition(RationalMatrix(rows), list(range(1, m_size + 1)))


def anb_chain(p: Fraction, q: Fraction) -> PartitionedChain:
    """The 2-state chain behind the alternating trial count."""
    return partition(
        RationalMatrix([[1 - p, p], [1 - q, q]]), [1]
    )


@pytest.fixture
def two_state_chain() -> PartitionedChain:
    """The reference chain [[1/2, 1/2], [2/3, 1/3]] with M = {1}."""
    return anb_chain(Fraction(1, 2), Fraction(1, 3))
