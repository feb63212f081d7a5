"""Exact dense matrix arithmetic over rationals, and partitioned chains.

Matrices are immutable, dense, and small (the intended use is transition
matrices of a handful of states).  Inversion uses fraction-free (Bareiss)
forward elimination on an integer-scaled copy, which keeps intermediate
growth polynomial instead of letting denominators compound, followed by an
exact rational back-substitution.

:class:`PartitionedChain` is a stochastic matrix split by a state subset M
into the four blocks P_M, P_MN, P_NM, P_N (N denotes the complement of M
throughout the code), together with the products Q = P_NM @ P_MN and
Qbar = P_MN @ P_NM and the constant block row sums when those exist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exact import RationalLike, as_rational, format_rational


class SingularMatrixError(ValueError):
    """Raised when elimination finds no nonzero pivot in some column."""

    def __init__(self, pivot_col: int):
        self.pivot_col = pivot_col
        super().__init__(f"matrix is singular (no pivot in column {pivot_col})")


class ChainError(ValueError):
    """Invalid stochastic matrix or partition."""


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_data: Sequence[Sequence[RationalLike]]):
        data = tuple(tuple(as_rational(v) for v in row) for row in rows_data)
        if not data or not data[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows have inconsistent lengths")
        self.rows = len(data)
        self.cols = width
        self.entries = data

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def ones_column(cls, n: int) -> "RationalMatrix":
        return cls([[1] for _ in range(n)])

    @classmethod
    def row_vector(cls, values: Sequence[RationalLike]) -> "RationalMatrix":
        return cls([list(values)])

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(v) for v in row] for row in self.entries]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __mul__(self, scalar) -> "RationalMatrix":
        s = as_rational(scalar)
        return RationalMatrix([[s * v for v in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        ot = list(zip(*other.entries))
        return RationalMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                for row in self.entries
            ]
        )

    def __pow__(self, n: int) -> "RationalMatrix":
        if not self.is_square:
            raise ValueError("matrix power needs a square matrix")
        if n < 0:
            raise ValueError("negative powers: invert first")
        result = RationalMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.entries)))

    def row_sums(self) -> list[Fraction]:
        return [sum(row) for row in self.entries]

    def _same_shape(self, other: "RationalMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def inverse(self) -> "RationalMatrix":
        """Exact inverse via fraction-free elimination.

        The matrix is scaled to integers, reduced to upper-triangular form by
        Bareiss two-term updates (each exact integer division by the previous
        pivot), and finished by rational back-substitution on the augmented
        identity.  Pivoting swaps in the first row with a nonzero entry.
        """
        if not self.is_square:
            raise ValueError("inverse needs a square matrix")
        n = self.rows
        scale = lcm(*(v.denominator for row in self.entries for v in row))
        aug = [
            [int(v * scale) for v in row] + [0] * n for row in self.entries
        ]
        for i in range(n):
            aug[i][n + i] = 1

        prev = 1
        for col in range(n):
            pivot_row = next(
                (r for r in range(col, n) if aug[r][col] != 0), None
            )
            if pivot_row is None:
                raise SingularMatrixError(col)
            if pivot_row != col:
                aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            p = aug[col][col]
            for r in range(col + 1, n):
                f = aug[r][col]
                row_r, row_c = aug[r], aug[col]
                for x in range(col + 1, 2 * n):
                    row_r[x] = (p * row_r[x] - f * row_c[x]) // prev
                row_r[col] = 0
            prev = p

        # back-substitution over exact rationals
        inv_rows: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n - 1, -1, -1):
            for j in range(n):
                acc = Fraction(aug[i][n + j])
                for t in range(i + 1, n):
                    acc -= aug[i][t] * inv_rows[t][j]
                inv_rows[i][j] = acc / aug[i][i]
        return RationalMatrix(inv_rows) * scale

    def __repr__(self):
        body = "; ".join(
            " ".join(format_rational(v) for v in row) for row in self.entries
        )
        return f"RationalMatrix[{body}]"


def mat_inverse(matrix: RationalMatrix) -> RationalMatrix:
    return matrix.inverse()


def _constant_row_sum(block: RationalMatrix) -> Fraction | None:
    sums = block.row_sums()
    first = sums[0]
    return first if all(s == first for s in sums) else None


@dataclass(frozen=True)
class PartitionedChain:
    """Stochastic matrix split by a 1-based index set M.

    ``q = p_nm @ p_mn`` and ``q_bar = p_mn @ p_nm``; ``s_m`` / ``s_n`` are the
    common row sums of the diagonal blocks when all rows agree, else None.
    """

    p: RationalMatrix
    m_indices: tuple[int, ...]
    n_indices: tuple[int, ...]
    p_m: RationalMatrix
    p_mn: RationalMatrix
    p_nm: RationalMatrix
    p_n: RationalMatrix
    q: RationalMatrix
    q_bar: RationalMatrix
    s_m: Fraction | None
    s_n: Fraction | None
    _swapped_cache: list = field(default_factory=list, repr=False, compare=False)

    @property
    def size(self) -> int:
        return self.p.rows

    def swapped(self) -> "PartitionedChain":
        """The same matrix partitioned by the complement of M.

        Requires I - P_N invertible, since that block becomes the new P_M.
        """
        if not self._swapped_cache:
            self._swapped_cache.append(partition(self.p, self.n_indices))
        return self._swapped_cache[0]


def partition(p: RationalMatrix, m_indices: Sequence[int]) -> PartitionedChain:
    """Validate a stochastic matrix and split it by the 1-based set M.

    Rejects non-square or non-stochastic input (naming the offending row),
    empty M or complement, out-of-range indices, and matrices for which
    I - P_M is singular.
    """
    if not p.is_square:
        raise ChainError(f"transition matrix must be square, got {p.rows}x{p.cols}")
    n = p.rows
    for idx, row in enumerate(p.entries):
        if any(v < 0 or v > 1 for v in row):
            raise ChainError(f"row {idx + 1} has an entry outside [0, 1]")
        total = sum(row)
        if total != 1:
            raise ChainError(
                f"row {idx + 1} sums to {format_rational(total)}, expected 1"
            )
    m_set = sorted(set(m_indices))
    if any(not 1 <= i <= n for i in m_set):
        raise ChainError(f"M indices out of range 1..{n}: {list(m_indices)}")
    if not m_set:
        raise ChainError("M must be nonempty")
    if len(m_set) == n:
        raise ChainError("complement of M must be nonempty")
    n_set = [i for i in range(1, n + 1) if i not in m_set]

    def block(row_idx, col_idx):
        return RationalMatrix(
            [[p.entries[i - 1][j - 1] for j in col_idx] for i in row_idx]
        )

    p_m = block(m_set, m_set)
    p_mn = block(m_set, n_set)
    p_nm = block(n_set, m_set)
    p_n = block(n_set, n_set)

    try:
        (RationalMatrix.identity(p_m.rows) - p_m).inverse()
    except SingularMatrixError as exc:
        raise ChainError("I - P_M is singular; no passage moments exist") from exc

    return PartitionedChain(
        p=p,
        m_indices=tuple(m_set),
        n_indices=tuple(n_set),
        p_m=p_m,
        p_mn=p_mn,
        p_nm=p_nm,
        p_n=p_n,
        q=p_nm @ p_mn,
        q_bar=p_mn @ p_nm,
        s_m=_constant_row_sum(p_m),
        s_n=_constant_row_sum(p_n),
    )


def is_commutable(chain: PartitionedChain, side: str) -> bool:
    """Whether the round-trip blocks commute with all powers of the diagonal block.

    Side "M": P_MN @ P_N^s @ P_NM commutes with P_M^r for all r, s >= 0; side
    "Mbar" is the mirror statement.  Checking r < |M| and s < |N| is exact,
    not a truncation: by Cayley-Hamilton every higher power of a d x d block
    is a linear combination of the first d powers.
    """
    if side == "M":
        inner, outer, lift, drop = chain.p_n, chain.p_m, chain.p_mn, chain.p_nm
    elif side in ("Mbar", "N"):
        inner, outer, lift, drop = chain.p_m, chain.p_n, chain.p_nm, chain.p_mn
    else:
        raise ValueError(f"side must be 'M' or 'Mbar', got {side!r}")
    inner_pows = _powers(inner, inner.rows)
    outer_pows = _powers(outer, outer.rows)
    for s_pow in inner_pows:
        round_trip = lift @ s_pow @ drop
        for r_pow in outer_pows:
            if round_trip @ r_pow != r_pow @ round_trip:
                return False
    return True


def _powers(matrix: RationalMatrix, count: int) -> list[RationalMatrix]:
    pows = [RationalMatrix.identity(matrix.rows)]
    for _ in range(count - 1):
        pows.append(pows[-1] @ matrix)
    return pows


def chain_from_dict(obj: dict) -> PartitionedChain:
    """Build a chain from the JSON schema {"P": [["1/2", ...], ...], "M": [1]}."""
    if "P" not in obj or "M" not in obj:
        raise ChainError('chain JSON needs keys "P" and "M"')
    matrix = RationalMatrix(obj["P"])
    return partition(matrix, [int(i) for i in obj["M"]])


def chain_from_json(path: str) -> PartitionedChain:
    with open(path, "r", encoding="utf-8") as fh:
        return chain_from_dict(json.load(fh))
