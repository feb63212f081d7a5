"""Distributions and moments of passage and recurrence times of a DTMC.

For a chain partitioned by a state set M (complement N), started in M:

* ``N_k`` is the step count until the k-th visit to N,
* ``R_k`` is the step count until the k-th return to M,

and the barred variants (start in N, roles swapped).  Distribution values
are |M| x |N| (passage) or |M| x |M| (recurrence) matrices of exact
probabilities; the m-th moment of such a matrix variable is the entrywise
sum  M_m = sum_n n**m P(. = n), again an exact matrix.

Two independent computation routes exist for every moment:

* the recursive route (:func:`moment_recursive`, :func:`moment_k_convolved`)
  which only uses first-step analysis and moment convolution, and
* closed forms whose coefficients are the b family of :mod:`msnlib.msn`
  (:func:`moment_n1_closed`, :func:`moment_r1_closed`, and the commutable /
  constant-row-sum specializations for general k).

The recursive route is the oracle: the closed forms must reproduce it
exactly, and the test suite enforces that.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import RationalLike, as_rational, binom, qpow
from .linalg import PartitionedChain, RationalMatrix, is_commutable
from .msn import msn_direct


class CommutabilityError(ValueError):
    """A commutable-only closed form was applied to a non-commutable chain."""


class PreconditionError(ValueError):
    """A named hypothesis of a closed form does not hold for this chain."""


def dist_n1(chain: PartitionedChain, n: int) -> RationalMatrix:
    """P(N_1 = n) = P_M^(n-1) @ P_MN."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return chain.p_m ** (n - 1) @ chain.p_mn


def dist_r1(chain: PartitionedChain, n: int) -> RationalMatrix:
    """P(R_1 = 1) = P_M;  P(R_1 = n) = P_MN @ P_N^(n-2) @ P_NM for n >= 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return chain.p_m
    return chain.p_mn @ chain.p_n ** (n - 2) @ chain.p_nm


def _n1_moment_list(chain: PartitionedChain, m_max: int) -> list[RationalMatrix]:
    """M_0..M_max of N_1 by first-step recursion.

    M_0 = (I-P_M)^-1 P_MN and, for m >= 1,
    M_m = (I-P_M)^-1 (P_MN + P_M sum_{j<m} C(m,j) M_j).
    """
    u = (RationalMatrix.identity(chain.p_m.rows) - chain.p_m).inverse()
    out = [u @ chain.p_mn]
    for m in range(1, m_max + 1):
        acc = RationalMatrix.zeros(chain.p_mn.rows, chain.p_mn.cols)
        for j in range(m):
            acc = acc + binom(m, j) * out[j]
        out.append(u @ (chain.p_mn + chain.p_m @ acc))
    return out


def _r1_moment_list(chain: PartitionedChain, m_max: int) -> list[RationalMatrix]:
    """M_m(R_1) = P_M + P_MN sum_{j<=m} C(m,j) M_j(Nbar_1)."""
    nbar = _n1_moment_list(chain.swapped(), m_max)
    out = []
    for m in range(m_max + 1):
        acc = RationalMatrix.zeros(chain.p_nm.rows, chain.p_nm.cols)
        for j in range(m + 1):
            acc = acc + binom(m, j) * nbar[j]
        out.append(chain.p_m + chain.p_mn @ acc)
    return out


_VARIABLES = ("N1", "R1", "Nbar1", "Rbar1")


def moment_recursive(chain: PartitionedChain, variable: str, m: int) -> RationalMatrix:
    """m-th moment of N_1 / R_1 / Nbar_1 / Rbar_1 by the recursive route.

    This is the designated oracle: it uses nothing but first-step analysis,
    so it is independent of every closed form it validates.  Barred variants
    delegate to the role-swapped chain.
    """
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if variable not in _VARIABLES:
        raise ValueError(f"variable must be one of {_VARIABLES}, got {variable!r}")
    if variable == "N1":
        return _n1_moment_list(chain, m)[m]
    if variable == "R1":
        return _r1_moment_list(chain, m)[m]
    return moment_recursive(chain.swapped(), variable.replace("bar", ""), m)


def _convolve(binfirst: list, second: list, m: int) -> RationalMatrix:
    acc = None
    for j in range(m + 1):
        term = binom(m, j) * (binfirst[m - j] @ second[j])
        acc = term if acc is None else acc + term
    return acc


def _rk_moment_list(chain: PartitionedChain, k: int, m_max: int) -> list[RationalMatrix]:
    out = _r1_moment_list(chain, m_max)
    base = out
    for _ in range(k - 1):
        out = [_convolve(out, base, m) for m in range(m_max + 1)]
    return out


def _nk_moment_list(chain: PartitionedChain, k: int, m_max: int) -> list[RationalMatrix]:
    n1 = _n1_moment_list(chain, m_max)
    if k == 1:
        return n1
    rbar = _rk_moment_list(chain.swapped(), k - 1, m_max)
    return [_convolve(n1, rbar, m) for m in range(m_max + 1)]


def moment_k_convolved(
    chain: PartitionedChain, variable: str, k: int, m: int
) -> RationalMatrix:
    """M_m(R_k) or M_m(N_k) by moment convolution over the recursive base.

    R_k = R_(k-1) + R_1 and N_k = N_1 + Rbar_(k-1) give
    M_m(R_k) = sum_j C(m,j) M_j(R_(k-1)) M_(m-j)(R_1)  and
    M_m(N_k) = sum_j C(m,j) M_(m-j)(N_1) M_j(Rbar_(k-1)).
    Valid for every chain; serves as the oracle for the commutable forms.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if variable == "R":
        return _rk_moment_list(chain, k, m)[m]
    if variable == "N":
        return _nk_moment_list(chain, k, m)[m]
    if variable == "Rbar":
        return _rk_moment_list(chain.swapped(), k, m)[m]
    if variable == "Nbar":
        return _nk_moment_list(chain.swapped(), k, m)[m]
    raise ValueError(f"variable must be N, R, Nbar or Rbar, got {variable!r}")


def moment_n1_closed(chain: PartitionedChain, m: int) -> RationalMatrix:
    """M_m(N_1) = sum_j b(m, j, 1) P_M^j (I-P_M)^(-j-1) P_MN."""
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    u = (RationalMatrix.identity(chain.p_m.rows) - chain.p_m).inverse()
    p_pow = RationalMatrix.identity(chain.p_m.rows)
    u_pow = u
    acc = RationalMatrix.zeros(chain.p_mn.rows, chain.p_mn.cols)
    for j in range(m + 1):
        coeff = msn_direct(m, j, 1)
        if coeff != 0:
            acc = acc + coeff * (p_pow @ u_pow @ chain.p_mn)
        p_pow = p_pow @ chain.p_m
        u_pow = u_pow @ u
    return acc


def moment_r1_closed(chain: PartitionedChain, m: int) -> RationalMatrix:
    """M_m(R_1) = P_M + P_MN sum_j b(m, j, 2) P_N^j (I-P_N)^(-j-1) P_NM."""
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    v = (RationalMatrix.identity(chain.p_n.rows) - chain.p_n).inverse()
    p_pow = RationalMatrix.identity(chain.p_n.rows)
    v_pow = v
    acc = RationalMatrix.zeros(chain.p_n.rows, chain.p_nm.cols)
    for j in range(m + 1):
        coeff = msn_direct(m, j, 2)
        if coeff != 0:
            acc = acc + coeff * (p_pow @ v_pow @ chain.p_nm)
        p_pow = p_pow @ chain.p_n
        v_pow = v_pow @ v
    return chain.p_m + chain.p_mn @ acc


def _require_commutable(chain: PartitionedChain):
    if not is_commutable(chain, "M"):
        raise CommutabilityError("chain is not M-commutable")
    if not is_commutable(chain, "Mbar"):
        raise CommutabilityError("chain is not Mbar-commutable")


def moment_rk_commutable(chain: PartitionedChain, k: int, m: int) -> RationalMatrix:
    """Closed form for M_m(R_k) on M- and Mbar-commutable chains.

    k^m P_M^k + sum_{r=1}^{k} C(k,r) P_M^(k-r) P_MN Q^(r-1)
        * sum_j C(j+r-1, j) b(m, j, k+r) P_N^j (I-P_N)^(-j-r) P_NM.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    _require_commutable(chain)
    v = (RationalMatrix.identity(chain.p_n.rows) - chain.p_n).inverse()
    pm_pows = _pow_list(chain.p_m, k)
    pn_pows = _pow_list(chain.p_n, m)
    v_pows = _pow_list(v, m + k)
    q_pows = _pow_list(chain.q, k - 1)

    total = qpow(k, m) * pm_pows[k]
    for r in range(1, k + 1):
        inner = None
        for j in range(m + 1):
            coeff = binom(j + r - 1, j) * msn_direct(m, j, k + r)
            if coeff == 0:
                continue
            term = coeff * (pn_pows[j] @ v_pows[j + r] @ chain.p_nm)
            inner = term if inner is None else inner + term
        if inner is None:
            continue
        total = total + binom(k, r) * (
            pm_pows[k - r] @ chain.p_mn @ q_pows[r - 1] @ inner
        )
    return total


def moment_rk_scalar(chain: PartitionedChain, k: int, m: int) -> Fraction:
    """M_m(R_k) when |M| = 1 and P_N has constant row sums s_N.

    sum_{r=0}^{k} C(k,r) p^r (1-p)^(k-r)
        * sum_j C(j+r-1, j) b(m, j, k+r) (s_N / (1-s_N))^j
    with p = 1 - P_M.  The powers of p are combined before evaluation so the
    formula stays polynomial in p (no division by 1-p).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if chain.p_m.rows != 1:
        raise PreconditionError(f"requires |M| = 1, got |M| = {chain.p_m.rows}")
    if chain.s_n is None:
        raise PreconditionError("requires constant row sums in P_N")
    if chain.s_n == 1:
        raise PreconditionError("requires s_N != 1")
    p = 1 - chain.p_m[0, 0]
    w = chain.s_n / (1 - chain.s_n)
    total = Fraction(0)
    for r in range(k + 1):
        inner = Fraction(0)
        for j in range(m + 1):
            coeff = binom(j + r - 1, j)
            if coeff:
                inner += coeff * msn_direct(m, j, k + r) * qpow(w, j)
        total += binom(k, r) * qpow(p, r) * qpow(1 - p, k - r) * inner
    return total


def moment_renewal(chain: PartitionedChain, k: int, m: int) -> Fraction:
    """M_m(Rbar_k) for the renewal case: |N| = 1, P_N = (0), constant s_M.

    sum_j C(j+k-1, j) b(m, j, 2k) (s_M / (1-s_M))^j.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if chain.p_n.rows != 1:
        raise PreconditionError(f"requires |Mbar| = 1, got {chain.p_n.rows}")
    if chain.p_n[0, 0] != 0:
        raise PreconditionError("requires P_Mbar = (0)")
    if chain.s_m is None:
        raise PreconditionError("requires constant row sums in P_M")
    if chain.s_m == 1:
        raise PreconditionError("requires s_M != 1")
    w = chain.s_m / (1 - chain.s_m)
    total = Fraction(0)
    for j in range(m + 1):
        total += binom(j + k - 1, j) * msn_direct(m, j, 2 * k) * qpow(w, j)
    return total


def moment_nk_commutable(chain: PartitionedChain, k: int, m: int) -> RationalMatrix:
    """Closed form for M_m(N_k) on M- and Mbar-commutable chains.

    sum_{r=0}^{k-1} C(k-1, r) sum_j b(m, j, k+r) C(j+r, j)
        * P_M^j (I-P_M)^(-(j+r+1)) P_MN P_N^(k-1-r) Q^r.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    _require_commutable(chain)
    u = (RationalMatrix.identity(chain.p_m.rows) - chain.p_m).inverse()
    pm_pows = _pow_list(chain.p_m, m)
    pn_pows = _pow_list(chain.p_n, k - 1)
    u_pows = _pow_list(u, m + k)
    q_pows = _pow_list(chain.q, k - 1)
    total = None
    for r in range(k):
        tail = chain.p_mn @ pn_pows[k - 1 - r] @ q_pows[r]
        for j in range(m + 1):
            coeff = binom(k - 1, r) * binom(j + r, j) * msn_direct(m, j, k + r)
            if coeff == 0:
                continue
            term = coeff * (pm_pows[j] @ u_pows[j + r + 1] @ tail)
            total = term if total is None else total + term
    assert total is not None
    return total


def moment_nk_rowsum(chain: PartitionedChain, k: int, m: int) -> RationalMatrix:
    """M_m(N_k) when |N| = 1 with P_N = (q) and constant row sums s_M.

    A scalar times the all-ones column over M:
    sum_{r=0}^{k-1} C(k-1, r) (1-q)^r q^(k-1-r)
        * sum_j b(m, j, k+r) C(j+r, j) (s_M / (1-s_M))^j.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if chain.p_n.rows != 1:
        raise PreconditionError(f"requires |Mbar| = 1, got {chain.p_n.rows}")
    if chain.s_m is None:
        raise PreconditionError("requires constant row sums in P_M")
    if chain.s_m == 1:
        raise PreconditionError("requires s_M != 1")
    q = chain.p_n[0, 0]
    w = chain.s_m / (1 - chain.s_m)
    value = _alternating_nb_sum(w, q, k, m)
    return value * RationalMatrix.ones_column(chain.p_m.rows)


def _alternating_nb_sum(w: Fraction, q: Fraction, k: int, m: int) -> Fraction:
    """Shared kernel of the |N| = 1 passage-time forms.

    The factor ((1-q)/q)^r q^(k-1) is expanded to (1-q)^r q^(k-1-r) so q = 0
    stays well-defined (only the r = k-1 term survives there).
    """
    total = Fraction(0)
    for r in range(k):
        inner = Fraction(0)
        for j in range(m + 1):
            coeff = binom(j + r, j)
            if coeff:
                inner += coeff * msn_direct(m, j, k + r) * qpow(w, j)
        total += binom(k - 1, r) * qpow(1 - q, r) * qpow(q, k - 1 - r) * inner
    return total


def moment_anb(p: RationalLike, q: RationalLike, k: int, m: int) -> Fraction:
    """m-th raw moment of the trial count to the k-th success when the
    success probability alternates: p after a failure (and initially), q
    after a success.

    sum_{r=0}^{k-1} C(k-1, r) (1-q)^r q^(k-1-r)
        * sum_j b(m, j, k+r) C(j+r, j) ((1-p)/p)^j.
    """
    p = as_rational(p)
    q = as_rational(q)
    if not 0 < p <= 1:
        raise ValueError(f"need 0 < p <= 1, got p = {p}")
    if not 0 <= q < 1:
        raise ValueError(f"need 0 <= q < 1, got q = {q}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    return _alternating_nb_sum((1 - p) / p, q, k, m)


def moment_nb(p: RationalLike, k: int, m: int) -> Fraction:
    """m-th raw moment of the negative binomial (trial-counting: support
    starts at k, i.e. the number of Bernoulli(p) trials to the k-th success).

    sum_j C(j+k-1, k-1) b(m, j, k) ((1-p)/p)^j.
    """
    p = as_rational(p)
    if not 0 < p <= 1:
        raise ValueError(f"need 0 < p <= 1, got p = {p}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    w = (1 - p) / p
    total = Fraction(0)
    for j in range(m + 1):
        total += binom(j + k - 1, k - 1) * msn_direct(m, j, k) * qpow(w, j)
    return total


def _pow_list(matrix: RationalMatrix, up_to: int) -> list[RationalMatrix]:
    pows = [RationalMatrix.identity(matrix.rows)]
    for _ in range(up_to):
        pows.append(pows[-1] @ matrix)
    return pows
