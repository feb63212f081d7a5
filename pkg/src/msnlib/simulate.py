"""Monte Carlo cross-validation of the exact moment machinery.

This is the only module in the package that touches floating point: rational
transition probabilities are converted to float64 once at load, and the
passage/recurrence times are sampled with numpy's PCG64 generator
(``numpy.random.default_rng(seed)``), so a fixed seed reproduces results
bit-for-bit.  All walks advance in lockstep rounds, one uniform per active
walk per round, which keeps the two kernels (numba and pure numpy; see
:mod:`msnlib._sim_kernels`) on exactly the same random stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._sim_kernels import KERNELS, build_cumulative, resolve_backend
from .exact import as_rational
from .linalg import PartitionedChain

_VARIABLES = ("N", "R", "Nbar", "Rbar")


class TruncationError(RuntimeError):
    """Too many walks hit max_steps for the estimates to be trusted."""


@dataclass(frozen=True)
class SimConfig:
    """One simulation request.

    `start` is an exact probability row over M (for N, R) or over the
    complement (for Nbar, Rbar); None means uniform over that side.
    """

    chain: PartitionedChain
    variable: str
    k: int
    replications: int
    seed: int
    max_steps: int = 10_000
    start: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.variable not in _VARIABLES:
            raise ValueError(f"variable must be one of {_VARIABLES}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        side = len(self.start_side_indices())
        if self.start is not None:
            start = tuple(as_rational(v) for v in self.start)
            if len(start) != side:
                raise ValueError(
                    f"start vector length {len(start)} != side size {side}"
                )
            if any(v < 0 for v in start) or sum(start) != 1:
                raise ValueError("start must be a probability vector")
            object.__setattr__(self, "start", start)

    def start_side_indices(self) -> tuple[int, ...]:
        if self.variable in ("N", "R"):
            return self.chain.m_indices
        return self.chain.n_indices

    def target_indices(self) -> tuple[int, ...]:
        if self.variable in ("N", "Rbar"):
            return self.chain.n_indices
        return self.chain.m_indices


@dataclass(frozen=True)
class MomentEstimate:
    order: int
    mean: float
    std_error: float


@dataclass(frozen=True)
class SimResult:
    estimates: tuple[MomentEstimate, ...]
    replications: int
    completed: int
    truncated: int
    backend: str

    @property
    def truncated_fraction(self) -> float:
        return self.truncated / self.replications

    def mean(self, order: int) -> float:
        return self.estimates[order - 1].mean

    def std_error(self, order: int) -> float:
        return self.estimates[order - 1].std_error


def simulate(cfg: SimConfig, backend: str | None = None) -> SimResult:
    """Sample the configured passage/recurrence time and estimate E[T^m], m = 1..4.

    Walks still running after max_steps rounds are excluded from the
    estimates and reported; more than 1% of them raises TruncationError.
    """
    backend_name = resolve_backend(backend)
    kernel = KERNELS[backend_name]
    chain = cfg.chain

    probs = np.array(
        [[float(v) for v in row] for row in chain.p.entries], dtype=np.float64
    )
    cum = build_cumulative(probs)
    target = np.zeros(chain.size, dtype=np.bool_)
    for idx in cfg.target_indices():
        target[idx - 1] = True

    side = cfg.start_side_indices()
    if cfg.start is None:
        start_probs = np.full(len(side), 1.0 / len(side))
    else:
        start_probs = np.array([float(v) for v in cfg.start])
    start_cum = np.cumsum(start_probs)
    start_cum[-1] = np.inf
    side_states = np.array([i - 1 for i in side], dtype=np.int64)

    rng = np.random.default_rng(cfg.seed)
    reps = cfg.replications
    states = side_states[(start_cum <= rng.random(reps)[:, None]).sum(axis=1)]
    visits = np.zeros(reps, dtype=np.int64)
    alive = np.arange(reps, dtype=np.int64)
    times = np.full(reps, -1, dtype=np.int64)

    step = 0
    while alive.size and step < cfg.max_steps:
        step += 1
        u = rng.random(alive.size)
        done = kernel(states, visits, u, cum, target, cfg.k)
        if done.any():
            times[alive[done]] = step
            keep = ~done
            states = states[keep]
            visits = visits[keep]
            alive = alive[keep]

    truncated = int(alive.size)
    completed = reps - truncated
    if truncated > 0.01 * reps:
        raise TruncationError(
            f"{truncated} of {reps} walks exceeded max_steps={cfg.max_steps}"
        )

    finished = times[times >= 0].astype(np.float64)
    estimates = []
    for order in range(1, 5):
        powered = finished**order
        mean = float(powered.mean())
        if finished.size > 1:
            se = float(powered.std(ddof=1) / np.sqrt(finished.size))
        else:
            se = 0.0
        estimates.append(MomentEstimate(order=order, mean=mean, std_error=se))
    return SimResult(
        estimates=tuple(estimates),
        replications=reps,
        completed=completed,
        truncated=truncated,
        backend=backend_name,
    )
