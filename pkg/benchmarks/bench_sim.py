#!/usr/bin/env python3
"""Benchmark the numba kernel against the pure-numpy fallback.

The two backends walk the same chains on the same random stream and return
bit-identical estimates, so this is a pure speed comparison of the
round-advance kernel.  Run after an editable install:

    python benchmarks/bench_sim.py --reps 400000
"""

import argparse
import time
from fractions import Fraction

from msnlib import RationalMatrix, partition
from msnlib._sim_kernels import HAVE_NUMBA
from msnlib.simulate import SimConfig, simulate


def build_configs(reps: int):
    two_state = partition(
        RationalMatrix([[Fraction(1, 2), Fraction(1, 2)], [Fraction(2, 3), Fraction(1, 3)]]),
        [1],
    )
    slow_exit = partition(
        RationalMatrix(
            [
                [Fraction(5, 6), Fraction(1, 12), Fraction(1, 12)],
                [Fraction(1, 12), Fraction(5, 6), Fraction(1, 12)],
                [Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)],
            ]
        ),
        [1, 2],
    )
    return [
        ("two-state N_1", SimConfig(chain=two_state, variable="N", k=1, replications=reps, seed=1)),
        ("two-state R_4", SimConfig(chain=two_state, variable="R", k=4, replications=reps, seed=2)),
        ("sticky 3-state N_2", SimConfig(chain=slow_exit, variable="N", k=2, replications=reps, seed=3)),
    ]


def time_backend(cfg: SimConfig, backend: str, repeats: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = simulate(cfg, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=200_000)
    args = parser.parse_args()

    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    configs = build_configs(args.reps)
    # trigger JIT compilation outside the timed region
    warm = SimConfig(
        chain=configs[0][1].chain, variable="N", k=1, replications=100, seed=0
    )
    simulate(warm, backend="numba")

    print(f"{'config':<22} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, cfg in configs:
        t_np, r_np = time_backend(cfg, "numpy")
        t_nb, r_nb = time_backend(cfg, "numba")
        assert r_np.estimates == r_nb.estimates, "backends diverged"
        print(f"{name:<22} {t_np:>9.3f}s {t_nb:>9.3f}s {t_np / t_nb:>8.2f}x")


if __name__ == "__main__":
    main()
