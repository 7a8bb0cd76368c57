"""
Timing harness. Inputs are products of certified prime factors with at most
eight vertices each, so every row is a hypergraph of known factorization.
"""
import math
import sys
import time
from typing import List, NamedTuple, Sequence

import numpy as np

from hyperfactor.core.errors import OracleCapExceeded, SamplingBudgetExceeded
from hyperfactor.core.hypergraph import product_of
from hyperfactor.core.pipeline import pfd_hypergraph
from hyperfactor.core.types import DirectedHypergraph, GeneratorConfig
from hyperfactor.oracle.generators import random_prime_hypergraph

BUDGET_N = 2 ** 12
SLOPE_LIMIT = 1.35


class BenchRow(NamedTuple):
    n: int
    m: int
    r: int
    factors: int
    seconds: float

    @property
    def per_m_log2(self) -> float:
        return self.seconds / (self.m * math.log2(self.n) ** 2)

    @property
    def per_mnr2(self) -> float:
        return self.seconds / (self.m * self.n * self.r ** 2)


def factor_sizes(n: int) -> List[int]:
    """Splits a power of two into factor orders of 8, with one 2 or 4 for the remainder."""
    exponent = n.bit_length() - 1
    if n != 2 ** exponent or exponent < 1:
        raise ValueError(f"bench sizes must be powers of two, got {n}")
    eights, rest = divmod(exponent, 3)
    return [8] * eights + ([2 ** rest] if rest else [])


def build_instance(n: int, rank: int, seed: int) -> DirectedHypergraph:
    primes = [
        random_prime_hypergraph(GeneratorConfig(seed=seed + i, n=size, r=rank))
        for i, size in enumerate(factor_sizes(n))
    ]
    return product_of(*primes)


def time_instance(h: DirectedHypergraph, repeats: int) -> BenchRow:
    best = math.inf
    factors = 0
    for _ in range(max(repeats, 1)):
        started = time.perf_counter()
        result = pfd_hypergraph(h)
        best = min(best, time.perf_counter() - started)
        factors = len(result.factors)
    return BenchRow(h.n, h.m, h.rank, factors, best)


def fitted_slope(rows: Sequence[BenchRow]) -> float:
    """Slope of log(seconds) against log(m)."""
    if len(rows) < 2:
        return float("nan")
    ms = np.log([row.m for row in rows])
    ts = np.log([max(row.seconds, 1e-9) for row in rows])
    return float(np.polyfit(ms, ts, 1)[0])


def doubling_series(min_n: int, max_n: int, rank: int, seed: int) -> List[DirectedHypergraph]:
    if rank < 2:
        raise ValueError(f"rank must be >= 2, got {rank}")
    sizes = []
    n = 2 ** max(1, (min_n - 1).bit_length())
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return [build_instance(n, rank, seed) for n in sizes]


def rank_series(max_n: int, rank: int, seed: int) -> List[DirectedHypergraph]:
    if max_n < 2 or rank < 2:
        raise ValueError(f"rank series needs max n >= 2 and rank >= 2, got {max_n} and {rank}")
    n = 2 ** (max_n.bit_length() - 1)
    return [build_instance(n, r, seed) for r in range(2, rank + 1)]


def print_table(rows: Sequence[BenchRow]) -> None:
    print(f"{'n':>7} {'m':>8} {'r':>3} {'k':>3} {'sec':>10} {'t/(m log2^2 n)':>16} {'t/(m n r^2)':>14}")
    for row in rows:
        print(f"{row.n:>7} {row.m:>8} {row.r:>3} {row.factors:>3} {row.seconds:>10.4f} "
              f"{row.per_m_log2:>16.3e} {row.per_mnr2:>14.3e}")


def run_bench(args) -> int:
    from hyperfactor.cli import EXIT_CONSISTENCY, EXIT_INPUT, EXIT_OK, CommandFailed, env_seed

    seed = env_seed(args.seed)
    try:
        if args.series == "doubling":
            instances = doubling_series(args.min_n, args.max_n, args.rank, seed)
        else:
            instances = rank_series(args.max_n, args.rank, seed)
    except (ValueError, OracleCapExceeded, SamplingBudgetExceeded) as e:
        raise CommandFailed(str(e), EXIT_INPUT) from e

    rows = []
    for h in instances:
        # We write progress to stderr so the table stays pipeable
        print(f"🔄 n={h.n} m={h.m} ...", file=sys.stderr)
        rows.append(time_instance(h, args.repeats))
    print_table(rows)

    if args.series == "doubling":
        slope = fitted_slope(rows)
        print(f"# log-log slope of time against m: {slope:.3f} (limit {SLOPE_LIMIT})")

    if args.assert_budget is not None:
        for row in rows:
            if row.n == BUDGET_N and row.seconds > args.assert_budget:
                print(f"❌ n={row.n} took {row.seconds:.2f}s, budget {args.assert_budget:.2f}s", file=sys.stderr)
                return EXIT_CONSISTENCY
    return EXIT_OK
