"""Benchmark methodology on seeded random elections.

Run r of a benchmark always uses seed base + r, so every scorer sees the
same profiles and the call counts can be compared across machines even
when the timings cannot.
"""

import sys

from dodgson import TournamentStrategy
from dodgson.bench import run_average_benchmark, run_range_sweep, stats_csv, sweep_csv


def main(runs=20):
    kinds = ["dfs", "ucs", "sc", "icr"]
    rows = run_average_benchmark(8, 5, runs, 0, kinds, "standard")
    rows += run_average_benchmark(8, 5, runs, 0, kinds, "threaded")
    sys.stdout.write(stats_csv(rows))

    print()
    for solver in ("baseline", TournamentStrategy.CONCURRENT_ORDERED):
        sys.stdout.write(sweep_csv(run_range_sweep(20, 1, solver, n_values=[3, 5])))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20)
