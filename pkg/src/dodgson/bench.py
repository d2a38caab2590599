"""Repeated-run timing statistics and the maximum-range sweep.

Run ``r`` of a benchmark always uses the profile generated from seed
``seed_base + r``, so every scorer sees the same elections and the call
counts are reproducible bit for bit. Wall times are in milliseconds.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .generate import generate_impartial_culture
from .scorers import ScoreBudget, ScorerKind, SearchAbandoned, SpaceTooLarge, score
from .tournament import TournamentStrategy, run_tournament

MODES = ("standard", "threaded")
STATS_FIELDS = [
    "scorer", "mode", "n", "m", "runs", "min_ms", "median_ms", "max_ms",
    "mean_ms", "sigma_ms", "avg_calls", "seed_base",
]
SWEEP_FIELDS = ["n", "m_max", "window_ms", "repetitions"]


@dataclass(frozen=True)
class RunStats:
    scorer: str
    mode: str
    n: int
    m: int
    runs: int
    min: float
    median: float
    max: float
    mean: float
    sigma: float  # population standard deviation
    avg_calls: float
    seed_base: int

    @classmethod
    def from_samples(cls, times: Sequence[float], calls: Sequence[int], **meta) -> "RunStats":
        if not times:
            raise ValueError("need at least one run")
        return cls(
            runs=len(times),
            min=min(times),
            median=statistics.median(times),
            max=max(times),
            mean=statistics.fmean(times),
            sigma=statistics.pstdev(times),
            avg_calls=statistics.fmean(calls),
            **meta,
        )

    def row(self) -> list:
        return [
            self.scorer, self.mode, self.n, self.m, self.runs,
            f"{self.min:.3f}", f"{self.median:.3f}", f"{self.max:.3f}",
            f"{self.mean:.3f}", f"{self.sigma:.3f}", repr(self.avg_calls), self.seed_base,
        ]


@dataclass(frozen=True)
class RangeRecord:
    n: int
    m_max: float  # averaged over repetitions; 0 means nothing was solved
    window_millis: float
    repetitions: int
    seeds: tuple[int, ...] = ()
    capped: bool = False  # the m limit was reached, true range is larger

    def row(self) -> list:
        return [self.n, repr(self.m_max), self.window_millis, self.repetitions]


def solve_all(pp, scorer: ScorerKind, budget: ScoreBudget = ScoreBudget()) -> int:
    """Score every alternative; returns the total number of winner checks."""
    calls = 0
    for a in pp.alternatives:
        calls += score(scorer, pp, a, budget).stats.condorcet_checks
    return calls


def _one_run(pp, scorer: ScorerKind, mode: str) -> int:
    if mode == "threaded" and scorer.layered:
        outcome = run_tournament(pp, TournamentStrategy.CONCURRENT_ORDERED, scorer=scorer)
        return outcome.total_checks
    # baseline and DFS cannot prune, they run unchanged in threaded mode
    return solve_all(pp, scorer)


def run_average_benchmark(
    n: int,
    m: int,
    runs: int,
    seed_base: int,
    scorers: Iterable[ScorerKind | str],
    mode: str = "standard",
) -> list[RunStats]:
    if runs < 1:
        raise ValueError("runs must be at least 1")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    kinds = [ScorerKind(s) for s in scorers]
    profiles = [generate_impartial_culture(n, m, seed_base + r) for r in range(runs)]
    out = []
    for kind in kinds:
        times, calls = [], []
        for pp in profiles:
            t0 = time.perf_counter()
            calls.append(_one_run(pp, kind, mode))
            times.append((time.perf_counter() - t0) * 1000.0)
        out.append(
            RunStats.from_samples(
                times, calls, scorer=kind.value, mode=mode, n=n, m=m, seed_base=seed_base
            )
        )
    return out


def _solves_within(pp, solver, window_millis: float) -> bool:
    budget = ScoreBudget(max_millis=window_millis)
    t0 = time.perf_counter()
    try:
        if isinstance(solver, TournamentStrategy):
            if not run_tournament(pp, solver, budget).conclusive:
                return False
        else:
            deadline = t0 + window_millis / 1000.0
            for a in pp.alternatives:
                left = (deadline - time.perf_counter()) * 1000.0
                if left <= 0:
                    return False
                score(solver, pp, a, ScoreBudget(max_millis=left))
    except (SearchAbandoned, SpaceTooLarge):
        return False
    return (time.perf_counter() - t0) * 1000.0 <= window_millis


def max_solvable_m(
    n: int, solver, window_millis: float, seed: int, m_limit: int, attempts: int = 2
) -> int:
    """Largest m such that every size up to it is solved within the window.

    A size counts as missed only after ``attempts`` timed tries, so a single
    scheduler or GC pause does not end the sweep early.
    """
    solver = _as_solver(solver)
    m = 0
    while m < m_limit:
        pp = generate_impartial_culture(n, m + 1, seed)
        if not any(_solves_within(pp, solver, window_millis) for _ in range(attempts)):
            break
        m += 1
    return m


def run_range_sweep(
    window_millis: float,
    repetitions: int,
    solver: ScorerKind | TournamentStrategy | str,
    odd_n_only: bool = True,
    *,
    n_values: Iterable[int] | None = None,
    seed_base: int = 0,
    m_limit: int = 256,
    n_limit: int = 201,
    attempts: int = 2,
) -> list[RangeRecord]:
    """Grow ``m`` at fixed ``n`` until a solve misses the window.

    Without explicit ``n_values`` the sweep starts at ``n = 1`` (stepping by
    two when ``odd_n_only``) and stops after the first ``n`` whose average
    ``m_max`` is at most 4. ``solver`` is either a scorer (standard mode:
    every alternative scored) or a tournament strategy using ICR.
    """
    if window_millis <= 0 or repetitions < 1:
        raise ValueError("window must be positive and repetitions at least 1")
    solver = _as_solver(solver)
    explicit = n_values is not None
    ns = iter(n_values) if explicit else iter(range(1, n_limit + 1, 2 if odd_n_only else 1))
    records = []
    for n in ns:
        seeds = tuple(seed_base + r for r in range(repetitions))
        found = [max_solvable_m(n, solver, window_millis, s, m_limit, attempts) for s in seeds]
        m_max = statistics.fmean(found)
        records.append(
            RangeRecord(n, m_max, window_millis, repetitions, seeds, capped=max(found) >= m_limit)
        )
        if not explicit and m_max <= 4:
            break
    return records


def _as_solver(solver):
    if isinstance(solver, (ScorerKind, TournamentStrategy)):
        return solver
    try:
        return ScorerKind(solver)
    except ValueError:
        return TournamentStrategy(solver)


def stats_csv(rows: Iterable[RunStats]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(STATS_FIELDS)
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()


def sweep_csv(rows: Iterable[RangeRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_FIELDS)
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()
