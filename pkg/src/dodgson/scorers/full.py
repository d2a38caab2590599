"""Scorers that traverse the whole bounded swap space: baseline and DFS."""

from __future__ import annotations

import math
import sys
import time

import numpy as np

from .base import (
    DEFAULT_ENTRY_CAP,
    Clock,
    InstrumentationCounters,
    ScoreBudget,
    ScoreResult,
    ScorerKind,
    SearchAbandoned,
    SpaceTooLarge,
    SwapSpace,
    _Timeout,
)


def space_size(space: SwapSpace) -> int:
    return math.prod(p + 1 for p in space.positions)


def score_baseline(
    space: SwapSpace,
    budget: ScoreBudget = ScoreBudget(),
    entry_cap: int = DEFAULT_ENTRY_CAP,
) -> ScoreResult:
    """Materialize every swap profile with its score, then scan for winners."""
    stats = InstrumentationCounters()
    t0 = time.perf_counter()
    clock = Clock(budget.deadline(time.monotonic()))
    size = space_size(space)
    if size > entry_cap:
        raise SpaceTooLarge(size, entry_cap)
    try:
        clock.check()
        dims = tuple(p + 1 for p in space.positions)
        vectors = np.indices(dims, dtype=np.int32).reshape(space.n, -1).T
        scores = vectors.sum(axis=1)
        stats.nodes_generated = size
        stats.hold(size)
        clock.check()

        winners = np.empty(size, dtype=bool)
        step = 1 << 16
        for start in range(0, size, step):
            clock.check()
            winners[start : start + step] = space.wins_many(vectors[start : start + step])
            stats.condorcet_checks += min(step, size - start)
    except _Timeout:
        stats.elapsed = (time.perf_counter() - t0) * 1000.0
        raise SearchAbandoned(space.candidate, 0, "timeout", stats) from None

    best = int(scores[winners].min())
    hits = vectors[winners & (scores == best)]
    stats.elapsed = (time.perf_counter() - t0) * 1000.0
    return ScoreResult(
        candidate=space.candidate,
        score=best,
        minimal_solutions=tuple(tuple(int(x) for x in row) for row in hits),
        stats=stats,
        kind=ScorerKind.BASELINE,
    )


def score_dfs(
    space: SwapSpace,
    budget: ScoreBudget = ScoreBudget(),
    prune: bool = False,
) -> ScoreResult:
    """Depth-first over voters; every leaf is one swap profile to test.

    The whole space is visited unless ``prune`` is set, in which case a
    branch is cut once its partial score exceeds the best solution so far.
    """
    stats = InstrumentationCounters()
    t0 = time.perf_counter()
    clock = Clock(budget.deadline(time.monotonic()))
    n, pos, table, high = space.n, space.positions, space.table, space._high
    vec = [0] * n
    best = sys.maxsize
    solutions: list[tuple[int, ...]] = []
    checks = 0

    def visit(d: int, packed: int, partial: int) -> None:
        nonlocal best, checks, solutions
        row = table[d]
        if d == n - 1:
            for s in range(pos[d] + 1):
                score = partial + s
                if prune and score > best:
                    break
                clock.poll()
                checks += 1
                if (packed + row[s]) & high == high:
                    if score < best:
                        best = score
                        vec[d] = s
                        solutions = [tuple(vec)]
                    elif score == best:
                        vec[d] = s
                        solutions.append(tuple(vec))
            return
        for s in range(pos[d] + 1):
            if prune and partial + s > best:
                break
            vec[d] = s
            visit(d + 1, packed + row[s], partial + s)

    stats.hold(n + 1)
    try:
        visit(0, 0, 0)
    except _Timeout:
        stats.condorcet_checks = stats.nodes_generated = checks
        stats.elapsed = (time.perf_counter() - t0) * 1000.0
        lower = 1 if checks and best != 0 else 0
        raise SearchAbandoned(space.candidate, lower, "timeout", stats) from None
    stats.condorcet_checks = stats.nodes_generated = checks
    stats.elapsed = (time.perf_counter() - t0) * 1000.0
    return ScoreResult(
        candidate=space.candidate,
        score=best,
        minimal_solutions=tuple(sorted(solutions)),
        stats=stats,
        kind=ScorerKind.DFS,
    )
