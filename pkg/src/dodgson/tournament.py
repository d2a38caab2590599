"""Dodgson winners of a whole election.

Four strategies are offered. ``FULL`` scores every alternative exactly.
``ORDERED`` scores alternatives in Borda order and abandons any search that
would have to look at a layer above the best score found so far.
``CONCURRENT`` and ``CONCURRENT_ORDERED`` run one search per alternative on
a thread pool and share the best score found so far as a pruning bound.

The concurrent strategies advance all live searches one score layer at a
time with a barrier in between. A search that completes layer ``k`` with a
solution publishes ``k``; at the barrier every search whose next layer
exceeds the published bound stops. Because decisions are only taken at
barriers, the outcome (including which alternatives were pruned, and
where) does not depend on thread scheduling.
"""

from __future__ import annotations

import enum
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .profile import Alternative, PreferenceProfile, borda_count
from .scorers import (
    DEFAULT_ENTRY_CAP,
    InstrumentationCounters,
    ScoreBudget,
    ScorerKind,
    SearchAbandoned,
    SwapSpace,
    layered_search,
    score,
)
from .scorers.base import Clock, _Timeout


class TournamentStrategy(enum.Enum):
    FULL = "full"
    ORDERED = "ordered"
    CONCURRENT = "concurrent"
    CONCURRENT_ORDERED = "concurrent-ordered"

    @property
    def prunes(self) -> bool:
        return self is not TournamentStrategy.FULL


@dataclass(frozen=True)
class CandidateScore:
    """What a tournament learned about one alternative.

    ``status`` is ``"exact"`` (``value`` is the Dodgson score), ``"pruned"``
    (the search stopped at layer ``value`` because a better score was
    already known, so the score is at least ``value``) or ``"bound"`` (time
    ran out; the score is at least ``value``).
    """

    status: str
    value: int

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def __str__(self) -> str:
        if self.exact:
            return str(self.value)
        return f">= {self.value} ({self.status})"


@dataclass
class TournamentOutcome:
    winners: tuple[Alternative, ...]
    winning_score: int | None
    per_candidate: dict[Alternative, CandidateScore]
    conclusive: bool
    stats: dict[Alternative, InstrumentationCounters] = field(default_factory=dict)
    minimal_solutions: dict[Alternative, tuple] = field(default_factory=dict)

    @property
    def floor(self) -> int:
        """No alternative has a Dodgson score below this value."""
        return min(c.value for c in self.per_candidate.values())

    @property
    def total_checks(self) -> int:
        return sum(s.condorcet_checks for s in self.stats.values())

    def key(self) -> tuple:
        """Everything except instrumentation, for comparing runs."""
        return (
            self.winners,
            self.winning_score,
            tuple(sorted(self.per_candidate.items())),
            self.conclusive,
        )


class Incumbent:
    """Best exact score published so far; it only ever decreases."""

    def __init__(self, value: int | None = None):
        self._lock = threading.Lock()
        self._value = value

    @property
    def value(self) -> int | None:
        return self._value

    def offer(self, candidate_score: int) -> None:
        with self._lock:
            if self._value is None or candidate_score < self._value:
                self._value = candidate_score

    def exceeded_by(self, layer: int) -> bool:
        value = self._value
        return value is not None and layer > value


def borda_order(pp: PreferenceProfile) -> list[Alternative]:
    """Alternatives by descending Borda count, ties in declaration order."""
    return sorted(pp.alternatives, key=lambda a: (-borda_count(pp, a), pp.index(a)))


def default_workers(m: int) -> int:
    return max(1, min(m, os.cpu_count() or 1))


def run_tournament(
    pp: PreferenceProfile,
    strategy: TournamentStrategy | str = TournamentStrategy.CONCURRENT_ORDERED,
    budget: ScoreBudget = ScoreBudget(),
    scorer: ScorerKind | str = ScorerKind.ICR,
    *,
    workers: int | None = None,
    entry_cap: int = DEFAULT_ENTRY_CAP,
) -> TournamentOutcome:
    """Find the alternatives with minimum Dodgson score.

    Only ``budget.max_millis`` is used; it bounds the whole tournament.
    When time runs out the outcome is marked inconclusive and carries
    certified lower bounds for the unfinished alternatives.
    """
    strategy = TournamentStrategy(strategy)
    scorer = ScorerKind(scorer)
    if strategy.prunes and not scorer.layered:
        raise ValueError(
            f"strategy {strategy.value!r} needs a scorer that proves minimality "
            f"layer by layer (ucs, sc or icr), not {scorer.value!r}"
        )
    start = time.monotonic()
    deadline = budget.deadline(start)
    if strategy is TournamentStrategy.FULL:
        results = _sequential(pp, list(pp.alternatives), scorer, deadline, entry_cap, prune=False)
    elif strategy is TournamentStrategy.ORDERED:
        results = _sequential(pp, borda_order(pp), scorer, deadline, entry_cap, prune=True)
    else:
        order = (
            borda_order(pp)
            if strategy is TournamentStrategy.CONCURRENT_ORDERED
            else list(pp.alternatives)
        )
        workers = workers or default_workers(pp.m)
        results = _lockstep(pp, order, scorer, deadline, entry_cap, workers)
    return _conclude(pp, *results)


def _remaining(deadline: float | None) -> float | None:
    if deadline is None:
        return None
    return max(0.0, (deadline - time.monotonic()) * 1000.0)


def _sequential(pp, order, scorer, deadline, entry_cap, prune):
    per, stats, sols = {}, {}, {}
    incumbent = Incumbent()
    for a in order:
        remaining = _remaining(deadline)
        if remaining == 0.0:
            per[a] = CandidateScore("bound", 0)
            stats[a] = InstrumentationCounters()
            continue
        cap = incumbent.value if prune else None
        try:
            res = score(scorer, pp, a, ScoreBudget(max_millis=remaining, score_cap=cap),
                        entry_cap=entry_cap)
        except SearchAbandoned as stop:
            status = "pruned" if stop.reason == "cap" else "bound"
            per[a] = CandidateScore(status, stop.lower_bound)
            stats[a] = stop.stats
            continue
        per[a] = CandidateScore("exact", res.score)
        stats[a] = res.stats
        sols[a] = res.minimal_solutions
        incumbent.offer(res.score)
    return per, stats, sols


def _lockstep(pp, order, scorer, deadline, entry_cap, workers):
    searches = {a: layered_search(scorer, SwapSpace(pp, a), entry_cap) for a in order}
    incumbent = Incumbent()
    per, sols = {}, {}

    def advance(a):
        search = searches[a]
        try:
            search.run_layer(Clock(deadline))
        except _Timeout:
            return a, "timeout"
        if search.done:
            incumbent.offer(search.score)
            return a, "done"
        return a, "open"

    active = list(order)
    timed_out = False
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while active and not timed_out:
            outcomes = list(pool.map(advance, active))
            still = []
            for a, state in outcomes:
                if state == "done":
                    per[a] = CandidateScore("exact", searches[a].score)
                    sols[a] = tuple(searches[a].solutions)
                elif state == "timeout":
                    timed_out = True
                    per[a] = CandidateScore("bound", searches[a].layer)
                else:
                    still.append(a)
            active = []
            for a in still:
                layer = searches[a].layer
                if incumbent.exceeded_by(layer):
                    per[a] = CandidateScore("pruned", layer)
                elif timed_out:
                    per[a] = CandidateScore("bound", layer)
                else:
                    active.append(a)
            if active and deadline is not None and time.monotonic() >= deadline:
                timed_out = True
                for a in active:
                    per[a] = CandidateScore("bound", searches[a].layer)
                active = []
    stats = {a: searches[a].stats for a in order}
    return per, stats, sols


def _conclude(pp, per, stats, sols) -> TournamentOutcome:
    per = {a: per[a] for a in pp.alternatives}
    stats = {a: stats.get(a, InstrumentationCounters()) for a in pp.alternatives}
    exact = [c.value for c in per.values() if c.exact]
    best = min(exact) if exact else None
    winners = tuple(a for a in pp.alternatives if per[a].exact and per[a].value == best)
    conclusive = best is not None and all(
        c.exact or c.value > best for c in per.values()
    )
    return TournamentOutcome(
        winners=winners,
        winning_score=best,
        per_candidate=per,
        conclusive=conclusive,
        stats=stats,
        minimal_solutions={a: sols[a] for a in winners},
    )
