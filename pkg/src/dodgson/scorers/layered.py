"""Scorers that settle one score layer at a time: UCS, SC and ICR.

Each search object owns its state between layers, so a caller can run
layer ``k`` for several candidates, compare notes, and only then decide
who continues to ``k + 1``. That is what the tournament strategies do.
"""

from __future__ import annotations

import heapq
import time

import numpy as np

from ..permutor import CompositionCursor, layer_sizes
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


class LayeredSearch:
    """Common driver state. Subclasses implement :meth:`_examine`."""

    kind: ScorerKind

    def __init__(self, space: SwapSpace):
        self.space = space
        self.stats = InstrumentationCounters()
        self.layer = 0  # next layer to examine
        self.solutions: list[tuple[int, ...]] = []
        self.done = False

    def run_layer(self, clock: Clock | None = None) -> bool:
        """Examine the current layer completely. Returns True on success.

        Raises ``_Timeout`` from inside the layer if ``clock`` expires; the
        layer then counts as unverified.
        """
        if self.done:
            raise RuntimeError("search already finished")
        t0 = time.perf_counter()
        try:
            found = self._examine(self.layer, clock or Clock(None))
        finally:
            self.stats.elapsed += (time.perf_counter() - t0) * 1000.0
        if found:
            self.solutions = sorted(set(found))
            self.done = True
        else:
            self.layer += 1
        return self.done

    def _examine(self, k: int, clock: Clock) -> list:
        raise NotImplementedError

    @property
    def score(self) -> int:
        if not self.done:
            raise RuntimeError("search not finished")
        return self.layer

    def result(self) -> ScoreResult:
        return ScoreResult(
            candidate=self.space.candidate,
            score=self.score,
            minimal_solutions=tuple(self.solutions),
            stats=self.stats,
            kind=self.kind,
        )

    def drive(self, budget: ScoreBudget = ScoreBudget()) -> ScoreResult:
        """Run layers until a solution appears or the budget runs out."""
        clock = Clock(budget.deadline(time.monotonic()))
        while not self.done:
            if budget.score_cap is not None and self.layer > budget.score_cap:
                raise SearchAbandoned(self.space.candidate, self.layer, "cap", self.stats)
            try:
                clock.check()
                self.run_layer(clock)
            except _Timeout:
                raise SearchAbandoned(
                    self.space.candidate, self.layer, "timeout", self.stats
                ) from None
        return self.result()


class ICRSearch(LayeredSearch):
    """Iterative cost raise: stream each layer through the winner test."""

    kind = ScorerKind.ICR

    def _examine(self, k, clock):
        space, stats = self.space, self.stats
        table, high = space.table, space._high
        stats.hold(1)
        found = []
        for vec in CompositionCursor(k, space.positions):
            clock.poll()
            stats.nodes_generated += 1
            stats.condorcet_checks += 1
            total = 0
            for row, s in zip(table, vec):
                total += row[s]
            if total & high == high:
                found.append(vec)
        return found


class SCSearch(LayeredSearch):
    """Smart caching: materialize a whole layer, then scan it."""

    kind = ScorerKind.SC

    def __init__(self, space: SwapSpace, entry_cap: int = DEFAULT_ENTRY_CAP):
        super().__init__(space)
        self.entry_cap = entry_cap
        self._sizes = layer_sizes(space.positions)

    def _examine(self, k, clock):
        space, stats = self.space, self.stats
        size = self._sizes[k] if k < len(self._sizes) else 0
        if size > self.entry_cap:
            raise SpaceTooLarge(size, self.entry_cap, layer=k)
        cache = np.empty((size, space.n), dtype=np.int32)
        for row, vec in enumerate(CompositionCursor(k, space.positions)):
            clock.poll()
            cache[row] = vec
        stats.nodes_generated += size
        stats.hold(size)
        stats.condorcet_checks += size
        hits = cache[space.wins_many(cache)]
        return [tuple(int(x) for x in row) for row in hits]


class UCSSearch(LayeredSearch):
    """Uniform-cost search over swap profiles, cost = number of swaps.

    Nodes are expanded canonically: a node may only raise voters at or after
    the last voter it raised, so each vector has exactly one path. Voters
    with identical ballots are interchangeable; among them only
    non-increasing swap counts are explored and the minimal solutions are
    re-expanded over all arrangements at the end. A child is dropped when
    even moving the candidate to the top in every still-adjustable ballot
    could not make it win.
    """

    kind = ScorerKind.UCS

    def __init__(self, space: SwapSpace, trace: list | None = None):
        super().__init__(space)
        n = space.n
        ballots = space.profile.ballots
        last_seen: dict = {}
        self._prev_twin = [-1] * n
        self._groups: dict[tuple, list[int]] = {}
        for i, b in enumerate(ballots):
            self._prev_twin[i] = last_seen.get(b, -1)
            last_seen[b] = i
            self._groups.setdefault(b, []).append(i)
        # packed tallies with voters j.. moved to the top
        self._top_from = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            self._top_from[j] = self._top_from[j + 1] + space.table[j][space.positions[j]]
        root = (0,) * n
        self._frontier = [(0, root)]
        self.stats.nodes_generated = 1
        self.stats.hold(1)
        self.trace = trace

    def _examine(self, k, clock):
        space, stats = self.space, self.stats
        table, pos, high = space.table, space.positions, space._high
        prev_twin, top_from = self._prev_twin, self._top_from
        frontier = self._frontier
        n = space.n
        found = []
        while frontier and frontier[0][0] == k:
            clock.poll()
            cost, vec = heapq.heappop(frontier)
            if self.trace is not None:
                self.trace.append(cost)
            stats.condorcet_checks += 1
            total = 0
            for row, s in zip(table, vec):
                total += row[s]
            if total & high == high:
                found.append(vec)
                continue
            last = n - 1
            while last > 0 and vec[last] == 0:
                last -= 1
            prefix = 0
            for i in range(last):
                prefix += table[i][vec[i]]
            for j in range(last, n):
                s = vec[j]
                twin = prev_twin[j]
                if s < pos[j] and (twin < 0 or s < vec[twin]):
                    if prefix + top_from[j] & high == high:
                        child = vec[:j] + (s + 1,) + vec[j + 1 :]
                        heapq.heappush(frontier, (k + 1, child))
                        stats.nodes_generated += 1
                prefix += table[j][s]
            stats.hold(len(frontier))
        return self._unfold(found)

    def _unfold(self, canonical: list) -> list:
        """All arrangements of each canonical solution among identical voters."""
        if not canonical:
            return []
        groups = [g for g in self._groups.values() if len(g) > 1]
        out = []
        for vec in canonical:
            partial = [list(vec)]
            for members in groups:
                values = [vec[i] for i in members]
                nxt = []
                for arrangement in _multiset_permutations(values):
                    for base in partial:
                        cand = base.copy()
                        for i, v in zip(members, arrangement):
                            cand[i] = v
                        nxt.append(cand)
                partial = nxt
            out.extend(tuple(v) for v in partial)
        return out


def _multiset_permutations(values: list[int]):
    """Distinct orderings of ``values`` in lexicographic order."""
    items = sorted(values)
    n = len(items)
    while True:
        yield list(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1 :] = reversed(items[i + 1 :])
