"""Shared types for the exact Dodgson scorers."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from ..profile import (
    Alternative,
    PositionTable,
    PreferenceProfile,
    SwapProfile,
    apply_swaps,
    position_table,
)

DEFAULT_ENTRY_CAP = 10**8


class ScorerKind(enum.Enum):
    BASELINE = "baseline"
    DFS = "dfs"
    UCS = "ucs"
    SC = "sc"
    ICR = "icr"

    @property
    def layered(self) -> bool:
        """Whether the scorer proves minimality layer by layer (needed for pruning)."""
        return self in (ScorerKind.UCS, ScorerKind.SC, ScorerKind.ICR)


@dataclass(frozen=True)
class ScoreBudget:
    """Optional limits on one search.

    ``score_cap`` abandons a layered search as soon as it would examine a
    layer strictly above the cap. ``max_millis`` is a wall-clock limit.
    """

    max_millis: float | None = None
    score_cap: int | None = None

    def deadline(self, start: float) -> float | None:
        return None if self.max_millis is None else start + self.max_millis / 1000.0


@dataclass
class InstrumentationCounters:
    condorcet_checks: int = 0
    nodes_generated: int = 0
    elapsed: float = 0.0  # milliseconds
    peak_states: int = 0  # largest number of swap states held at once

    def hold(self, states: int) -> None:
        if states > self.peak_states:
            self.peak_states = states

    def as_dict(self) -> dict:
        return {
            "condorcet_checks": self.condorcet_checks,
            "nodes_generated": self.nodes_generated,
            "elapsed_ms": self.elapsed,
            "peak_states": self.peak_states,
        }


@dataclass(frozen=True)
class ScoreResult:
    candidate: Alternative
    score: int
    minimal_solutions: tuple[SwapProfile, ...]  # sorted, no duplicates
    stats: InstrumentationCounters = field(compare=False)
    kind: ScorerKind | None = field(default=None, compare=False)


class SearchAbandoned(Exception):
    """The search stopped before proving the exact score.

    ``lower_bound`` is certified: every layer below it was fully examined
    and holds no solution.
    """

    def __init__(self, candidate, lower_bound: int, reason: str, stats: InstrumentationCounters):
        self.candidate = candidate
        self.lower_bound = lower_bound
        self.reason = reason  # "timeout" or "cap"
        self.stats = stats
        super().__init__(f"{candidate}: abandoned ({reason}), score >= {lower_bound}")


class SpaceTooLarge(Exception):
    """Materializing the requested space would exceed the entry cap."""

    def __init__(self, entries: int, cap: int, layer: int | None = None):
        self.entries = entries
        self.cap = cap
        self.layer = layer
        where = "search space" if layer is None else f"layer {layer}"
        super().__init__(f"{where} has {entries} entries, cap is {cap}")


class _Timeout(Exception):
    pass


class Clock:
    """Deadline checks amortized over many cheap steps."""

    __slots__ = ("deadline", "_tick")

    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self._tick = 0

    def poll(self, every: int = 512) -> None:
        if self.deadline is None:
            return
        self._tick += 1
        if self._tick >= every:
            self._tick = 0
            self.check()

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise _Timeout


class SwapSpace:
    """One candidate's swap space with a constant-time-per-voter winner test.

    Moving ``a`` up ``s`` places in ballot ``i`` makes it beat exactly the
    alternatives whose rank is at least ``positions[i] - s``. For each voter
    and swap count the beaten set is packed into one integer holding a small
    counter per rival; summing those integers over voters tallies every
    pairwise contest at once. Counters start biased so that the top bit of
    a field is set exactly when the tally reaches a strict majority.
    """

    def __init__(self, pp: PreferenceProfile, a: Alternative):
        self.profile = pp
        self.candidate = a
        self.positions: PositionTable = position_table(pp, a)
        n = pp.n
        ka = pp.index(a)
        self.n_rivals = pp.m - 1
        width = n.bit_length() + 1
        self.majority = n // 2 + 1
        bias = (1 << (width - 1)) - self.majority
        self._high = sum(1 << (j * width + width - 1) for j in range(self.n_rivals))
        base = sum(bias << (j * width) for j in range(self.n_rivals))

        def unit(b):
            k = pp.index(b)
            return 1 << ((k - (k > ka)) * width)

        # table[i][s]: packed tallies contributed by voter i after s swaps
        table = []
        for ballot, p in zip(pp.ballots, self.positions):
            acc = sum(unit(b) for b in ballot[p + 1 :])
            row = [acc]
            for b in reversed(ballot[:p]):
                acc += unit(b)
                row.append(acc)
            table.append(row)
        table[0] = [t + base for t in table[0]]
        self.table = table

    @property
    def n(self) -> int:
        return len(self.positions)

    def wins(self, swaps: Sequence[int]) -> bool:
        """Would ``a`` be the Condorcet winner after applying ``swaps``?"""
        total = 0
        for row, s in zip(self.table, swaps):
            total += row[s]
        return total & self._high == self._high

    def packed(self, i: int, s: int) -> int:
        return self.table[i][s]

    def wins_packed(self, total: int) -> bool:
        return total & self._high == self._high

    def wins_many(self, vectors: np.ndarray, chunk: int = 1 << 16) -> np.ndarray:
        """Vectorized :meth:`wins` over the rows of an ``(N, n)`` integer array."""
        out = np.empty(len(vectors), dtype=bool)
        if self.n_rivals == 0:
            out[:] = True
            return out
        lookup = self._lookup
        voters = np.arange(self.n)
        for start in range(0, len(vectors), chunk):
            block = vectors[start : start + chunk]
            tallies = lookup[voters, block].sum(axis=1)
            out[start : start + chunk] = np.all(tallies >= self.majority, axis=1)
        return out

    @cached_property
    def _lookup(self) -> np.ndarray:
        # _lookup[i, s, j]: does the candidate beat rival j in ballot i after s swaps
        pp, ka = self.profile, self.profile.index(self.candidate)
        rivals = [k for k in range(pp.m) if k != ka]
        pos = np.asarray(self.positions)
        depth = int(pos.max()) + 1
        thresholds = pos[:, None] - np.arange(depth)[None, :]
        return (pp.ranks[:, None, rivals] >= thresholds[:, :, None]).astype(np.int32)

    def apply(self, swaps: Sequence[int]) -> PreferenceProfile:
        return apply_swaps(self.profile, self.candidate, swaps)

    def max_score(self) -> int:
        return sum(self.positions)
