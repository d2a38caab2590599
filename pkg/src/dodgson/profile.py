"""Preference profiles, pairwise majorities and swap application.

A profile is a sequence of strict rankings (ballots), best first. The order
in which alternatives are *declared* is the order of the first ballot; it
is used wherever a deterministic tie-break between alternatives is needed.

Swap profiles are tuples of non-negative integers, one per voter, giving
how many adjacent upward swaps the examined alternative makes in that
voter's ballot. Position tables hold the 0-based rank of the examined
alternative in every ballot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Alternative = str
Ballot = tuple[str, ...]
SwapProfile = tuple[int, ...]
PositionTable = tuple[int, ...]


class ProfileError(ValueError):
    """Raised for structurally invalid profiles or unknown alternatives."""


class ProfileFormatError(ProfileError):
    """Raised by :func:`parse_profile`; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class SwapBoundError(ProfileError):
    """A swap count exceeds the alternative's rank in that ballot."""


@dataclass(frozen=True)
class PreferenceProfile:
    """An immutable election: ``n`` ballots over the same ``m`` alternatives."""

    ballots: tuple[Ballot, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, ballots: Iterable[Sequence[str]]):
        ballots = tuple(tuple(b) for b in ballots)
        if not ballots:
            raise ProfileError("a profile needs at least one ballot")
        first = ballots[0]
        if not first:
            raise ProfileError("a profile needs at least one alternative")
        for name in first:
            _check_name(name)
        if len(set(first)) != len(first):
            raise ProfileError("ballot 1 is not a permutation (duplicate alternative)")
        expected = set(first)
        for number, ballot in enumerate(ballots[1:], start=2):
            if len(ballot) != len(first) or set(ballot) != expected:
                raise ProfileError(f"ballot {number} is not a permutation")
        object.__setattr__(self, "ballots", ballots)
        object.__setattr__(self, "_index", {a: k for k, a in enumerate(first)})

    @property
    def alternatives(self) -> tuple[Alternative, ...]:
        return self.ballots[0]

    @property
    def n(self) -> int:
        return len(self.ballots)

    @property
    def m(self) -> int:
        return len(self.ballots[0])

    def index(self, a: Alternative) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise ProfileError(f"unknown alternative {a!r}") from None

    def __contains__(self, a: object) -> bool:
        return a in self._index

    @cached_property
    def ranks(self) -> np.ndarray:
        """``ranks[i, k]`` is the 0-based rank of alternative ``k`` in ballot ``i``."""
        out = np.empty((self.n, self.m), dtype=np.int64)
        for i, ballot in enumerate(self.ballots):
            for r, a in enumerate(ballot):
                out[i, self._index[a]] = r
        out.setflags(write=False)
        return out

    def __str__(self) -> str:
        return format_profile(self)


def _check_name(name: object) -> None:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name):
        raise ProfileError(f"invalid alternative name {name!r}")


# --------------------------------------------------------------------------
# text format


def parse_profile(text: str) -> PreferenceProfile:
    """Parse the ``n m`` header followed by ``n`` ballot lines.

    Lines starting with ``#`` and blank lines are ignored.
    """
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ProfileFormatError(1, "missing 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise ProfileFormatError(lineno, "malformed header, expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if n < 1 or m < 1:
        raise ProfileFormatError(lineno, "n and m must be at least 1")
    body = rows[1:]
    if len(body) != n:
        last = body[-1][0] if body else lineno
        raise ProfileFormatError(last, f"header announces {n} ballots, found {len(body)}")

    alternatives: list[str] | None = None
    ballots = []
    for number, (lineno, tokens) in enumerate(body, start=1):
        if len(tokens) != m:
            raise ProfileFormatError(
                lineno, f"ballot {number} has {len(tokens)} alternatives, expected {m}"
            )
        if alternatives is None:
            if len(set(tokens)) != m:
                raise ProfileFormatError(lineno, "duplicate alternative name in ballot 1")
            alternatives = tokens
        elif set(tokens) != set(alternatives) or len(set(tokens)) != m:
            raise ProfileFormatError(lineno, f"ballot {number} is not a permutation")
        ballots.append(tokens)
    try:
        return PreferenceProfile(ballots)
    except ProfileError as exc:
        raise ProfileFormatError(body[0][0], str(exc)) from None


def format_profile(pp: PreferenceProfile) -> str:
    lines = [f"{pp.n} {pp.m}"]
    lines.extend(" ".join(b) for b in pp.ballots)
    return "\n".join(lines) + "\n"


def read_profile(path) -> PreferenceProfile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


# --------------------------------------------------------------------------
# pairwise majority


def pairwise_tally(pp: PreferenceProfile, a: Alternative, b: Alternative) -> int:
    """Number of ballots ranking ``a`` strictly above ``b``."""
    ia, ib = pp.index(a), pp.index(b)
    if ia == ib:
        raise ProfileError("pairwise tally needs two distinct alternatives")
    return int(np.count_nonzero(pp.ranks[:, ia] < pp.ranks[:, ib]))


def is_condorcet_winner(pp: PreferenceProfile, a: Alternative) -> bool:
    """True iff ``a`` beats every other alternative by a strict majority.

    Ties lose, so with an even number of voters a 50/50 split blocks ``a``.
    """
    ia = pp.index(a)
    ranks = pp.ranks
    wins = np.count_nonzero(ranks[:, [ia]] < ranks, axis=0)
    wins[ia] = pp.n  # a need not beat itself
    return bool(np.all(2 * wins > pp.n))


def condorcet_winner(pp: PreferenceProfile) -> Alternative | None:
    for a in pp.alternatives:
        if is_condorcet_winner(pp, a):
            return a
    return None


def position_table(pp: PreferenceProfile, a: Alternative) -> PositionTable:
    k = pp.index(a)
    return tuple(int(r) for r in pp.ranks[:, k])


def apply_swaps(pp: PreferenceProfile, a: Alternative, swaps: Sequence[int]) -> PreferenceProfile:
    """Move ``a`` up by ``swaps[i]`` adjacent swaps in ballot ``i``.

    Returns a new profile; the input is left untouched.
    """
    positions = position_table(pp, a)
    if len(swaps) != pp.n:
        raise ProfileError(f"swap profile has length {len(swaps)}, expected {pp.n}")
    ballots = []
    for i, (ballot, s, p) in enumerate(zip(pp.ballots, swaps, positions)):
        if s < 0 or s > p:
            raise SwapBoundError(
                f"voter {i}: {s} swaps requested but {a!r} is at position {p}"
            )
        if s:
            ballot = ballot[: p - s] + (a,) + ballot[p - s : p] + ballot[p + 1 :]
        ballots.append(ballot)
    return PreferenceProfile(ballots)


def borda_count(pp: PreferenceProfile, a: Alternative) -> int:
    """Points per ballot equal to the number of alternatives ranked below ``a``."""
    k = pp.index(a)
    return int(pp.n * (pp.m - 1) - pp.ranks[:, k].sum())
