"""Seeded impartial-culture profiles.

The generator is a SplitMix64 stream driving a Fisher-Yates shuffle, so the
same ``(n, m, seed)`` yields the same profile on every platform.
"""

from __future__ import annotations

from .profile import PreferenceProfile

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            items[i], items[j] = items[j], items[i]


def alternative_names(m: int) -> list[str]:
    return [f"A{k}" for k in range(1, m + 1)]


def generate_impartial_culture(n: int, m: int, seed: int) -> PreferenceProfile:
    """``n`` independent uniform rankings of ``A1..Am``, drawn from one stream."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    rng = SplitMix64(seed)
    names = alternative_names(m)
    ballots = []
    for _ in range(n):
        ballot = names.copy()
        rng.shuffle(ballot)
        ballots.append(ballot)
    return PreferenceProfile(ballots)


def identical_profile(n: int, m: int) -> PreferenceProfile:
    """``n`` copies of ``(A1, ..., Am)``: the worst case for ``Am``."""
    return PreferenceProfile([alternative_names(m)] * n)
