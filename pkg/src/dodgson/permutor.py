"""Bounded integer compositions, one score layer at a time.

A layer ``k`` holds every swap profile ``v`` with ``sum(v) == k`` and
``v[i] <= bounds[i]``. The cursor walks a layer in lexicographic order
(voter 0 most significant) with O(n) state, so a consumer can stop at any
point without paying for the rest of the layer.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .profile import SwapProfile


class CompositionCursor(Iterator[SwapProfile]):
    """Iterator over one layer of bounded compositions.

    >>> list(CompositionCursor(2, (2, 2)))
    [(0, 2), (1, 1), (2, 0)]
    """

    def __init__(self, target: int, bounds: Sequence[int]):
        if target < 0:
            raise ValueError("target must be non-negative")
        self.target = target
        self.bounds = tuple(bounds)
        n = len(self.bounds)
        # capacity[j] = sum(bounds[j:])
        self._capacity = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            self._capacity[j] = self._capacity[j + 1] + self.bounds[j]
        self._current: list[int] | None = None
        self._exhausted = target > self._capacity[0]
        self._started = False

    def _fill(self, vec: list[int], start: int, remainder: int) -> None:
        # smallest lexicographic tail: push as much as possible to the back
        cap = self._capacity
        for j in range(start, len(vec)):
            v = remainder - cap[j + 1]
            v = v if v > 0 else 0
            vec[j] = v
            remainder -= v

    def __next__(self) -> SwapProfile:
        if self._exhausted:
            raise StopIteration
        vec = self._current
        if not self._started:
            self._started = True
            vec = [0] * len(self.bounds)
            self._fill(vec, 0, self.target)
            self._current = vec
            return tuple(vec)

        bounds = self.bounds
        suffix = 0
        for i in range(len(vec) - 1, -1, -1):
            if suffix and vec[i] < bounds[i]:
                vec[i] += 1
                self._fill(vec, i + 1, suffix - 1)
                return tuple(vec)
            suffix += vec[i]
        self._exhausted = True
        self._current = None
        raise StopIteration

    @property
    def exhausted(self) -> bool:
        return self._exhausted


def create_permutor(target: int, bounds: Sequence[int]) -> CompositionCursor:
    return CompositionCursor(target, bounds)


def layer_sizes(bounds: Sequence[int]) -> list[int]:
    """Sizes of every layer ``0..sum(bounds)``.

    Coefficients of the product of ``1 + x + ... + x**b`` over all bounds.
    """
    poly = [1]
    for b in bounds:
        out = [0] * (len(poly) + b)
        # sliding-window sum of width b + 1
        window = 0
        for k in range(len(out)):
            if k < len(poly):
                window += poly[k]
            if k - b - 1 >= 0:
                window -= poly[k - b - 1]
            out[k] = window
        poly = out
    return poly


def layer_size(target: int, bounds: Sequence[int]) -> int:
    if target < 0:
        raise ValueError("target must be non-negative")
    sizes = layer_sizes(bounds)
    return sizes[target] if target < len(sizes) else 0
