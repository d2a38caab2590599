"""Closed-form search-space sizes and the UCS exploration-rate table.

All quantities are exact Python integers.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable


def phi_basic(n: int, m: int) -> int:
    """Total swap space over all ``m`` alternatives in the worst case: sum of i**n."""
    _check(n, m)
    return sum(i**n for i in range(1, m + 1))


def c_worst(n: int, m: int) -> int:
    """UCS exploration bound over all alternatives: sum of i**ceil(n/2)."""
    _check(n, m)
    e = -(-n // 2)
    return sum(i**e for i in range(1, m + 1))


def c_worst_candidate(n: int, position: int) -> int:
    """UCS exploration bound for one alternative at 0-based ``position``."""
    return (position + 1) ** (-(-n // 2))


def phi_base_case_bound(n: int, m: int) -> int:
    """``ceil(m! ** (n/m + 1) * m)``, evaluated exactly.

    The value equals the m-th root of ``(m * m!)**m * m!**n``, so the
    ceiling is an integer root and no floating point is involved.
    """
    _check(n, m)
    f = math.factorial(m)
    if n % m == 0:
        return f ** (n // m + 1) * m
    return _iroot_ceil((m * f) ** m * f**n, m)


def best_case_score_bound(n: int, m: int) -> int:
    """``max(0, floor((n/m - 1) * (1 + 2 + ... + floor(n/2))))``."""
    _check(n, m)
    h = n // 2
    triangle = h * (h + 1) // 2
    return max(0, ((n - m) * triangle) // m)


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r with r**k >= x."""
    if x < 2:
        return x
    r = 1 << -(-x.bit_length() // k)  # r**k > x
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    return r if r**k == x else r + 1


def _check(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


@dataclass(frozen=True)
class SpaceEstimate:
    n: int
    m: int
    phi: int
    c: int

    @property
    def ratio_tenths(self) -> int:
        """``100 * c / phi`` in tenths of a percent, rounded half up."""
        return (2000 * self.c + self.phi) // (2 * self.phi)

    @property
    def ratio(self) -> str:
        t = self.ratio_tenths
        return f"{t // 10}.{t % 10}"


def emit_table(n_fixed: int, m_range: Iterable[int]) -> list[SpaceEstimate]:
    return [
        SpaceEstimate(n_fixed, m, phi_basic(n_fixed, m), c_worst(n_fixed, m))
        for m in m_range
    ]


def table_csv(rows: Iterable[SpaceEstimate]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "phi", "c", "ratio_percent"])
    for r in rows:
        w.writerow([r.m, r.phi, r.c, r.ratio])
    return buf.getvalue()


def table_pretty(rows: Iterable[SpaceEstimate]) -> str:
    rows = list(rows)
    lines = [f"{'n, m':>8} {'phi':>12} {'c':>10} {'c/phi':>8}"]
    for r in rows:
        lines.append(f"{f'{r.n}, {r.m}':>8} {r.phi:>12} {r.c:>10} {r.ratio + '%':>8}")
    return "\n".join(lines) + "\n"
