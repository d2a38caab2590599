"""Digest of everything a seed determines: profiles, scores, solutions, counters.

Run as a script it prints the hex digest, so two fresh interpreters can be
compared.
"""

import hashlib
import json

from dodgson import (
    TournamentStrategy,
    format_profile,
    generate_impartial_culture,
    run_tournament,
    score,
)
from dodgson.bench import run_average_benchmark

KINDS = ("baseline", "dfs", "ucs", "sc", "icr")


def records():
    for r in range(40):
        n, m = (3, 5, 7, 4)[r % 4], (3, 4, 5)[r % 3]
        pp = generate_impartial_culture(n, m, 1_000_003 * r)
        yield "profile", format_profile(pp)
        for a in pp.alternatives:
            for kind in KINDS:
                res = score(kind, pp, a)
                st = res.stats
                counters = st.condorcet_checks, st.nodes_generated
                yield kind, a, res.score, res.minimal_solutions, counters
        for strategy in TournamentStrategy:
            out = run_tournament(pp, strategy)
            yield strategy.value, out.key(), out.total_checks
    for mode in ("standard", "threaded"):
        for s in run_average_benchmark(6, 4, 10, 77, KINDS, mode):
            yield "bench", mode, s.scorer, s.avg_calls


def digest() -> str:
    h = hashlib.sha256()
    for rec in records():
        h.update(json.dumps(rec, default=repr).encode())
        h.update(b"\n")
    return h.hexdigest()


if __name__ == "__main__":
    print(digest())
