"""Command-line front end: ``dodgson {score,winner,gen,analyze,bench,sweep}``.

Exit codes: 0 success, 2 inconclusive (time ran out), 64 usage error,
65 malformed profile, 70 search space above the entry cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, bench
from .generate import generate_impartial_culture
from .profile import ProfileError, ProfileFormatError, format_profile, parse_profile
from .scorers import (
    DEFAULT_ENTRY_CAP,
    ScoreBudget,
    ScorerKind,
    SearchAbandoned,
    SpaceTooLarge,
    score,
)
from .tournament import TournamentStrategy, run_tournament

EXIT_OK = 0
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_SOFTWARE = 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        if path == "-":
            return parse_profile(sys.stdin.read())
        with open(path, encoding="utf-8") as fh:
            return parse_profile(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_score(args) -> int:
    pp = _load(args.file)
    if args.candidate not in pp:
        raise UsageError(f"unknown candidate {args.candidate!r}")
    budget = ScoreBudget(max_millis=args.timeout)
    try:
        res = score(args.scorer, pp, args.candidate, budget, entry_cap=args.entry_cap)
    except SearchAbandoned as stop:
        if args.json:
            _emit({
                "candidate": stop.candidate,
                "conclusive": False,
                "lower_bound": stop.lower_bound,
                "stats": stop.stats.as_dict(),
            })
        else:
            print(f"candidate: {stop.candidate}")
            print(f"timeout: score >= {stop.lower_bound}")
        return EXIT_INCONCLUSIVE
    if args.json:
        _emit({
            "candidate": res.candidate,
            "conclusive": True,
            "score": res.score,
            "minimal_solutions": [list(v) for v in res.minimal_solutions],
            "stats": res.stats.as_dict(),
        })
    else:
        st = res.stats
        print(f"candidate: {res.candidate}")
        print(f"score: {res.score}")
        print(f"minimal solutions: {len(res.minimal_solutions)}")
        for v in res.minimal_solutions:
            print("  " + " ".join(map(str, v)))
        print(f"condorcet checks: {st.condorcet_checks}")
        print(f"nodes generated: {st.nodes_generated}")
        print(f"elapsed ms: {st.elapsed:.3f}")
    return EXIT_OK


def cmd_winner(args) -> int:
    pp = _load(args.file)
    strategy = TournamentStrategy(args.strategy)
    scorer = ScorerKind(args.scorer)
    if strategy.prunes and not scorer.layered:
        raise UsageError(f"strategy {strategy.value} cannot use scorer {scorer.value}")
    out = run_tournament(
        pp, strategy, ScoreBudget(max_millis=args.timeout), scorer, entry_cap=args.entry_cap
    )
    if args.json:
        _emit({
            "winners": list(out.winners),
            "winning_score": out.winning_score,
            "conclusive": out.conclusive,
            "floor": out.floor,
            "per_candidate": {
                a: {"status": c.status, "value": c.value} for a, c in out.per_candidate.items()
            },
            "condorcet_checks": out.total_checks,
        })
    else:
        if out.conclusive:
            label = "winner" if len(out.winners) == 1 else "winners"
            print(f"{label}: {', '.join(out.winners)} (score {out.winning_score})")
        else:
            print(f"inconclusive: no alternative better than {out.floor}")
        for a, c in out.per_candidate.items():
            print(f"  {a}: {c}")
    return EXIT_OK if out.conclusive else EXIT_INCONCLUSIVE


def cmd_gen(args) -> int:
    if args.voters < 1 or args.alts < 1:
        raise UsageError("--voters and --alts must be at least 1")
    sys.stdout.write(format_profile(generate_impartial_culture(args.voters, args.alts, args.seed)))
    return EXIT_OK


def cmd_analyze(args) -> int:
    if args.voters < 1 or args.alts_max < 1:
        raise UsageError("--voters and --alts-max must be at least 1")
    rows = analysis.emit_table(args.voters, range(1, args.alts_max + 1))
    if args.pretty:
        sys.stdout.write(analysis.table_pretty(rows))
    else:
        sys.stdout.write(analysis.table_csv(rows))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.runs < 1 or args.voters < 1 or args.alts < 1:
        raise UsageError("--runs, --voters and --alts must be at least 1")
    try:
        scorers = [ScorerKind(s.strip()) for s in args.scorers.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = bench.run_average_benchmark(
        args.voters, args.alts, args.runs, args.seed, scorers, args.mode
    )
    sys.stdout.write(bench.stats_csv(rows))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.window <= 0 or args.reps < 1:
        raise UsageError("--window must be positive and --reps at least 1")
    rows = bench.run_range_sweep(
        args.window, args.reps, args.solver, args.odd_n,
        n_values=args.n, seed_base=args.seed, m_limit=args.m_limit,
    )
    sys.stdout.write(bench.sweep_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dodgson", description="Exact Dodgson scores and winners.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    scorers = [k.value for k in ScorerKind]

    s = sub.add_parser("score", help="Dodgson score of one candidate")
    s.add_argument("file")
    s.add_argument("--candidate", required=True)
    s.add_argument("--scorer", choices=scorers, default="icr")
    s.add_argument("--timeout", type=float, metavar="MS")
    s.add_argument("--entry-cap", type=int, default=DEFAULT_ENTRY_CAP)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_score)

    w = sub.add_parser("winner", help="Dodgson winner(s) of a profile")
    w.add_argument("file")
    w.add_argument("--strategy", choices=[t.value for t in TournamentStrategy],
                   default="concurrent-ordered")
    w.add_argument("--scorer", choices=scorers, default="icr")
    w.add_argument("--timeout", type=float, metavar="MS")
    w.add_argument("--entry-cap", type=int, default=DEFAULT_ENTRY_CAP)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_winner)

    g = sub.add_parser("gen", help="seeded impartial-culture profile")
    g.add_argument("--voters", type=int, required=True)
    g.add_argument("--alts", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="search-space size table")
    a.add_argument("--voters", type=int, required=True)
    a.add_argument("--alts-max", type=int, required=True)
    a.add_argument("--pretty", action="store_true")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bench", help="repeated-run statistics")
    b.add_argument("--voters", type=int, default=8)
    b.add_argument("--alts", type=int, default=5)
    b.add_argument("--runs", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--mode", choices=bench.MODES, default="standard")
    b.add_argument("--scorers", default=",".join(scorers))
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("sweep", help="largest m solvable within a time window")
    r.add_argument("--window", type=float, required=True, metavar="MS")
    r.add_argument("--reps", type=int, default=5)
    r.add_argument("--odd-n", action="store_true")
    r.add_argument("--solver", choices=scorers + [t.value for t in TournamentStrategy],
                   default="concurrent-ordered")
    r.add_argument("--n", type=int, action="append", help="only these n (repeatable)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--m-limit", type=int, default=256)
    r.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dodgson: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProfileFormatError as exc:
        print(f"dodgson: {args.file}: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except ProfileError as exc:
        print(f"dodgson: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except SpaceTooLarge as exc:
        print(f"dodgson: {exc}", file=sys.stderr)
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
