"""Finding the winner without scoring everyone exactly.

Sequential strategies score candidates one by one; the pruning ones stop a
candidate as soon as it can no longer beat the best exact score found.
The concurrent strategies search all candidates a layer at a time.
"""

from dodgson import (
    PreferenceProfile,
    ScoreBudget,
    TournamentStrategy,
    generate_impartial_culture,
    run_tournament,
)


def show(pp, budget=ScoreBudget()):
    for strategy in TournamentStrategy:
        out = run_tournament(pp, strategy, budget)
        if out.conclusive:
            verdict = f"{', '.join(out.winners)} with score {out.winning_score}"
        else:
            verdict = f"inconclusive, nothing better than {out.floor}"
        print(f"  {strategy.value:<19}{out.total_checks:>8} checks  {verdict}")


def main():
    pp = generate_impartial_culture(9, 5, seed=11)
    print(pp)
    show(pp)

    out = run_tournament(pp, "concurrent-ordered")
    print("\nper-candidate results (concurrent-ordered):")
    for a, c in out.per_candidate.items():
        print(f"  {a}: {c}")

    # a cyclic profile with a costly winner, given only 5 ms
    names = [f"A{k}" for k in range(1, 8)]
    cyclic = PreferenceProfile([names[r % 7 :] + names[: r % 7] for r in range(15)])
    print("\n15 x 7 cyclic profile, 5 ms budget:")
    show(cyclic, ScoreBudget(max_millis=5))


if __name__ == "__main__":
    main()
