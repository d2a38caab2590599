"""Profiles, pairwise majorities and the Condorcet winner.

Builds a small election by hand, shows the majority tallies, then moves
one candidate up a ballot to see how a single swap changes the outcome.
"""

from dodgson import (
    apply_swaps,
    borda_count,
    condorcet_winner,
    format_profile,
    pairwise_tally,
    parse_profile,
    position_table,
)

ELECTION = """\
# three voters, three candidates
3 3
B A C
B A C
A B C
"""


def main():
    pp = parse_profile(ELECTION)
    print(format_profile(pp))

    print("pairwise wins (row beats column):")
    for a in pp.alternatives:
        row = [pairwise_tally(pp, a, b) if a != b else "-" for b in pp.alternatives]
        print(f"  {a}: {row}")
    print("Condorcet winner:", condorcet_winner(pp))
    print("Borda counts:", {a: borda_count(pp, a) for a in pp.alternatives})

    # A sits second on the first two ballots; one swap on either lifts it
    print("\nposition table for A:", position_table(pp, "A"))
    edited = apply_swaps(pp, "A", (1, 0, 0))
    print(format_profile(edited))
    print("Condorcet winner after one swap:", condorcet_winner(edited))

    # with an even electorate a tie is not a majority
    tied = parse_profile("2 2\nA B\nB A\n")
    print("\nsymmetric pair, Condorcet winner:", condorcet_winner(tied))


if __name__ == "__main__":
    main()
