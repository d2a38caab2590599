"""Five exact scorers, one answer, very different amounts of work.

Every scorer returns the same score and the same set of minimal swap
profiles; the counters show how much of the swap space each one touched.
"""

from dodgson import ScorerKind, generate_impartial_culture, identical_profile, score
from dodgson.permutor import layer_sizes
from dodgson.profile import position_table


def compare(pp, a):
    print(f"candidate {a}, positions {position_table(pp, a)}")
    print(f"  {'scorer':<9}{'score':>6}{'solutions':>10}{'checks':>9}{'nodes':>9}{'peak':>8}")
    for kind in ScorerKind:
        res = score(kind, pp, a)
        st = res.stats
        print(
            f"  {kind.value:<9}{res.score:>6}{len(res.minimal_solutions):>10}"
            f"{st.condorcet_checks:>9}{st.nodes_generated:>9}{st.peak_states:>8}"
        )


def main():
    # identical ballots: the last candidate needs a majority of voters to lift it to the top
    pp = identical_profile(5, 4)
    compare(pp, "A4")
    print("  layer sizes of its swap space:", layer_sizes(position_table(pp, "A4")))

    print()
    pp = generate_impartial_culture(7, 5, seed=2024)
    for a in pp.alternatives[:2]:
        compare(pp, a)


if __name__ == "__main__":
    main()
