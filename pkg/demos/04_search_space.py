"""How big the swap space is and how little of it UCS visits.

The closed-form counts are checked against the instrumented scorers on
profiles of identical ballots, the hardest case for a single candidate.
"""

from dodgson import c_worst, emit_table, identical_profile, phi_basic, score, table_pretty


def main():
    print(table_pretty(emit_table(5, range(1, 11))))

    print("measured on identical ballots, m = 5:")
    for n in (3, 5, 7):
        pp = identical_profile(n, 5)
        nodes = sum(score("baseline", pp, a).stats.nodes_generated for a in pp.alternatives)
        checks = sum(score("ucs", pp, a).stats.condorcet_checks for a in pp.alternatives)
        print(
            f"  n={n}: baseline nodes {nodes} (formula {phi_basic(n, 5)}), "
            f"ucs checks {checks} (bound {c_worst(n, 5)})"
        )


if __name__ == "__main__":
    main()
