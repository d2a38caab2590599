import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dodgson import (
    PreferenceProfile,
    ScoreBudget,
    ScorerKind,
    SearchAbandoned,
    SpaceTooLarge,
    apply_swaps,
    borda_count,
    generate_impartial_culture,
    identical_profile,
    is_condorcet_winner,
    layer_size,
    position_table,
    score,
)
from dodgson.scorers import SCSearch, SwapSpace, UCSSearch
from oracle import brute_force

KINDS = list(ScorerKind)
THREE = PreferenceProfile([("B", "A", "C"), ("B", "A", "C"), ("A", "B", "C")])
FIVE_SAME = PreferenceProfile([("A", "B", "C")] * 5)


def random_profiles(count, n, m, seed0=1000):
    return [generate_impartial_culture(n, m, seed0 + r) for r in range(count)]


@pytest.mark.parametrize("kind", KINDS)
class TestExamples:
    def test_condorcet_winner_scores_zero(self, kind):
        res = score(kind, THREE, "B")
        assert res.score == 0
        assert res.minimal_solutions == ((0, 0, 0),)

    def test_one_swap(self, kind):
        res = score(kind, THREE, "A")
        assert res.score == 1
        assert set(res.minimal_solutions) == {(1, 0, 0), (0, 1, 0)}

    def test_bottom_candidate(self, kind):
        assert score(kind, THREE, "C").score == 4

    def test_five_identical(self, kind):
        res = score(kind, FIVE_SAME, "C")
        assert res.score == 6
        assert len(res.minimal_solutions) == math.comb(5, 3)

    def test_unknown_candidate(self, kind):
        with pytest.raises(Exception, match="'Z'"):
            score(kind, THREE, "Z")

    def test_solutions_are_valid(self, kind):
        res = score(kind, FIVE_SAME, "B")
        for v in res.minimal_solutions:
            assert sum(v) == res.score
            assert is_condorcet_winner(apply_swaps(FIVE_SAME, "B", v), "B")


def test_kind_accepts_strings():
    assert score("dfs", THREE, "A").score == 1


class TestSwapSpace:
    @given(st.integers(0, 10**6), st.integers(1, 8), st.integers(1, 6))
    @settings(max_examples=60, deadline=None)
    def test_packed_check_matches_profile_check(self, seed, n, m):
        pp = generate_impartial_culture(n, m, seed)
        a = pp.alternatives[seed % m]
        space = SwapSpace(pp, a)
        rng = np.random.default_rng(seed)
        vecs = np.array([[rng.integers(0, p + 1) for p in space.positions] for _ in range(20)])
        fast = space.wins_many(vecs)
        for v, f in zip(vecs, fast):
            slow = is_condorcet_winner(apply_swaps(pp, a, v.tolist()), a)
            assert space.wins(v.tolist()) == slow == bool(f)

    def test_wide_counters(self):
        # 300 voters need 10-bit fields; make sure nothing overflows
        pp = generate_impartial_culture(301, 4, 5)
        for a in pp.alternatives:
            space = SwapSpace(pp, a)
            assert space.wins(space.positions) is True
            assert space.wins([0] * pp.n) == is_condorcet_winner(pp, a)


class TestBaseline:
    def test_materializes_everything(self):
        res = score("baseline", FIVE_SAME, "C")
        assert res.stats.nodes_generated == 3**5 == 243
        assert res.stats.condorcet_checks == 243

    def test_trivial(self):
        res = score("baseline", PreferenceProfile([("A", "B")]), "A")
        assert res.stats.nodes_generated == 1
        assert res.score == 0

    def test_entry_cap(self):
        with pytest.raises(SpaceTooLarge) as err:
            score("baseline", FIVE_SAME, "C", entry_cap=100)
        assert err.value.entries == 243

    def test_default_cap_refuses_huge_space(self):
        pp = identical_profile(9, 9)
        with pytest.raises(SpaceTooLarge):
            score("baseline", pp, "A9")


class TestDFS:
    def test_visits_every_leaf(self):
        for pp in random_profiles(10, 5, 4):
            for a in pp.alternatives:
                res = score("dfs", pp, a)
                leaves = math.prod(p + 1 for p in position_table(pp, a))
                assert res.stats.condorcet_checks == leaves

    def test_depth_bounded_state(self):
        res = score("dfs", FIVE_SAME, "C")
        assert res.stats.peak_states <= FIVE_SAME.n + 1

    def test_prune_flag_same_answer_fewer_checks(self):
        for pp in random_profiles(20, 5, 4):
            for a in pp.alternatives:
                plain = score("dfs", pp, a)
                pruned = score("dfs", pp, a, dfs_prune=True)
                assert pruned == plain
                assert pruned.stats.condorcet_checks <= plain.stats.condorcet_checks


class TestUCS:
    def test_condorcet_winner_single_check(self):
        assert score("ucs", THREE, "B").stats.condorcet_checks == 1

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_worst_case_bound(self, n):
        pp = identical_profile(n, 5)
        for a in pp.alternatives:
            i_x = position_table(pp, a)[0] + 1
            res = score("ucs", pp, a)
            assert res.stats.condorcet_checks <= i_x ** math.ceil(n / 2)

    def test_pops_never_decrease(self):
        for pp in random_profiles(30, 5, 4):
            for a in pp.alternatives:
                trace = []
                search = UCSSearch(SwapSpace(pp, a), trace=trace)
                search.drive()
                assert trace == sorted(trace)
                assert trace[-1] == search.score

    def test_twin_voters_unfolded(self):
        pp = PreferenceProfile([("A", "B", "C")] * 3 + [("C", "B", "A")] * 2)
        assert score("ucs", pp, "C") == score("baseline", pp, "C")


class TestLayered:
    def test_sc_first_layer_single_entry(self):
        search = SCSearch(SwapSpace(FIVE_SAME, "C"))
        search.run_layer()
        assert search.stats.nodes_generated == 1

    def test_sc_counts_layers(self):
        search = SCSearch(SwapSpace(FIVE_SAME, "C"))
        res = search.drive()
        bounds = position_table(FIVE_SAME, "C")
        assert res.stats.nodes_generated == sum(layer_size(j, bounds) for j in range(res.score + 1))

    def test_sc_layer_cap(self):
        with pytest.raises(SpaceTooLarge) as err:
            score("sc", FIVE_SAME, "C", entry_cap=20)
        assert err.value.layer == 3  # layer sizes 1, 5, 15, 30, ...

    def test_icr_streams(self):
        res = score("icr", identical_profile(7, 5), "A5")
        assert res.stats.peak_states == 1

    def test_icr_and_sc_check_the_same_layers(self):
        for pp in random_profiles(200, 5, 4):
            for a in pp.alternatives:
                icr, sc = score("icr", pp, a), score("sc", pp, a)
                assert icr.stats.condorcet_checks == sc.stats.condorcet_checks

    def test_score_cap_abandons(self):
        with pytest.raises(SearchAbandoned) as err:
            score("icr", FIVE_SAME, "C", ScoreBudget(score_cap=3))
        assert err.value.reason == "cap"
        assert err.value.lower_bound == 4

    def test_cap_equal_to_score_completes(self):
        assert score("ucs", FIVE_SAME, "C", ScoreBudget(score_cap=6)).score == 6

    @pytest.mark.parametrize("kind", ["ucs", "sc", "icr"])
    def test_timeout_bound_is_certified(self, kind):
        pp = generate_impartial_culture(15, 7, 4)
        a = min(pp.alternatives, key=lambda x: borda_count(pp, x))
        with pytest.raises(SearchAbandoned) as err:
            score(kind, pp, a, ScoreBudget(max_millis=5))
        stop = err.value
        assert stop.reason == "timeout"
        assert 0 <= stop.lower_bound <= sum(position_table(pp, a))

    @pytest.mark.parametrize("kind", ["baseline", "dfs"])
    def test_full_space_timeout(self, kind):
        pp = identical_profile(8, 6)
        with pytest.raises(SearchAbandoned) as err:
            score(kind, pp, "A6", ScoreBudget(max_millis=1))
        assert err.value.lower_bound in (0, 1)


@pytest.mark.parametrize("n, m", [(5, 4), (3, 5), (4, 3), (6, 3)])
def test_all_kinds_agree_with_oracle(n, m):
    for pp in random_profiles(25, n, m, seed0=77 * n + m):
        for a in pp.alternatives:
            expected = brute_force(pp, a)
            for kind in KINDS:
                res = score(kind, pp, a)
                assert (res.score, list(res.minimal_solutions)) == expected, (kind, pp, a)


def test_cross_scorer_equivalence_200_profiles():
    for pp in random_profiles(200, 5, 4, seed0=9000):
        for a in pp.alternatives:
            ref = score("baseline", pp, a)
            for kind in KINDS[1:]:
                assert score(kind, pp, a) == ref


def test_lower_layers_hold_no_solution():
    for pp in random_profiles(40, 4, 4, seed0=31):
        for a in pp.alternatives:
            res = score("icr", pp, a)
            assert brute_force(pp, a, max_layer=res.score - 1) is None if res.score else True
            assert res.score <= sum(position_table(pp, a))
            assert (res.score == 0) == is_condorcet_winner(pp, a)


def test_abandoned_bound_is_sound():
    for pp in random_profiles(40, 5, 4, seed0=555):
        for a in pp.alternatives:
            true_score = brute_force(pp, a)[0]
            for cap in range(true_score):
                with pytest.raises(SearchAbandoned) as err:
                    score("ucs", pp, a, ScoreBudget(score_cap=cap))
                assert err.value.lower_bound <= true_score
                assert brute_force(pp, a, max_layer=err.value.lower_bound - 1) is None
