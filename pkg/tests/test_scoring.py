from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdp_select.errors import ValidationError
from lcdp_select.model import (
    CRITERION_ORDER,
    CriterionId,
    Platform,
    ScoreCard,
    WeightVector,
)
from lcdp_select.scoring import contributions, criterion_scores, rank, roll_up, total_score

from conftest import (
    GOLDEN_CONTRIBUTIONS,
    GOLDEN_SCORES,
    GOLDEN_TOTALS,
    GOLDEN_WEIGHTS,
    random_direct_project,
    random_sub_scorecard,
    random_weights,
)
from oracles import naive_total


def direct_card(pid: str, scores) -> ScoreCard:
    return ScoreCard.direct(pid, dict(zip(CRITERION_ORDER, scores)))


class TestRollUp:
    def test_constant_scores(self):
        scores = {f"s{i}": 5 for i in range(4)}
        weights = {f"s{i}": 0.25 for i in range(4)}
        assert roll_up(scores, weights) == 5.0

    def test_plain_mean(self):
        scores = dict(zip("abcd", (5, 4, 4, 5)))
        weights = {k: 0.25 for k in "abcd"}
        assert roll_up(scores, weights) == pytest.approx(4.5, abs=1e-12)

    def test_weighted_mean(self):
        scores = dict(zip("abcd", (5, 3, 3, 3)))
        weights = dict(zip("abcd", (0.4, 0.2, 0.2, 0.2)))
        assert roll_up(scores, weights) == pytest.approx(3.8, abs=1e-12)

    def test_missing_sub_score(self):
        with pytest.raises(ValidationError, match="missing sub-scores"):
            roll_up({"a": 5}, {"a": 0.5, "b": 0.5})

    def test_weight_sum_violation(self):
        with pytest.raises(ValidationError, match="sum"):
            roll_up({"a": 5, "b": 5}, {"a": 0.5, "b": 0.4})

    def test_result_within_bounds_random(self):
        rng = random.Random(7)
        for _ in range(200):
            ids = [f"s{i}" for i in range(4)]
            raw = [rng.uniform(0.01, 1.0) for _ in ids]
            total = sum(raw)
            weights = {sid: v / total for sid, v in zip(ids, raw)}
            scores = {sid: rng.randint(1, 5) for sid in ids}
            assert 1.0 <= roll_up(scores, weights) <= 5.0


class TestTotalScore:
    def test_golden_totals_exact(self):
        weights = WeightVector(GOLDEN_WEIGHTS)
        for pid, expected in GOLDEN_TOTALS.items():
            card = ScoreCard.direct(pid, GOLDEN_SCORES[pid])
            assert total_score(card, weights) == pytest.approx(expected, abs=1e-9)

    def test_uniform_weights_constant_scores(self):
        card = direct_card("X", (3, 3, 3, 3, 3))
        assert total_score(card, WeightVector.uniform()) == pytest.approx(3.0, abs=1e-12)

    def test_incomplete_card_rejected(self):
        card = ScoreCard.direct("X", {CriterionId.BPO: 4})
        with pytest.raises(ValidationError):
            total_score(card, WeightVector.uniform())

    def test_subcriterion_card_rolls_up(self):
        rng = random.Random(3)
        card = random_sub_scorecard(rng, "X")
        weights = random_weights(rng)
        scores = criterion_scores(card)
        expected = sum(scores[c] * weights[c] for c in CRITERION_ORDER)
        assert total_score(card, weights) == pytest.approx(expected, abs=1e-12)


class TestContributions:
    def test_golden_matrix(self):
        weights = WeightVector(GOLDEN_WEIGHTS)
        for pid, expected in GOLDEN_CONTRIBUTIONS.items():
            card = ScoreCard.direct(pid, GOLDEN_SCORES[pid])
            got = contributions(card, weights)
            for criterion, value in expected.items():
                assert got[criterion] == pytest.approx(value, abs=1e-9)

    def test_zero_weight_zero_contribution(self):
        weights = WeightVector({CriterionId.BPO: 0.0, CriterionId.UCF: 0.25,
                                CriterionId.II: 0.25, CriterionId.GS: 0.25,
                                CriterionId.AEA: 0.25})
        card = direct_card("X", (5, 3, 3, 3, 3))
        assert contributions(card, weights)[CriterionId.BPO] == 0.0

    def test_sum_matches_total_bitwise(self):
        rng = random.Random(11)
        for _ in range(300):
            weights = random_weights(rng)
            card = direct_card("X", tuple(rng.randint(1, 5) for _ in range(5)))
            assert sum(contributions(card, weights).values()) == total_score(card, weights)


class TestRank:
    def test_golden_order_and_tie_groups(self, golden_project):
        result = rank(golden_project.platforms, golden_project.scorecards,
                      golden_project.weights)
        assert result.order() == ("A", "B", "C")
        assert [e.tie_group for e in result.entries] == [1, 2, 3]
        for entry in result.entries:
            assert entry.total == pytest.approx(GOLDEN_TOTALS[entry.platform], abs=1e-9)

    def test_identical_scorecards_share_tie_group(self):
        platforms = [Platform("beta", "Beta"), Platform("alfa", "Alfa")]
        cards = {pid: direct_card(pid, (4, 4, 3, 5, 2)) for pid in ("alfa", "beta")}
        result = rank(platforms, cards, WeightVector.uniform())
        assert [e.tie_group for e in result.entries] == [1, 1]
        assert result.order() == ("alfa", "beta")  # lexicographic inside the tie

    def test_tie_breaks_on_highest_weighted_criterion(self):
        # Equal totals (2.6 each), but x scores 5 on BPO, the heaviest criterion.
        weights = WeightVector({CriterionId.BPO: 0.4, CriterionId.UCF: 0.3,
                                CriterionId.II: 0.1, CriterionId.GS: 0.1,
                                CriterionId.AEA: 0.1})
        cards = {
            "x": direct_card("x", (5, 1, 1, 1, 1)),
            "y": direct_card("y", (1, 3, 5, 4, 4)),
        }
        result = rank([Platform("y", "Y"), Platform("x", "X")], cards, weights)
        assert [e.tie_group for e in result.entries] == [1, 1]
        assert result.order() == ("x", "y")

    def test_tie_break_equal_weights_falls_back_to_canonical_order(self):
        # Mirrored profiles under uniform weights: BPO is compared first.
        cards = {
            "x": direct_card("x", (5, 1, 3, 3, 3)),
            "y": direct_card("y", (1, 5, 3, 3, 3)),
        }
        result = rank([Platform("x", "X"), Platform("y", "Y")], cards,
                      WeightVector.uniform())
        assert result.order() == ("x", "y")
        assert [e.tie_group for e in result.entries] == [1, 1]

    def test_single_platform(self):
        card = direct_card("only", (2, 3, 4, 5, 1))
        result = rank([Platform("only", "Only")], {"only": card}, WeightVector.uniform())
        assert result.order() == ("only",)
        assert result.entries[0].tie_group == 1
        assert result.entries[0].total == pytest.approx(3.0, abs=1e-12)

    def test_missing_scorecard_names_platform(self):
        platforms = [Platform("a", "A"), Platform("b", "B")]
        cards = {"a": direct_card("a", (3, 3, 3, 3, 3))}
        with pytest.raises(ValidationError, match="'b' has no scorecard"):
            rank(platforms, cards, WeightVector.uniform())


WEIGHTS_STRATEGY = st.lists(st.floats(0.05, 1.0, allow_nan=False), min_size=5, max_size=5) \
    .map(lambda raw: WeightVector({c: v / sum(raw) for c, v in zip(CRITERION_ORDER, raw)}))
SCORES_STRATEGY = st.lists(st.integers(1, 5), min_size=5, max_size=5)


class TestRankProperties:
    @settings(max_examples=200, deadline=None)
    @given(WEIGHTS_STRATEGY, st.lists(SCORES_STRATEGY, min_size=2, max_size=5),
           st.integers(0, 4), st.integers(0, 4))
    def test_monotonicity(self, weights, score_rows, platform_pick, criterion_pick):
        platforms = [Platform(f"p{i}", f"P{i}") for i in range(len(score_rows))]
        cards = {p.id: direct_card(p.id, tuple(row))
                 for p, row in zip(platforms, score_rows)}
        target = platforms[platform_pick % len(platforms)].id
        criterion = CRITERION_ORDER[criterion_pick]
        if cards[target].direct_scores[criterion] == 5:
            return
        before = rank(platforms, cards, weights)
        before_total = before.totals()[target]
        before_pos = before.order().index(target)

        bumped = dict(cards[target].direct_scores)
        bumped[criterion] += 1
        cards[target] = ScoreCard.direct(target, bumped)
        after = rank(platforms, cards, weights)
        assert after.totals()[target] > before_total
        assert after.order().index(target) <= before_pos

    @settings(max_examples=200, deadline=None)
    @given(WEIGHTS_STRATEGY, SCORES_STRATEGY,
           st.lists(st.integers(0, 1), min_size=5, max_size=5))
    def test_dominance(self, weights, base_row, bumps):
        if all(b == 0 for b in bumps):
            bumps = [1, 0, 0, 0, 0]
        dominant = [min(5, s + b) for s, b in zip(base_row, bumps)]
        if dominant == base_row:
            return  # every bump saturated at 5
        platforms = [Platform("low", "Low"), Platform("high", "High")]
        cards = {"low": direct_card("low", tuple(base_row)),
                 "high": direct_card("high", tuple(dominant))}
        result = rank(platforms, cards, weights)
        assert result.order().index("high") < result.order().index("low")

    @settings(max_examples=200, deadline=None)
    @given(WEIGHTS_STRATEGY, SCORES_STRATEGY)
    def test_bounds(self, weights, row):
        total = total_score(direct_card("x", tuple(row)), weights)
        assert 1.0 - 1e-12 <= total <= 5.0 + 1e-12


class TestRankingInvariants:
    def test_totals_non_increasing_within_tolerance(self):
        rng = random.Random(131)
        for trial in range(200):
            project = random_direct_project(rng, n_platforms=rng.randint(1, 5),
                                            project_id=f"inv{trial}")
            result = rank(project.platforms, project.scorecards, project.weights)
            totals = [e.total for e in result.entries]
            assert all(b <= a + 1e-9 for a, b in zip(totals, totals[1:]))

    def test_rank_invariant_under_raw_weight_scaling(self):
        # Scaling every raw stakeholder weight before normalization changes
        # nothing downstream: same vector (within float noise), same order.
        from lcdp_select.calibration import normalize
        rng = random.Random(137)
        for trial in range(100):
            project = random_direct_project(rng, n_platforms=3, project_id=f"s{trial}")
            raw = {c: rng.uniform(0.1, 10.0) for c in CRITERION_ORDER}
            k = rng.uniform(1e-3, 1e3)
            scaled = {c: v * k for c, v in raw.items()}
            order_a = rank(project.platforms, project.scorecards, normalize(raw)).order()
            order_b = rank(project.platforms, project.scorecards, normalize(scaled)).order()
            assert order_a == order_b


class TestBruteForceEquivalence:
    def test_rank_matches_naive_reimplementation(self):
        rng = random.Random(2024)
        checked = 0
        for trial in range(300):
            project = random_direct_project(rng, n_platforms=3, project_id=f"r{trial}")
            totals = {p.id: naive_total(
                {c: float(project.scorecards[p.id].direct_scores[c]) for c in CRITERION_ORDER},
                dict(project.weights.items())) for p in project.platforms}
            values = sorted(totals.values())
            if any(b - a < 1e-6 for a, b in zip(values, values[1:])):
                continue  # near-tie: ordering legitimately depends on the tie-break
            naive_order = tuple(sorted(totals, key=lambda pid: -totals[pid]))
            result = rank(project.platforms, project.scorecards, project.weights)
            assert result.order() == naive_order
            for entry in result.entries:
                assert entry.total == pytest.approx(totals[entry.platform], abs=1e-9)
            checked += 1
        assert checked > 200
