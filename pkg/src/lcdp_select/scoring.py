"""Weighted-sum scoring and deterministic ranking.

Total = sum over criteria of (criterion score x criterion weight). Scores
enter as 1-5 Likert integers; fractional values appear only through the
sub-criterion roll-up. All arithmetic stays in double precision; rounding
belongs to the presentation layer.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import ValidationError
from .model import (
    CRITERION_ORDER,
    SUB_CRITERIA_BY_PARENT,
    TIE_TOL,
    WEIGHT_SUM_TOL,
    CriterionId,
    EvaluationProject,
    Platform,
    RankEntry,
    RankingResult,
    ScoreCard,
    WeightVector,
    project_content_hash,
    require_valid_project,
)


# The only roll-up method in v1. Weighted arithmetic mean preserves the [1, 5]
# range and the linearity the total relies on; min or geometric would not.
ROLL_UP_METHOD = "weighted_arithmetic_mean"


def roll_up(sub_scores: Mapping[str, float], sub_weights: Mapping[str, float]) -> float:
    """Weighted arithmetic mean of sub-criterion scores; stays within [1, 5]."""
    missing = sorted(set(sub_weights) - set(sub_scores))
    if missing:
        raise ValidationError(f"missing sub-scores for: {', '.join(missing)}")
    extra = sorted(set(sub_scores) - set(sub_weights))
    if extra:
        raise ValidationError(f"sub-scores without weights: {', '.join(extra)}")
    total_weight = sum(sub_weights.values())
    if abs(total_weight - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(f"sub-weights sum to {total_weight!r}, expected 1")
    for sid in sub_weights:
        score = sub_scores[sid]
        if not 1.0 <= float(score) <= 5.0:
            raise ValidationError(f"sub-score for '{sid}' is {score!r}, outside [1, 5]")
        if sub_weights[sid] < 0:
            raise ValidationError(f"sub-weight for '{sid}' is negative")
    return sum(sub_scores[sid] * sub_weights[sid] for sid in sorted(sub_weights))


def criterion_scores(card: ScoreCard) -> dict[CriterionId, float]:
    """Per-criterion scores of a card; sub-criterion cards are rolled up."""
    bad = card.violations(require_complete=True)
    if bad:
        raise ValidationError(bad)
    if card.mode == "direct":
        return {c: float(card.direct_scores[c]) for c in CRITERION_ORDER}
    result: dict[CriterionId, float] = {}
    for criterion in CRITERION_ORDER:
        ids = [s.id for s in SUB_CRITERIA_BY_PARENT[criterion]]
        result[criterion] = roll_up(
            {sid: card.sub_scores[sid] for sid in ids},
            {sid: card.sub_weights[sid] for sid in ids},
        )
    return result


def contributions(card: ScoreCard, weights: WeightVector) -> dict[CriterionId, float]:
    """Weighted contribution (score x weight) per criterion."""
    weights.require_valid()
    scores = criterion_scores(card)
    return {c: scores[c] * weights[c] for c in CRITERION_ORDER}


def total_score(card: ScoreCard, weights: WeightVector) -> float:
    """Weighted sum of criterion scores; always within [1, 5] for valid input."""
    return sum(contributions(card, weights).values())


def _tie_break_order(weights: WeightVector) -> list[CriterionId]:
    # Highest weight first; equal weights fall back to canonical criterion order.
    return sorted(CRITERION_ORDER, key=lambda c: (-weights[c], CRITERION_ORDER.index(c)))


def rank(platforms: Sequence[Platform], scorecards: Mapping[str, ScoreCard],
         weights: WeightVector) -> RankingResult:
    """Order platforms by descending total.

    Totals equal within 1e-9 share a tie group; within a group the order is
    deterministic: higher score on the highest-weighted criterion first,
    then the remaining criteria by descending weight, then platform id.
    Totals across a tie group may therefore differ by up to the tolerance.
    """
    weights.require_valid()
    missing = [p.id for p in platforms if p.id not in scorecards]
    if missing:
        raise ValidationError([f"platform '{pid}' has no scorecard" for pid in missing])

    rows = []
    for platform in platforms:
        card = scorecards[platform.id]
        scores = criterion_scores(card)
        contrib = {c: scores[c] * weights[c] for c in CRITERION_ORDER}
        rows.append((platform.id, sum(contrib.values()), scores, contrib))

    rows.sort(key=lambda r: -r[1])

    tie_order = _tie_break_order(weights)
    groups: list[list[tuple]] = []
    for row in rows:
        if groups and abs(row[1] - groups[-1][0][1]) <= TIE_TOL:
            groups[-1].append(row)
        else:
            groups.append([row])

    entries: list[RankEntry] = []
    for group_idx, group in enumerate(groups, start=1):
        group.sort(key=lambda r: tuple(-r[2][c] for c in tie_order) + (r[0],))
        for pid, total, _scores, contrib in group:
            entries.append(RankEntry(platform=pid, total=total,
                                     contributions=contrib, tie_group=group_idx))
    return RankingResult(entries=tuple(entries), weights=weights)


def rank_project(project: EvaluationProject,
                 weights: WeightVector | None = None) -> RankingResult:
    """Rank a validated project, stamping the snapshot hash for staleness checks.

    ``weights`` overrides the stored vector for what-if computations without
    touching the project.
    """
    require_valid_project(project)
    result = rank(project.platforms, project.scorecards, weights or project.weights)
    return RankingResult(entries=result.entries, weights=result.weights,
                         snapshot_hash=project_content_hash(project))
