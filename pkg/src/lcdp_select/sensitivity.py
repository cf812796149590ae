"""Rank robustness under one-at-a-time weight perturbation.

Moving one criterion's weight to ``w`` redistributes the remaining mass
``1 - w`` over the other criteria proportionally to their base weights.
Under that rule every platform total is an affine function of ``w``:

    total(w) = R + w * (s_c - R),   R = sum(s_j * b_j, j != c) / (1 - b_c)

where ``s`` are the platform's criterion scores and ``b`` the base
weights. Crossing points and stability intervals follow in closed form;
the test suite checks them against an exhaustive grid re-ranking oracle.

Tie handling at interval endpoints follows the ranking tie-break; reported
endpoints are closed at 1e-4 resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import InfeasibleError, ValidationError
from .model import (
    CRITERION_ORDER,
    CriterionId,
    EvaluationProject,
    RankingResult,
    WeightVector,
    project_content_hash,
    require_valid_project,
)
from .scoring import criterion_scores, rank, total_score

ALWAYS_EQUAL = "always-equal"

_PARALLEL_TOL = 1e-12
_EQUAL_TOL = 1e-9
INTERVAL_RESOLUTION = 1e-4


@dataclass(frozen=True)
class PerturbedWeights:
    """Provenance record for a single-criterion weight change."""

    base: WeightVector
    criterion: CriterionId
    new_value: float
    result: WeightVector

    @classmethod
    def compute(cls, base: WeightVector, criterion: CriterionId,
                new_value: float) -> "PerturbedWeights":
        criterion = CriterionId.parse(criterion)
        return cls(base=base, criterion=criterion, new_value=new_value,
                   result=perturb_one(base, criterion, new_value))

    def as_dict(self) -> dict[str, Any]:
        return {"base": self.base.as_dict(), "criterion": self.criterion.value,
                "new_value": self.new_value, "result": self.result.as_dict()}


@dataclass(frozen=True)
class StabilityInterval:
    """Weight range for one criterion over which the base leader stays on top."""

    criterion: CriterionId
    low: float
    high: float
    leader: str
    low_exact: str | None = None
    high_exact: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return {"criterion": self.criterion.value, "low": self.low, "high": self.high,
                "leader": self.leader, "low_exact": self.low_exact, "high_exact": self.high_exact}


@dataclass(frozen=True)
class CrossingRecord:
    """Where two platforms' totals meet when one criterion's weight varies."""

    criterion: CriterionId
    x: str
    y: str
    kind: str                    # "crossing" | "none" | "always-equal"
    at: float | None = None
    leader_below: str | None = None
    leader_above: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return {"criterion": self.criterion.value, "x": self.x, "y": self.y, "kind": self.kind,
                "at": self.at, "leader_below": self.leader_below, "leader_above": self.leader_above}


@dataclass(frozen=True)
class ScenarioRow:
    """Ranking outcome under one named alternative weight vector."""

    name: str
    weights: WeightVector
    order: tuple[str, ...]
    totals: Mapping[str, float]

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "weights": self.weights.as_dict(),
                "order": list(self.order), "totals": dict(self.totals)}


@dataclass(frozen=True)
class SensitivityReport:
    intervals: tuple[StabilityInterval, ...]
    crossings: tuple[CrossingRecord, ...]
    scenarios: tuple[ScenarioRow, ...]
    tornado: Mapping[CriterionId, tuple[float, float]] | None
    snapshot_hash: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "intervals": [i.as_dict() for i in self.intervals],
            "crossings": [c.as_dict() for c in self.crossings],
            "scenarios": [s.as_dict() for s in self.scenarios],
            "tornado": ({c.value: [lo, hi] for c, (lo, hi) in self.tornado.items()}
                        if self.tornado is not None else None),
            "snapshot_hash": self.snapshot_hash,
        }


def perturb_one(base: WeightVector, criterion: CriterionId, new_value: float) -> WeightVector:
    """Set one criterion's weight, spreading the remainder pro rata over the rest.

    ``new_value`` equal to the base weight returns ``base`` unchanged.
    """
    base.require_valid()
    criterion = CriterionId.parse(criterion)
    if not 0.0 <= new_value <= 1.0:
        raise ValidationError(f"new weight must be in [0, 1], got {new_value!r}")
    current = base[criterion]
    if new_value == current:
        return base
    rest = 1.0 - current
    if rest <= 0.0:
        if new_value == 1.0:
            return base
        raise InfeasibleError(
            f"cannot redistribute: all weight already sits on {criterion.value}")
    scale = (1.0 - new_value) / rest
    result = {c: (new_value if c is criterion else base[c] * scale) for c in CRITERION_ORDER}
    return WeightVector(result)


def _affine_coefficients(project: EvaluationProject, criterion: CriterionId,
                         weights: WeightVector | None = None) -> dict[str, tuple[float, float]]:
    """Per platform: (intercept, slope) of its total as a function of the weight."""
    base = weights or project.weights
    base_c = base[criterion]
    rest = 1.0 - base_c
    if rest <= 0.0:
        raise InfeasibleError(
            f"criterion {criterion.value} carries all weight; totals are undefined away from 1")
    out: dict[str, tuple[float, float]] = {}
    for platform in project.platforms:
        scores = criterion_scores(project.scorecards[platform.id])
        others = sum(scores[c] * base[c] for c in CRITERION_ORDER if c is not criterion)
        intercept = others / rest
        out[platform.id] = (intercept, scores[criterion] - intercept)
    return out


def crossing_point(project: EvaluationProject, criterion: CriterionId,
                   x: str, y: str) -> float | str | None:
    """Weight value in [0, 1] where the two platforms' totals meet.

    Returns the value, ``"always-equal"`` when the totals coincide for every
    weight, or ``None`` when no crossing falls inside [0, 1].
    """
    criterion = CriterionId.parse(criterion)
    if x == y:
        raise ValidationError("crossing_point requires two distinct platforms")
    require_valid_project(project)
    for pid in (x, y):
        if pid not in project.scorecards:
            raise ValidationError(f"platform '{pid}' has no scorecard")
    coeffs = _affine_coefficients(project, criterion)
    ix, sx = coeffs[x]
    iy, sy = coeffs[y]
    d0, d1 = ix - iy, sx - sy
    if abs(d1) < _PARALLEL_TOL:
        return ALWAYS_EQUAL if abs(d0) <= _EQUAL_TOL else None
    w_star = -d0 / d1
    if -_PARALLEL_TOL <= w_star <= 1.0 + _PARALLEL_TOL:
        return min(max(w_star, 0.0), 1.0)
    return None


def _exact_fraction(value: float) -> str | None:
    """Readable rational form of an endpoint when one reproduces the float."""
    frac = Fraction(value).limit_denominator(9999)
    if abs(float(frac) - value) > 1e-12:
        return None
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def stability_interval(project: EvaluationProject, criterion: CriterionId) -> StabilityInterval:
    """Maximal weight interval around the base over which the rank-1 platform holds.

    Computed from the pairwise crossings of the base leader against every
    other platform. A competitor whose total coincides with the leader's for
    every weight moves in lockstep and does not bound the interval.
    """
    criterion = CriterionId.parse(criterion)
    require_valid_project(project)
    ranking = rank(project.platforms, project.scorecards, project.weights)
    if not ranking.entries:
        raise ValidationError("stability interval requires at least one scored platform")
    leader = ranking.entries[0].platform
    if len(project.platforms) == 1:
        return StabilityInterval(criterion=criterion, low=0.0, high=1.0, leader=leader,
                                 low_exact="0", high_exact="1")

    base_w = project.weights[criterion]
    coeffs = _affine_coefficients(project, criterion)
    i_lead, s_lead = coeffs[leader]
    low, high = 0.0, 1.0
    for entry in ranking.entries[1:]:
        i_other, s_other = coeffs[entry.platform]
        d0, d1 = i_lead - i_other, s_lead - s_other
        if abs(d1) < _PARALLEL_TOL:
            continue  # parallel: either always ahead or always equal
        # Clamping against the base weight only absorbs float noise when a
        # competitor ties the leader exactly at the base vector.
        w_star = -d0 / d1
        if d1 < 0:
            # Leader's margin shrinks as the weight grows: crossing bounds above.
            high = min(high, max(w_star, base_w))
        else:
            low = max(low, min(w_star, base_w))
    low, high = max(low, 0.0), min(high, 1.0)
    return StabilityInterval(criterion=criterion, low=low, high=high, leader=leader,
                             low_exact=_exact_fraction(low), high_exact=_exact_fraction(high))


def scenario_compare(project: EvaluationProject,
                     scenarios: Sequence[tuple[str, WeightVector]]) -> tuple[ScenarioRow, ...]:
    """Full ranking under each named weight vector, in input order."""
    require_valid_project(project)
    rows = []
    for name, weights in scenarios:
        weights.require_valid()
        result = rank(project.platforms, project.scorecards, weights)
        rows.append(ScenarioRow(name=name, weights=weights, order=result.order(),
                                totals=result.totals()))
    return tuple(rows)


def tornado(project: EvaluationProject, delta: float) -> dict[CriterionId, tuple[float, float]]:
    """Leader's total range when each weight moves by +/- delta (clamped to [0, 1])."""
    if not 0.0 < delta < 1.0:
        raise InfeasibleError(f"delta must lie strictly inside (0, 1), got {delta!r}")
    require_valid_project(project)
    ranking = rank(project.platforms, project.scorecards, project.weights)
    if not ranking.entries:
        raise ValidationError("tornado requires at least one scored platform")
    leader_card = project.scorecards[ranking.entries[0].platform]

    out: dict[CriterionId, tuple[float, float]] = {}
    for criterion in CRITERION_ORDER:
        base_w = project.weights[criterion]
        lo_w = max(0.0, base_w - delta)
        hi_w = min(1.0, base_w + delta)
        totals = [total_score(leader_card, perturb_one(project.weights, criterion, w))
                  for w in (lo_w, hi_w)]
        out[criterion] = (min(totals), max(totals))
    return out


def analyze(project: EvaluationProject,
            criteria: Sequence[CriterionId] | None = None,
            scenarios: Sequence[tuple[str, WeightVector]] | None = None,
            delta: float | None = None) -> SensitivityReport:
    """Bundle intervals, pairwise crossings, scenarios, and the optional tornado."""
    require_valid_project(project)
    selected = ([CriterionId.parse(c) for c in criteria] if criteria is not None
                else list(CRITERION_ORDER))

    intervals = tuple(stability_interval(project, c) for c in selected)

    crossings: list[CrossingRecord] = []
    pids = [p.id for p in project.platforms]
    for criterion in selected:
        coeffs = _affine_coefficients(project, criterion)
        for i, x in enumerate(pids):
            for y in pids[i + 1:]:
                at = crossing_point(project, criterion, x, y)
                if at == ALWAYS_EQUAL:
                    crossings.append(CrossingRecord(criterion=criterion, x=x, y=y,
                                                    kind="always-equal"))
                elif at is None:
                    crossings.append(CrossingRecord(criterion=criterion, x=x, y=y, kind="none"))
                else:
                    slope_diff = coeffs[x][1] - coeffs[y][1]
                    below, above = (x, y) if slope_diff < 0 else (y, x)
                    crossings.append(CrossingRecord(criterion=criterion, x=x, y=y,
                                                    kind="crossing", at=at,
                                                    leader_below=below, leader_above=above))

    rows = scenario_compare(project, scenarios) if scenarios else tuple()
    spread = tornado(project, delta) if delta is not None else None
    return SensitivityReport(intervals=intervals, crossings=tuple(crossings), scenarios=rows,
                             tornado=spread, snapshot_hash=project_content_hash(project))


def whatif_ranking(project: EvaluationProject,
                   weights: WeightVector | None = None,
                   criterion: CriterionId | None = None,
                   new_value: float | None = None) -> RankingResult:
    """Ranking under hypothetical weights without touching the project.

    Accepts either a complete vector or a single-criterion perturbation.
    """
    if weights is not None and criterion is not None:
        raise ValidationError("provide either a full weight vector or a single perturbation, not both")
    if weights is None:
        if criterion is None or new_value is None:
            raise ValidationError("what-if requires a weight vector or (criterion, new_value)")
        weights = perturb_one(project.weights, CriterionId.parse(criterion), float(new_value))
    require_valid_project(project)
    result = rank(project.platforms, project.scorecards, weights)
    return RankingResult(entries=result.entries, weights=result.weights,
                         snapshot_hash=project_content_hash(project))
