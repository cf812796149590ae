"""Stakeholder weight calibration: normalization, consensus, and floors.

Raw priorities from different stakeholders are normalized individually,
averaged, and renormalized. Disagreement is surfaced as per-criterion
standard deviation and the maximum pairwise L1 distance rather than by
weighting roles differently.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .errors import InfeasibleError, ValidationError
from .model import CRITERION_ORDER, WEIGHT_SUM_TOL, CriterionId, StakeholderWeightInput, WeightVector


@dataclass(frozen=True)
class ConsensusReport:
    """Aggregated weights plus dispersion diagnostics across stakeholders."""

    aggregated: WeightVector
    per_criterion_stddev: Mapping[CriterionId, float]
    max_pairwise_l1: float

    def as_dict(self) -> dict:
        return {
            "aggregated": self.aggregated.as_dict(),
            "per_criterion_stddev": {c.value: v for c, v in self.per_criterion_stddev.items()},
            "max_pairwise_l1": self.max_pairwise_l1,
        }


def normalize(raw: Mapping[CriterionId, float] | Mapping[str, float]) -> WeightVector:
    """Scale raw non-negative priorities so they sum to 1."""
    parsed = {CriterionId.parse(k): float(v) for k, v in dict(raw).items()}
    missing = [c.value for c in CRITERION_ORDER if c not in parsed]
    if missing:
        raise ValidationError(f"missing raw weights for: {', '.join(missing)}")
    negative = [c.value for c, v in parsed.items() if v < 0]
    if negative:
        raise ValidationError(f"raw weights must be non-negative; negative for: {', '.join(negative)}")
    total = sum(parsed.values())
    if total <= 0:
        raise ValidationError("all-zero weight vector cannot be normalized")
    if abs(total - 1.0) < 1e-12:
        # Already normalized up to float noise: dividing again would wobble
        # the last bits, and exact idempotence matters more here.
        return WeightVector({c: parsed[c] for c in CRITERION_ORDER})
    return WeightVector({c: parsed[c] / total for c in CRITERION_ORDER})


def aggregate(inputs: Sequence[StakeholderWeightInput]) -> ConsensusReport:
    """Mean of the individually normalized stakeholder vectors, renormalized."""
    if not inputs:
        raise ValidationError("cannot aggregate an empty stakeholder list")
    bad = [v for sw in inputs for v in sw.violations()]
    if bad:
        raise ValidationError(bad)

    normalized = [normalize(sw.proposed) for sw in inputs]
    mean_raw = {c: statistics.fmean(v[c] for v in normalized) for c in CRITERION_ORDER}
    aggregated = normalize(mean_raw)  # guards float rounding in the mean

    stddev = {c: statistics.pstdev([v[c] for v in normalized]) if len(normalized) > 1 else 0.0
              for c in CRITERION_ORDER}
    max_l1 = 0.0
    for a, b in combinations(normalized, 2):
        max_l1 = max(max_l1, sum(abs(a[c] - b[c]) for c in CRITERION_ORDER))
    return ConsensusReport(aggregated=aggregated, per_criterion_stddev=stddev,
                           max_pairwise_l1=max_l1)


def apply_constraints(weights: WeightVector,
                      floors: Mapping[CriterionId, float] | Mapping[str, float]) -> WeightVector:
    """Raise below-floor weights to their floors, rescaling the rest to keep sum 1.

    Scaling a free criterion can push it under its own floor, so flooring
    repeats until the free set is stable. Already-satisfied inputs are
    returned unchanged, which also makes the operation idempotent.
    """
    weights.require_valid()
    parsed = {CriterionId.parse(k): float(v) for k, v in dict(floors).items()}
    for cid, floor in parsed.items():
        if not 0.0 <= floor <= 1.0:
            raise ValidationError(f"floor for {cid.value} is {floor!r}, outside [0, 1]")
    floor_total = sum(parsed.values())
    if floor_total > 1.0 + WEIGHT_SUM_TOL:
        raise InfeasibleError(f"floors sum to {floor_total!r}, exceeding 1: no valid weight vector exists")

    floor_of = {c: parsed.get(c, 0.0) for c in CRITERION_ORDER}
    if all(weights[c] >= floor_of[c] for c in CRITERION_ORDER):
        return weights

    pinned: set[CriterionId] = set()
    while True:
        fixed_mass = sum(floor_of[c] for c in pinned)
        free = [c for c in CRITERION_ORDER if c not in pinned]
        free_base = sum(weights[c] for c in free)
        remaining = 1.0 - fixed_mass

        if not free or free_base <= 0.0:
            result = {c: floor_of[c] for c in pinned}
            if free:
                # Free criteria all carry zero base weight: split the slack evenly.
                for c in free:
                    result[c] = remaining / len(free) if remaining > WEIGHT_SUM_TOL else 0.0
            elif remaining > WEIGHT_SUM_TOL:
                # Everything pinned but mass is left over: give it back pro rata.
                base_total = sum(weights[c] for c in CRITERION_ORDER)
                for c in CRITERION_ORDER:
                    result[c] += remaining * (weights[c] / base_total)
            return WeightVector(result)

        scale = remaining / free_base
        candidate = {c: floor_of[c] for c in pinned}
        candidate.update({c: weights[c] * scale for c in free})
        newly_pinned = {c for c in free if candidate[c] < floor_of[c] - WEIGHT_SUM_TOL}
        if not newly_pinned:
            return WeightVector(candidate)
        pinned |= newly_pinned
