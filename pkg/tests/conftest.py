from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lcdp_select.model import (
    CRITERION_ORDER,
    CriterionId,
    EvaluationProject,
    Platform,
    ScoreCard,
    StakeholderWeightInput,
    WeightVector,
    new_project,
)
from lcdp_select.model import SUB_CRITERIA

# Golden inputs: three platforms scored on five criteria under the reference
# weights. Expected totals 4.50 / 4.30 / 3.35.
GOLDEN_WEIGHTS = {
    CriterionId.BPO: 0.25,
    CriterionId.UCF: 0.15,
    CriterionId.II: 0.20,
    CriterionId.GS: 0.25,
    CriterionId.AEA: 0.15,
}

GOLDEN_SCORES = {
    "A": {CriterionId.BPO: 5, CriterionId.UCF: 4, CriterionId.II: 4,
          CriterionId.GS: 5, CriterionId.AEA: 4},
    "B": {CriterionId.BPO: 4, CriterionId.UCF: 5, CriterionId.II: 4,
          CriterionId.GS: 4, CriterionId.AEA: 5},
    "C": {CriterionId.BPO: 3, CriterionId.UCF: 3, CriterionId.II: 4,
          CriterionId.GS: 3, CriterionId.AEA: 4},
}

GOLDEN_TOTALS = {"A": 4.50, "B": 4.30, "C": 3.35}

GOLDEN_CONTRIBUTIONS = {
    "A": {CriterionId.BPO: 1.25, CriterionId.UCF: 0.60, CriterionId.II: 0.80,
          CriterionId.GS: 1.25, CriterionId.AEA: 0.60},
    "B": {CriterionId.BPO: 1.00, CriterionId.UCF: 0.75, CriterionId.II: 0.80,
          CriterionId.GS: 1.00, CriterionId.AEA: 0.75},
    "C": {CriterionId.BPO: 0.75, CriterionId.UCF: 0.45, CriterionId.II: 0.80,
          CriterionId.GS: 0.75, CriterionId.AEA: 0.60},
}


def build_golden_project(project_id: str = "golden") -> EvaluationProject:
    project = new_project("Golden Corp", industry="illustrative", actor="fixture",
                          project_id=project_id)
    project.set_weights(WeightVector(GOLDEN_WEIGHTS), "fixture")
    for pid, scores in GOLDEN_SCORES.items():
        project.add_platform(Platform(pid, f"Platform {pid}"), "fixture")
        project.set_scorecard(ScoreCard.direct(pid, scores), "fixture")
    return project


@pytest.fixture
def golden_project() -> EvaluationProject:
    return build_golden_project()


def random_weights(rng: random.Random) -> WeightVector:
    raw = {c: rng.uniform(0.05, 1.0) for c in CRITERION_ORDER}
    total = sum(raw.values())
    return WeightVector({c: v / total for c, v in raw.items()})


def random_direct_project(rng: random.Random, n_platforms: int = 3,
                          project_id: str = "random") -> EvaluationProject:
    project = new_project(f"Org {rng.randint(0, 10**6)}", actor="fixture",
                          project_id=project_id)
    project.set_weights(random_weights(rng), "fixture")
    for i in range(n_platforms):
        pid = f"P{i}"
        project.add_platform(Platform(pid, f"Platform {pid}"), "fixture")
        scores = {c: rng.randint(1, 5) for c in CRITERION_ORDER}
        project.set_scorecard(ScoreCard.direct(pid, scores), "fixture")
    return project


def random_sub_scorecard(rng: random.Random, platform_id: str) -> ScoreCard:
    sub_scores = {s.id: rng.randint(1, 5) for s in SUB_CRITERIA}
    sub_weights: dict[str, float] = {}
    for criterion in CRITERION_ORDER:
        ids = [s.id for s in SUB_CRITERIA if s.parent is criterion]
        raw = [rng.uniform(0.1, 1.0) for _ in ids]
        total = sum(raw)
        for sid, value in zip(ids, raw):
            sub_weights[sid] = value / total
    return ScoreCard.subcriterion(platform_id, sub_scores, sub_weights)


def random_project(rng: random.Random, project_id: str = "random") -> EvaluationProject:
    """Richer generator: mixed scorecard modes, stakeholders, extra audit entries."""
    project = random_direct_project(rng, n_platforms=rng.randint(1, 4), project_id=project_id)
    if rng.random() < 0.5:
        pid = project.platforms[0].id
        project.set_scorecard(random_sub_scorecard(rng, pid), "fixture")
    if rng.random() < 0.6:
        inputs = []
        for i in range(rng.randint(1, 3)):
            proposed = {c: rng.uniform(0.0, 10.0) for c in CRITERION_ORDER}
            proposed[CriterionId.BPO] += 0.5  # keep at least one strictly positive
            inputs.append(StakeholderWeightInput(f"s{i}", rng.choice(
                ["it_leader", "business_owner", "compliance_officer"]), proposed))
        project.set_stakeholders(inputs, "fixture")
    if rng.random() < 0.5:
        project.set_phase("platform_assessment", "fixture")
    return project
