"""Decision-support toolkit for weighted-sum evaluation of low-code platforms.

Core pieces: a validated domain model (criteria, weights, Likert scores,
projects with an append-only audit trail), the weighted-sum scoring and
ranking engine, stakeholder weight calibration, one-at-a-time sensitivity
analysis, industry weight templates, canonical project persistence, and a
markdown report. An HTTP service and a CLI wrap the same engine.
"""

from .calibration import ConsensusReport, aggregate, apply_constraints, normalize
from .errors import (
    ChecksumMismatchError,
    EvaluationError,
    InfeasibleError,
    SchemaVersionError,
    StaleSnapshotError,
    StoreError,
    ValidationError,
)
from .model import (
    CRITERION_NAMES,
    CRITERION_ORDER,
    PHASES,
    SUB_CRITERIA,
    AuditEntry,
    CriterionId,
    EvaluationProject,
    Platform,
    RankEntry,
    RankingResult,
    ScoreCard,
    StakeholderWeightInput,
    SubCriterion,
    WeightVector,
    new_project,
    project_content_hash,
    validate_project,
)
from .report import export_report
from .scoring import contributions, criterion_scores, rank, rank_project, roll_up, total_score
from .sensitivity import (
    ALWAYS_EQUAL,
    CrossingRecord,
    PerturbedWeights,
    ScenarioRow,
    SensitivityReport,
    StabilityInterval,
    analyze,
    crossing_point,
    perturb_one,
    scenario_compare,
    stability_interval,
    tornado,
    whatif_ranking,
)
from .templates import BUILT_IN_TEMPLATES, IndustryTemplate, TemplateRegistry, get_template

__version__ = "0.1.0"
