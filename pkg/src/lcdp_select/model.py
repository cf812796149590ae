"""Domain model for multi-criteria platform evaluation projects.

Value types are plain dataclasses with strict structural validation at
construction and a canonical dict/JSON form used for hashing and
persistence. Semantic invariants (ranges, sums, cross-references) are
reported by ``validate_project`` rather than raised, so that imperfect
project files can be loaded, inspected, and repaired.
"""

from __future__ import annotations

import hashlib
import json
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Iterator, Mapping

from .errors import ValidationError

WEIGHT_SUM_TOL = 1e-9
TIE_TOL = 1e-9
LIKERT_MIN = 1
LIKERT_MAX = 5

LIKERT_LABELS = {
    1: "Inadequate",
    2: "Below Average",
    3: "Average",
    4: "Above Average",
    5: "Excellent",
}


class CriterionId(str, Enum):
    """The five evaluation criteria. The set is closed."""

    BPO = "BPO"  # Business Process Orchestration
    UCF = "UCF"  # UI/UX Customization and Flexibility
    II = "II"    # Integration and Interoperability
    GS = "GS"    # Governance and Security
    AEA = "AEA"  # AI-Enhanced Automation

    @classmethod
    def parse(cls, value: Any) -> "CriterionId":
        if isinstance(value, CriterionId):
            return value
        try:
            return cls(str(value))
        except ValueError:
            known = ", ".join(c.value for c in cls)
            raise ValidationError(f"unknown criterion '{value}' (known: {known})") from None


CRITERION_ORDER: tuple[CriterionId, ...] = tuple(CriterionId)

CRITERION_NAMES: dict[CriterionId, str] = {
    CriterionId.BPO: "Business Process Orchestration",
    CriterionId.UCF: "UI/UX Customization and Flexibility",
    CriterionId.II: "Integration and Interoperability",
    CriterionId.GS: "Governance and Security",
    CriterionId.AEA: "AI-Enhanced Automation",
}

# Workflow phases, in order. Transitions may only move forward or explicitly reset.
PHASES: tuple[str, ...] = (
    "requirements_gathering",
    "criteria_weighting",
    "platform_assessment",
    "scoring_and_ranking",
    "sensitivity_analysis",
    "decision_validation",
)

PHASE_NAMES: dict[str, str] = {
    "requirements_gathering": "Requirements Gathering",
    "criteria_weighting": "Criteria Weighting",
    "platform_assessment": "Platform Assessment",
    "scoring_and_ranking": "Scoring and Ranking",
    "sensitivity_analysis": "Sensitivity Analysis",
    "decision_validation": "Decision Validation",
}


@dataclass(frozen=True)
class SubCriterion:
    """One of the four finer-grained components of a criterion."""

    id: str
    parent: CriterionId
    name: str
    description: str


SUB_CRITERIA: tuple[SubCriterion, ...] = (
    SubCriterion("bpo.process_complexity_support", CriterionId.BPO,
                 "Process Complexity Support",
                 "How well the platform copes with branching, parallel, and exception-laden process logic."),
    SubCriterion("bpo.workflow_engine_sophistication", CriterionId.BPO,
                 "Workflow Engine Sophistication",
                 "Depth of the workflow engine: standards coverage, state handling, event-driven triggers."),
    SubCriterion("bpo.monitoring_and_analytics", CriterionId.BPO,
                 "Monitoring and Analytics",
                 "Visibility into running processes, performance indicators, and bottlenecks."),
    SubCriterion("bpo.human_system_integration", CriterionId.BPO,
                 "Human-System Integration",
                 "Quality of task assignment, escalation, and human touchpoints in automated flows."),
    SubCriterion("ucf.design_flexibility", CriterionId.UCF,
                 "Design Flexibility",
                 "Range of components, layout control, and custom styling options."),
    SubCriterion("ucf.development_approach", CriterionId.UCF,
                 "Development Approach",
                 "Choice between model-driven and free-form canvas building styles."),
    SubCriterion("ucf.responsive_design", CriterionId.UCF,
                 "Responsive Design",
                 "Consistent behavior across screen sizes and devices."),
    SubCriterion("ucf.accessibility_compliance", CriterionId.UCF,
                 "Accessibility Compliance",
                 "Accessibility standards coverage and assistive tooling."),
    SubCriterion("ii.connector_ecosystem", CriterionId.II,
                 "Connector Ecosystem",
                 "Breadth of ready-made connectors to common enterprise systems."),
    SubCriterion("ii.api_support", CriterionId.II,
                 "API Support",
                 "Protocol coverage for REST, SOAP, GraphQL, and webhooks."),
    SubCriterion("ii.data_integration", CriterionId.II,
                 "Data Integration",
                 "ETL, synchronization, and transformation capabilities."),
    SubCriterion("ii.devops_integration", CriterionId.II,
                 "DevOps Integration",
                 "Fit with CI/CD pipelines, version control, and automated deployment."),
    SubCriterion("gs.access_control", CriterionId.GS,
                 "Access Control",
                 "Role-based permissions, fine-grained authorization, and SSO."),
    SubCriterion("gs.compliance_features", CriterionId.GS,
                 "Compliance Features",
                 "Audit trails, data protection, and regulatory controls."),
    SubCriterion("gs.security_architecture", CriterionId.GS,
                 "Security Architecture",
                 "Encryption, secure transport, and threat detection."),
    SubCriterion("gs.application_lifecycle_management", CriterionId.GS,
                 "Application Lifecycle Management",
                 "Versioning, environment promotion, and change control."),
    SubCriterion("aea.generative_ai_integration", CriterionId.AEA,
                 "Generative AI Integration",
                 "Assisted building: code generation and intelligent design suggestions."),
    SubCriterion("aea.process_mining", CriterionId.AEA,
                 "Process Mining",
                 "Automated discovery of processes and improvement recommendations."),
    SubCriterion("aea.predictive_analytics", CriterionId.AEA,
                 "Predictive Analytics",
                 "Built-in forecasting and decision-support capabilities."),
    SubCriterion("aea.intelligent_automation", CriterionId.AEA,
                 "Intelligent Automation",
                 "RPA, document understanding, and cognitive service hooks."),
)

SUB_CRITERIA_BY_ID: dict[str, SubCriterion] = {s.id: s for s in SUB_CRITERIA}
SUB_CRITERIA_BY_PARENT: dict[CriterionId, tuple[SubCriterion, ...]] = {
    c: tuple(s for s in SUB_CRITERIA if s.parent is c) for c in CRITERION_ORDER
}


def _as_float(value: Any, context: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{context}: expected a number, got {value!r}")
    result = float(value)
    if result != result or result in (float("inf"), float("-inf")):
        raise ValidationError(f"{context}: value must be finite, got {value!r}")
    return result


def validate_likert(value: Any, context: str = "score") -> int:
    """Check that a raw score is an integer in [1, 5] and return it."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{context}: Likert score must be an integer in 1-5, got {value!r}")
    if not LIKERT_MIN <= value <= LIKERT_MAX:
        raise ValidationError(f"{context}: Likert score must be in 1-5, got {value}")
    return value


@dataclass(frozen=True)
class WeightVector:
    """Per-criterion importance fractions. A valid vector sums to 1.

    Construction enforces structure (all five criteria present, numeric
    values); range and sum are reported by ``violations()`` so invalid
    vectors loaded from files can still be inspected.
    """

    weights: Mapping[CriterionId, float]

    def __post_init__(self) -> None:
        parsed: dict[CriterionId, float] = {}
        for key, value in dict(self.weights).items():
            cid = CriterionId.parse(key)
            if cid in parsed:
                raise ValidationError(f"duplicate weight for criterion {cid.value}")
            parsed[cid] = _as_float(value, f"weight[{cid.value}]")
        missing = [c.value for c in CRITERION_ORDER if c not in parsed]
        if missing:
            raise ValidationError(f"WeightVector missing criteria: {', '.join(missing)}")
        object.__setattr__(self, "weights", {c: parsed[c] for c in CRITERION_ORDER})

    def __getitem__(self, criterion: CriterionId) -> float:
        return self.weights[CriterionId.parse(criterion)]

    def items(self) -> Iterator[tuple[CriterionId, float]]:
        return iter(self.weights.items())

    def total(self) -> float:
        return sum(self.weights.values())

    def violations(self) -> list[str]:
        out = []
        for cid, w in self.weights.items():
            if not 0.0 <= w <= 1.0:
                out.append(f"WeightVector: weight[{cid.value}]={w!r} outside [0, 1]")
        total = self.total()
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            out.append(f"WeightVector: weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL}")
        return out

    def require_valid(self) -> "WeightVector":
        violations = self.violations()
        if violations:
            raise ValidationError(violations)
        return self

    @classmethod
    def uniform(cls) -> "WeightVector":
        return cls({c: 1.0 / len(CRITERION_ORDER) for c in CRITERION_ORDER})

    def as_dict(self) -> dict[str, float]:
        return {c.value: w for c, w in self.weights.items()}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "WeightVector":
        return cls(dict(data))


@dataclass(frozen=True)
class Platform:
    """A candidate platform under evaluation."""

    id: str
    name: str
    vendor: str = ""
    notes: str = ""

    def violations(self) -> list[str]:
        out = []
        if not self.id:
            out.append("Platform: id must be non-empty")
        if not self.name.strip():
            out.append(f"Platform '{self.id}': name must be non-empty")
        return out

    def as_dict(self) -> dict[str, str]:
        return {"id": self.id, "name": self.name, "vendor": self.vendor, "notes": self.notes}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Platform":
        return cls(id=str(data["id"]), name=str(data.get("name", "")),
                   vendor=str(data.get("vendor", "")), notes=str(data.get("notes", "")))


SCORECARD_MODES = ("direct", "subcriterion")


@dataclass
class ScoreCard:
    """One platform's Likert scores, either per criterion or per sub-criterion.

    Direct mode fills ``direct_scores``; subcriterion mode fills
    ``sub_scores`` plus ``sub_weights`` (within-parent fractions summing
    to 1, used for the roll-up to criterion level).
    """

    platform: str
    mode: str
    direct_scores: dict[CriterionId, int] = field(default_factory=dict)
    sub_scores: dict[str, int] = field(default_factory=dict)
    sub_weights: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode not in SCORECARD_MODES:
            raise ValidationError(f"ScoreCard mode must be one of {SCORECARD_MODES}, got {self.mode!r}")
        self.direct_scores = {CriterionId.parse(k): v for k, v in self.direct_scores.items()}

    def violations(self, *, require_complete: bool = True) -> list[str]:
        prefix = f"ScoreCard '{self.platform}'"
        out: list[str] = []
        if self.mode == "direct":
            if self.sub_scores or self.sub_weights:
                out.append(f"{prefix}: direct mode must not carry sub-criterion data")
            for cid, score in self.direct_scores.items():
                try:
                    validate_likert(score, f"{prefix} [{cid.value}]")
                except ValidationError as exc:
                    out.extend(exc.violations)
            if require_complete:
                missing = [c.value for c in CRITERION_ORDER if c not in self.direct_scores]
                if missing:
                    out.append(f"{prefix}: missing scores for {', '.join(missing)}")
        else:
            if self.direct_scores:
                out.append(f"{prefix}: subcriterion mode must not carry direct scores")
            unknown = sorted(set(self.sub_scores) - set(SUB_CRITERIA_BY_ID))
            if unknown:
                out.append(f"{prefix}: unknown sub-criteria {', '.join(unknown)}")
            for sid, score in self.sub_scores.items():
                try:
                    validate_likert(score, f"{prefix} [{sid}]")
                except ValidationError as exc:
                    out.extend(exc.violations)
            if require_complete:
                missing = sorted(set(SUB_CRITERIA_BY_ID) - set(self.sub_scores))
                if missing:
                    out.append(f"{prefix}: missing sub-criterion scores for {', '.join(missing)}")
            if set(self.sub_weights) != set(self.sub_scores) - set(unknown):
                out.append(f"{prefix}: sub_weights keys must match sub_scores keys")
            else:
                for parent in CRITERION_ORDER:
                    ids = [s.id for s in SUB_CRITERIA_BY_PARENT[parent] if s.id in self.sub_weights]
                    if not ids:
                        continue
                    total = sum(self.sub_weights[i] for i in ids)
                    if abs(total - 1.0) > WEIGHT_SUM_TOL:
                        out.append(
                            f"{prefix}: sub-weights under {parent.value} sum to {total!r}, expected 1"
                        )
        return out

    @classmethod
    def direct(cls, platform: str, scores: Mapping[Any, int]) -> "ScoreCard":
        return cls(platform=platform, mode="direct",
                   direct_scores={CriterionId.parse(k): v for k, v in scores.items()})

    @classmethod
    def subcriterion(cls, platform: str, sub_scores: Mapping[str, int],
                     sub_weights: Mapping[str, float] | None = None) -> "ScoreCard":
        if sub_weights is None:
            # Uniform within each parent: the catalog holds four entries per criterion.
            sub_weights = {sid: 0.25 for sid in sub_scores}
        return cls(platform=platform, mode="subcriterion",
                   sub_scores=dict(sub_scores), sub_weights=dict(sub_weights))

    def as_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"platform": self.platform, "mode": self.mode}
        if self.mode == "direct":
            data["direct_scores"] = {c.value: v for c, v in self.direct_scores.items()}
        else:
            data["sub_scores"] = dict(self.sub_scores)
            data["sub_weights"] = dict(self.sub_weights)
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ScoreCard":
        mode = data.get("mode", "direct")
        if mode == "direct":
            return cls(platform=str(data["platform"]), mode="direct",
                       direct_scores=dict(data.get("direct_scores", {})))
        return cls(platform=str(data["platform"]), mode=str(mode),
                   sub_scores=dict(data.get("sub_scores", {})),
                   sub_weights={k: _as_float(v, f"sub_weight[{k}]")
                                for k, v in data.get("sub_weights", {}).items()})


@dataclass(frozen=True)
class StakeholderWeightInput:
    """One stakeholder's raw (un-normalized) criterion priorities."""

    stakeholder: str
    role: str
    proposed: Mapping[CriterionId, float]

    def __post_init__(self) -> None:
        parsed = {CriterionId.parse(k): _as_float(v, f"proposed[{k}]")
                  for k, v in dict(self.proposed).items()}
        missing = [c.value for c in CRITERION_ORDER if c not in parsed]
        if missing:
            raise ValidationError(
                f"stakeholder '{self.stakeholder}': missing proposed weights for {', '.join(missing)}")
        object.__setattr__(self, "proposed", {c: parsed[c] for c in CRITERION_ORDER})

    def violations(self) -> list[str]:
        prefix = f"stakeholder '{self.stakeholder}'"
        out = []
        for cid, value in self.proposed.items():
            if value < 0:
                out.append(f"{prefix}: proposed weight for {cid.value} is negative ({value!r})")
        if not any(v > 0 for v in self.proposed.values()):
            out.append(f"{prefix}: at least one proposed weight must be strictly positive")
        return out

    def as_dict(self) -> dict[str, Any]:
        return {"stakeholder": self.stakeholder, "role": self.role,
                "proposed": {c.value: v for c, v in self.proposed.items()}}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "StakeholderWeightInput":
        return cls(stakeholder=str(data["stakeholder"]), role=str(data.get("role", "")),
                   proposed=dict(data["proposed"]))


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


@dataclass(frozen=True)
class AuditEntry:
    """One record in the append-only decision trail."""

    timestamp: str
    actor: str
    action: str
    before: Any = None
    after: Any = None

    def as_dict(self) -> dict[str, Any]:
        return {"timestamp": self.timestamp, "actor": self.actor, "action": self.action,
                "before": self.before, "after": self.after}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AuditEntry":
        return cls(timestamp=str(data["timestamp"]), actor=str(data["actor"]),
                   action=str(data["action"]), before=data.get("before"), after=data.get("after"))


@dataclass(frozen=True)
class RankEntry:
    """One ranked platform with its total and per-criterion contributions."""

    platform: str
    total: float
    contributions: Mapping[CriterionId, float]
    tie_group: int

    def as_dict(self) -> dict[str, Any]:
        return {"platform": self.platform, "total": self.total,
                "contributions": {c.value: v for c, v in self.contributions.items()},
                "tie_group": self.tie_group}


@dataclass(frozen=True)
class RankingResult:
    """Platforms ordered by descending total, with explicit tie groups."""

    entries: tuple[RankEntry, ...]
    weights: WeightVector
    snapshot_hash: str | None = None

    @property
    def leader(self) -> str | None:
        return self.entries[0].platform if self.entries else None

    def order(self) -> tuple[str, ...]:
        return tuple(e.platform for e in self.entries)

    def totals(self) -> dict[str, float]:
        return {e.platform: e.total for e in self.entries}

    def as_dict(self) -> dict[str, Any]:
        return {"entries": [e.as_dict() for e in self.entries],
                "weights": self.weights.as_dict(),
                "snapshot_hash": self.snapshot_hash}


@dataclass
class EvaluationProject:
    """Aggregate for one evaluation: context, weights, platforms, scores, audit."""

    id: str
    organization: str
    industry: str | None = None
    phase: str = PHASES[0]
    version: int = 0
    weights: WeightVector = field(default_factory=WeightVector.uniform)
    stakeholders: list[StakeholderWeightInput] = field(default_factory=list)
    platforms: list[Platform] = field(default_factory=list)
    scorecards: dict[str, ScoreCard] = field(default_factory=dict)
    audit: list[AuditEntry] = field(default_factory=list)

    # -- mutation helpers (audit-recording) ---------------------------------

    def _record(self, action: str, actor: str, before: Any = None, after: Any = None) -> AuditEntry:
        entry = AuditEntry(timestamp=utc_now_iso(), actor=actor, action=action,
                           before=before, after=after)
        self.audit.append(entry)
        self.version += 1
        return entry

    def platform_ids(self) -> list[str]:
        return [p.id for p in self.platforms]

    def get_platform(self, platform_id: str) -> Platform:
        for p in self.platforms:
            if p.id == platform_id:
                return p
        raise ValidationError(f"unknown platform '{platform_id}'")

    def add_platform(self, platform: Platform, actor: str) -> None:
        if platform.id in self.platform_ids():
            raise ValidationError(f"platform id '{platform.id}' already exists")
        bad = platform.violations()
        if bad:
            raise ValidationError(bad)
        self.platforms.append(platform)
        self._record("platform.added", actor, after=platform.as_dict())

    def set_weights(self, weights: WeightVector, actor: str, action: str = "weights.set") -> None:
        weights.require_valid()
        before = self.weights.as_dict()
        self.weights = weights
        self._record(action, actor, before=before, after=weights.as_dict())

    def set_stakeholders(self, inputs: list[StakeholderWeightInput], actor: str) -> None:
        bad = [v for sw in inputs for v in sw.violations()]
        if bad:
            raise ValidationError(bad)
        before = [s.as_dict() for s in self.stakeholders]
        self.stakeholders = list(inputs)
        self._record("stakeholders.set", actor, before=before,
                     after=[s.as_dict() for s in self.stakeholders])

    def set_scorecard(self, card: ScoreCard, actor: str, action: str = "score.set") -> None:
        if card.platform not in self.platform_ids():
            raise ValidationError(f"scorecard references unknown platform '{card.platform}'")
        bad = card.violations(require_complete=False)
        if bad:
            raise ValidationError(bad)
        before = self.scorecards[card.platform].as_dict() if card.platform in self.scorecards else None
        self.scorecards[card.platform] = card
        self._record(action, actor, before=before, after=card.as_dict())

    def set_direct_score(self, platform_id: str, criterion: CriterionId, score: int, actor: str) -> None:
        criterion = CriterionId.parse(criterion)
        validate_likert(score, f"score for {platform_id}/{criterion.value}")
        if platform_id not in self.platform_ids():
            raise ValidationError(f"unknown platform '{platform_id}'")
        existing = self.scorecards.get(platform_id)
        if existing is not None and existing.mode != "direct":
            raise ValidationError(
                f"platform '{platform_id}' is scored at sub-criterion level; cannot mix direct scores")
        scores = dict(existing.direct_scores) if existing else {}
        scores[criterion] = score
        self.set_scorecard(ScoreCard.direct(platform_id, scores), actor)

    def set_phase(self, phase: str, actor: str, *, allow_reset: bool = False) -> None:
        if phase not in PHASES:
            raise ValidationError(f"unknown phase '{phase}' (known: {', '.join(PHASES)})")
        current_idx, new_idx = PHASES.index(self.phase), PHASES.index(phase)
        if new_idx < current_idx and not allow_reset:
            raise ValidationError(
                f"phase may only move forward (currently '{self.phase}'); pass reset to go back")
        action = "phase.reset" if new_idx < current_idx else "phase.advanced"
        before = self.phase
        self.phase = phase
        self._record(action, actor, before=before, after=phase)

    # -- canonical form ------------------------------------------------------

    def as_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "organization": self.organization,
            "industry": self.industry,
            "phase": self.phase,
            "version": self.version,
            "weights": self.weights.as_dict(),
            "stakeholders": [s.as_dict() for s in self.stakeholders],
            "platforms": [p.as_dict() for p in self.platforms],
            "scorecards": {pid: c.as_dict() for pid, c in self.scorecards.items()},
            "audit": [a.as_dict() for a in self.audit],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EvaluationProject":
        try:
            return cls(
                id=str(data["id"]),
                organization=str(data.get("organization", "")),
                industry=data.get("industry"),
                phase=str(data.get("phase", PHASES[0])),
                version=int(data.get("version", 0)),
                weights=WeightVector.from_dict(data.get("weights", WeightVector.uniform().as_dict())),
                stakeholders=[StakeholderWeightInput.from_dict(s) for s in data.get("stakeholders", [])],
                platforms=[Platform.from_dict(p) for p in data.get("platforms", [])],
                scorecards={str(pid): ScoreCard.from_dict(c)
                            for pid, c in data.get("scorecards", {}).items()},
                audit=[AuditEntry.from_dict(a) for a in data.get("audit", [])],
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed project document: {exc!r}") from exc


def new_project(organization: str, industry: str | None = None,
                weights: WeightVector | None = None, actor: str = "system",
                project_id: str | None = None) -> EvaluationProject:
    """Create a fresh project in the first phase with an initial audit entry."""
    project = EvaluationProject(
        id=project_id or uuid.uuid4().hex[:12],
        organization=organization,
        industry=industry,
        weights=(weights or WeightVector.uniform()).require_valid(),
    )
    project._record("project.created", actor,
                    after={"organization": organization, "industry": industry})
    return project


def canonical_json(data: Any) -> str:
    """Deterministic JSON used for checksums and file bodies."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False, allow_nan=False)


def project_content_hash(project: EvaluationProject) -> str:
    """SHA-256 hex digest of the project's canonical body (the snapshot hash)."""
    return hashlib.sha256(canonical_json(project.as_dict()).encode("utf-8")).hexdigest()


def validate_project(project: EvaluationProject, *,
                     require_complete_scorecards: bool = True) -> list[str]:
    """Collect every invariant violation; an empty list means the project is sound.

    ``require_complete_scorecards=False`` tolerates partially entered
    scorecards, which is the normal state while the assessment phase is
    still underway.
    """
    out: list[str] = []
    if project.phase not in PHASES:
        out.append(f"unknown phase '{project.phase}' (known: {', '.join(PHASES)})")
    if project.version < 0:
        out.append(f"version must be non-negative, got {project.version}")
    out.extend(project.weights.violations())

    seen_ids: set[str] = set()
    for platform in project.platforms:
        out.extend(platform.violations())
        if platform.id in seen_ids:
            out.append(f"duplicate platform id '{platform.id}'")
        seen_ids.add(platform.id)

    for pid, card in project.scorecards.items():
        if pid != card.platform:
            out.append(f"scorecard key '{pid}' does not match card platform '{card.platform}'")
        if card.platform not in seen_ids:
            out.append(f"scorecard references unknown platform '{card.platform}'")
        out.extend(card.violations(require_complete=require_complete_scorecards))

    for stakeholder in project.stakeholders:
        out.extend(stakeholder.violations())
    return out


def require_valid_project(project: EvaluationProject) -> EvaluationProject:
    violations = validate_project(project)
    if violations:
        raise ValidationError(violations)
    return project
