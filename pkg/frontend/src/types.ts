/** Wire types mirroring the service payloads. No business rules live here. */

export const CRITERIA = ["BPO", "UCF", "II", "GS", "AEA"] as const;
export type Criterion = (typeof CRITERIA)[number];

export const CRITERION_LABELS: Record<Criterion, string> = {
  BPO: "Business Process Orchestration",
  UCF: "UI/UX Customization and Flexibility",
  II: "Integration and Interoperability",
  GS: "Governance and Security",
  AEA: "AI-Enhanced Automation",
};

export const PHASES = [
  "requirements_gathering",
  "criteria_weighting",
  "platform_assessment",
  "scoring_and_ranking",
  "sensitivity_analysis",
  "decision_validation",
] as const;

export const PHASE_LABELS: Record<string, string> = {
  requirements_gathering: "Requirements Gathering",
  criteria_weighting: "Criteria Weighting",
  platform_assessment: "Platform Assessment",
  scoring_and_ranking: "Scoring and Ranking",
  sensitivity_analysis: "Sensitivity Analysis",
  decision_validation: "Decision Validation",
};

export type Weights = Record<string, number>;

export interface PlatformInfo {
  id: string;
  name: string;
  vendor: string;
  notes: string;
}

export interface ScoreCardDoc {
  platform: string;
  mode: "direct" | "subcriterion";
  direct_scores?: Record<string, number>;
  sub_scores?: Record<string, number>;
  sub_weights?: Record<string, number>;
}

export interface AuditEntry {
  timestamp: string;
  actor: string;
  action: string;
  before: unknown;
  after: unknown;
}

export interface ProjectDoc {
  id: string;
  organization: string;
  industry: string | null;
  phase: string;
  version: number;
  weights: Weights;
  stakeholders: unknown[];
  platforms: PlatformInfo[];
  scorecards: Record<string, ScoreCardDoc>;
  audit: AuditEntry[];
}

export interface RankEntry {
  platform: string;
  total: number;
  contributions: Record<string, number>;
  tie_group: number;
}

export interface RankingResponse {
  entries: RankEntry[];
  weights: Weights;
  snapshot_hash: string | null;
}

export interface StabilityIntervalDoc {
  criterion: string;
  low: number;
  high: number;
  leader: string;
  low_exact: string | null;
  high_exact: string | null;
}

export interface CrossingDoc {
  criterion: string;
  x: string;
  y: string;
  kind: "crossing" | "none" | "always-equal";
  at: number | null;
  leader_below: string | null;
  leader_above: string | null;
}

export interface ScenarioRowDoc {
  name: string;
  weights: Weights;
  order: string[];
  totals: Record<string, number>;
}

export interface SensitivityResponse {
  intervals: StabilityIntervalDoc[];
  crossings: CrossingDoc[];
  scenarios: ScenarioRowDoc[];
  tornado: Record<string, [number, number]> | null;
  snapshot_hash: string | null;
}

export interface TemplateDoc {
  sector: string;
  display_name: string;
  weights: Weights;
  provenance: string;
}

export interface ProjectSummary {
  id: string;
  organization: string;
  phase: string;
  version: number;
  platforms: number;
}
