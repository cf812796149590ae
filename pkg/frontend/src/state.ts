/**
 * Workspace state over the HTTP API. Holds the stored project plus the
 * transient what-if preview from slider drags. Business rules stay on the
 * server: every displayed number is a server response, and slider movement
 * issues only read-only what-if calls until the user commits.
 */

import { ApiClient, ApiError } from "./api.js";
import { trailingDebounce, type Debounced } from "./debounce.js";
import type {
  ProjectDoc,
  RankingResponse,
  ScenarioRowDoc,
  SensitivityResponse,
  TemplateDoc,
  Weights,
} from "./types.js";

export const SLIDER_DEBOUNCE_MS = 50;

export type Listener = () => void;

export class WorkspaceStore {
  project: ProjectDoc | null = null;
  ranking: RankingResponse | null = null;
  sensitivity: SensitivityResponse | null = null;
  templates: TemplateDoc[] = [];
  scenarios: ScenarioRowDoc[] | null = null;

  /** Uncommitted what-if state from the weight sliders. */
  preview: RankingResponse | null = null;
  /** Server-computed weight vector behind the preview (used on commit). */
  previewWeights: Weights | null = null;
  /** Slider positions as dragged, before the server echoes back. */
  draftWeights: Weights | null = null;

  conflict = false;
  scoresIncomplete = false;
  error: string | null = null;

  private listeners: Listener[] = [];
  private whatifCall: Debounced<[string, number]>;

  constructor(
    private readonly api: ApiClient,
    debounceMs: number = SLIDER_DEBOUNCE_MS,
  ) {
    this.whatifCall = trailingDebounce((criterion: string, value: number) => {
      void this.runWhatif(criterion, value);
    }, debounceMs);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  /** Weights the sliders should show right now. */
  displayedWeights(): Weights {
    return this.draftWeights ?? this.previewWeights ?? this.project?.weights ?? {};
  }

  /** Ranking the UI should show right now (preview wins while dragging). */
  displayedRanking(): RankingResponse | null {
    return this.preview ?? this.ranking;
  }

  async open(projectId: string): Promise<void> {
    this.project = await this.api.getProject(projectId);
    this.templates = await this.api.listTemplates();
    await this.refreshComputations();
    this.emit();
  }

  /** Re-fetches stored state and drops any uncommitted slider preview. */
  async reload(): Promise<void> {
    if (!this.project) return;
    this.whatifCall.cancel();
    this.preview = null;
    this.previewWeights = null;
    this.draftWeights = null;
    this.conflict = false;
    this.error = null;
    await this.open(this.project.id);
  }

  private async refreshComputations(): Promise<void> {
    if (!this.project) return;
    try {
      this.ranking = await this.api.rank(this.project.id);
      this.sensitivity = await this.api.sensitivity(this.project.id);
      this.scoresIncomplete = false;
    } catch (error) {
      if (error instanceof ApiError && error.status === 400) {
        // Not every platform is fully scored yet: totals are unavailable.
        this.ranking = null;
        this.sensitivity = null;
        this.scoresIncomplete = true;
      } else {
        throw error;
      }
    }
  }

  // -- weight workbench -------------------------------------------------------

  /** Slider drag handler: only ever triggers read-only what-if calls. */
  moveSlider(criterion: string, value: number): void {
    if (!this.project) return;
    this.draftWeights = { ...this.displayedWeights(), [criterion]: value };
    this.whatifCall(criterion, value);
    this.emit();
  }

  private async runWhatif(criterion: string, value: number): Promise<void> {
    if (!this.project) return;
    try {
      const result = await this.api.whatif(this.project.id, {
        criterion,
        new_value: value,
      });
      this.preview = result;
      this.previewWeights = result.weights;
      this.draftWeights = null;
      this.error = null;
    } catch (error) {
      this.error = error instanceof Error ? error.message : String(error);
    }
    this.emit();
  }

  /** Persist the previewed weights via PUT (audited server-side). */
  async commitWeights(): Promise<void> {
    if (!this.project || !this.previewWeights) return;
    await this.putProject({ ...this.project, weights: this.previewWeights });
    if (!this.conflict) {
      this.preview = null;
      this.previewWeights = null;
      this.draftWeights = null;
    }
    this.emit();
  }

  discardPreview(): void {
    this.whatifCall.cancel();
    this.preview = null;
    this.previewWeights = null;
    this.draftWeights = null;
    this.emit();
  }

  async applyTemplate(sector: string): Promise<void> {
    if (!this.project) return;
    const template = this.templates.find((t) => t.sector === sector);
    if (!template) return;
    await this.putProject({ ...this.project, weights: template.weights });
    this.preview = null;
    this.previewWeights = null;
    this.emit();
  }

  // -- scoring grid ------------------------------------------------------------

  async setScore(platformId: string, criterion: string, score: number): Promise<void> {
    if (!this.project) return;
    const scorecards = { ...this.project.scorecards };
    const existing = scorecards[platformId];
    scorecards[platformId] = {
      platform: platformId,
      mode: "direct",
      direct_scores: { ...(existing?.direct_scores ?? {}), [criterion]: score },
    };
    await this.putProject({ ...this.project, scorecards });
    this.emit();
  }

  // -- phases -------------------------------------------------------------------

  async setPhase(phase: string): Promise<void> {
    if (!this.project) return;
    await this.putProject({ ...this.project, phase });
    this.emit();
  }

  // -- scenarios and report -------------------------------------------------------

  async loadScenarioBoard(): Promise<void> {
    if (!this.project) return;
    const scenarios = this.templates.map((t) => ({
      name: t.display_name,
      weights: t.weights,
    }));
    scenarios.unshift({ name: "Current weights", weights: this.project.weights });
    const result = await this.api.sensitivity(this.project.id, { scenarios });
    this.scenarios = result.scenarios;
    this.emit();
  }

  downloadReport(): Promise<string> {
    if (!this.project) return Promise.reject(new Error("no project open"));
    return this.api.report(this.project.id);
  }

  // -- shared PUT path with conflict handling --------------------------------------

  private async putProject(doc: ProjectDoc): Promise<void> {
    try {
      this.project = await this.api.putProject(doc);
      this.conflict = false;
      this.error = null;
      await this.refreshComputations();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // Someone else moved the project: surface the reload prompt.
        this.conflict = true;
      } else if (error instanceof ApiError) {
        this.error = error.violations.length
          ? error.violations.join("; ")
          : error.message;
      } else {
        throw error;
      }
    }
  }
}
