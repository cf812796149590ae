/** Typed client for the evaluation service. All numbers shown in the UI originate here. */

import type {
  ProjectDoc,
  ProjectSummary,
  RankingResponse,
  SensitivityResponse,
  TemplateDoc,
  Weights,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly violations: string[] = [],
  ) {
    super(message);
  }
}

export interface WhatifBody {
  weights?: Weights;
  criterion?: string;
  new_value?: number;
}

export interface SensitivityBody {
  criteria?: string[];
  scenarios?: { name: string; weights: Weights }[];
  delta?: number;
}

async function raiseForStatus(response: Response): Promise<void> {
  if (response.ok) return;
  let message = `HTTP ${response.status}`;
  let violations: string[] = [];
  try {
    const body = await response.json();
    if (typeof body.error === "string") message = body.error;
    if (Array.isArray(body.violations)) violations = body.violations;
  } catch {
    // non-JSON error body: keep the status text
  }
  throw new ApiError(response.status, message, violations);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private url(path: string): string {
    return `${this.base}/api/v1${path}`;
  }

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.url(path), {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    await raiseForStatus(response);
    return (await response.json()) as T;
  }

  async listTemplates(): Promise<TemplateDoc[]> {
    const body = await this.json<{ templates: TemplateDoc[] }>("/templates");
    return body.templates;
  }

  async listProjects(): Promise<ProjectSummary[]> {
    const body = await this.json<{ projects: ProjectSummary[] }>("/projects");
    return body.projects;
  }

  createProject(payload: {
    organization: string;
    industry?: string;
    template?: string;
    platforms?: { id: string; name: string }[];
  }): Promise<ProjectDoc> {
    return this.json<ProjectDoc>("/projects", {
      method: "POST",
      body: JSON.stringify(payload),
    });
  }

  getProject(id: string): Promise<ProjectDoc> {
    return this.json<ProjectDoc>(`/projects/${id}`);
  }

  /** Replace the stored project; the doc's `version` is the optimistic token. */
  putProject(doc: ProjectDoc, actor = "webui"): Promise<ProjectDoc> {
    return this.json<ProjectDoc>(`/projects/${doc.id}`, {
      method: "PUT",
      body: JSON.stringify({ project: doc, actor }),
    });
  }

  async getAudit(id: string) {
    return this.json<{ project: string; entries: ProjectDoc["audit"] }>(
      `/projects/${id}/audit`,
    );
  }

  rank(id: string): Promise<RankingResponse> {
    return this.json<RankingResponse>(`/projects/${id}/rank`, { method: "POST" });
  }

  /** Read-only ranking under hypothetical weights; never mutates server state. */
  whatif(id: string, body: WhatifBody): Promise<RankingResponse> {
    return this.json<RankingResponse>(`/projects/${id}/whatif`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  sensitivity(id: string, body: SensitivityBody = {}): Promise<SensitivityResponse> {
    return this.json<SensitivityResponse>(`/projects/${id}/sensitivity`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  async report(id: string): Promise<string> {
    const response = await fetch(this.url(`/projects/${id}/report`), { method: "POST" });
    await raiseForStatus(response);
    return response.text();
  }
}
