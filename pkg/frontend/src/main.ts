/** DOM bootstrap: project picker, store wiring, event delegation, rendering. */

import { ApiClient } from "./api.js";
import { escapeHtml } from "./format.js";
import { WorkspaceStore } from "./state.js";
import { renderScoringGrid } from "./views/grid.js";
import { renderScenarioBoard } from "./views/scenarios.js";
import { renderStabilityView } from "./views/stability.js";
import { renderStepper } from "./views/stepper.js";
import { renderWorkbench } from "./views/workbench.js";

const api = new ApiClient("");
const store = new WorkspaceStore(api);

function render(): void {
  const root = document.getElementById("app");
  if (!root) return;
  const project = store.project;
  if (!project) return;

  const previewActive = store.previewWeights !== null || store.draftWeights !== null;
  root.innerHTML = `
    <header>
      <h1>${escapeHtml(project.organization)}
        <code class="project-id">${escapeHtml(project.id)}</code></h1>
      ${store.conflict ? `<div class="banner conflict">
          This project changed elsewhere.
          <button data-action="reload">Reload</button></div>` : ""}
      ${store.error ? `<div class="banner error">${escapeHtml(store.error)}</div>` : ""}
      ${renderStepper(project)}
    </header>
    <section id="grid">
      <h2>Scoring Grid</h2>
      ${renderScoringGrid(project, store.ranking, store.scoresIncomplete)}
    </section>
    <section id="workbench">
      <h2>Weight Workbench</h2>
      ${renderWorkbench(
        store.displayedWeights(),
        store.displayedRanking(),
        previewActive,
        store.sensitivity?.crossings ?? [],
        store.templates,
      )}
    </section>
    <section id="stability">
      <h2>Rank Stability</h2>
      ${renderStabilityView(store.sensitivity, project.weights)}
    </section>
    <section id="scenarios">
      <h2>Scenario Board</h2>
      ${renderScenarioBoard(store.scenarios)}
    </section>
    <section id="report">
      <button data-action="download-report">Download report (markdown)</button>
    </section>`;
}

async function downloadReport(): Promise<void> {
  const markdown = await store.downloadReport();
  const blob = new Blob([markdown], { type: "text/markdown" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = `${store.project?.id ?? "evaluation"}-report.md`;
  anchor.click();
  URL.revokeObjectURL(url);
}

function wireEvents(): void {
  document.addEventListener("input", (event) => {
    const target = event.target as HTMLElement;
    if (target.matches('[data-action="move-slider"]')) {
      const input = target as HTMLInputElement;
      store.moveSlider(input.dataset.criterion ?? "", Number(input.value));
    }
  });

  document.addEventListener("change", (event) => {
    const target = event.target as HTMLElement;
    if (target.matches('[data-action="set-score"]')) {
      const select = target as HTMLSelectElement;
      if (select.value === "") return;
      void store.setScore(
        select.dataset.platform ?? "",
        select.dataset.criterion ?? "",
        Number(select.value),
      );
    }
  });

  document.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-action]");
    if (!target) return;
    const action = (target as HTMLElement).dataset.action;
    switch (action) {
      case "commit-weights":
        void store.commitWeights();
        break;
      case "discard-preview":
        store.discardPreview();
        break;
      case "apply-template":
        void store.applyTemplate((target as HTMLElement).dataset.sector ?? "");
        break;
      case "set-phase":
        void store.setPhase((target as HTMLElement).dataset.phase ?? "");
        break;
      case "load-scenarios":
        void store.loadScenarioBoard();
        break;
      case "download-report":
        void downloadReport();
        break;
      case "reload":
        void store.reload();
        break;
    }
  });
}

async function pickProject(): Promise<string | null> {
  const projects = await api.listProjects();
  if (projects.length === 1 && projects[0]) return projects[0].id;
  const root = document.getElementById("app");
  if (!root) return null;
  if (!projects.length) {
    root.innerHTML = `<p class="muted">No projects yet. Create one:</p>
      <form id="create-form">
        <input name="organization" placeholder="Organization" required>
        <button type="submit">Create project</button>
      </form>`;
    return new Promise((resolve) => {
      document.getElementById("create-form")?.addEventListener("submit", (event) => {
        event.preventDefault();
        const input = (event.target as HTMLFormElement).elements.namedItem(
          "organization",
        ) as HTMLInputElement;
        void api.createProject({ organization: input.value }).then((doc) => resolve(doc.id));
      });
    });
  }
  root.innerHTML = `<h1>Choose a project</h1><ul class="project-list">${projects
    .map(
      (p) =>
        `<li><button data-project-id="${escapeHtml(p.id)}">${escapeHtml(
          p.organization,
        )} <code>${escapeHtml(p.id)}</code> (${p.platforms} platforms)</button></li>`,
    )
    .join("")}</ul>`;
  return new Promise((resolve) => {
    root.addEventListener(
      "click",
      (event) => {
        const button = (event.target as HTMLElement).closest("[data-project-id]");
        if (button) resolve((button as HTMLElement).dataset.projectId ?? null);
      },
      { once: true },
    );
  });
}

async function boot(): Promise<void> {
  wireEvents();
  store.subscribe(render);
  const projectId = await pickProject();
  if (projectId) await store.open(projectId);
}

void boot();
