import { escapeHtml } from "../format.js";
import { PHASES, PHASE_LABELS, type ProjectDoc } from "../types.js";

/** Six-phase workflow stepper; the current phase is highlighted. */
export function renderStepper(project: ProjectDoc): string {
  const currentIdx = PHASES.indexOf(project.phase as (typeof PHASES)[number]);
  const steps = PHASES.map((phase, idx) => {
    const state = idx < currentIdx ? "done" : idx === currentIdx ? "current" : "todo";
    return `<li class="step ${state}" data-phase="${phase}">
      <span class="step-index">${idx + 1}</span>
      <button class="step-label" data-action="set-phase" data-phase="${phase}">
        ${escapeHtml(PHASE_LABELS[phase] ?? phase)}
      </button>
    </li>`;
  });
  return `<ol class="stepper">${steps.join("")}</ol>`;
}
