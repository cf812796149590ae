import { escapeHtml, fmt2 } from "../format.js";
import { CRITERIA, type ScenarioRowDoc } from "../types.js";

/** Side-by-side rankings for named weight scenarios (templates vs current). */
export function renderScenarioBoard(scenarios: ScenarioRowDoc[] | null): string {
  if (!scenarios) {
    return `<button data-action="load-scenarios">Compare scenarios</button>`;
  }
  const cards = scenarios.map((row) => {
    const weightChips = CRITERIA.map(
      (c) => `<span class="chip">${c} ${fmt2(row.weights[c] ?? 0)}</span>`,
    ).join("");
    const items = row.order
      .map(
        (pid, idx) =>
          `<li><span class="position">${idx + 1}.</span> ${escapeHtml(pid)}
           <span class="total">${fmt2(row.totals[pid] ?? NaN)}</span></li>`,
      )
      .join("");
    return `<div class="scenario-card" data-scenario="${escapeHtml(row.name)}">
      <h4>${escapeHtml(row.name)}</h4>
      <div class="chips">${weightChips}</div>
      <ol>${items}</ol>
    </div>`;
  });
  return `<div class="scenario-board">${cards.join("")}
    <button data-action="load-scenarios" class="refresh">Refresh</button></div>`;
}
