import { escapeHtml, fmt2, fmt4, pct } from "../format.js";
import {
  CRITERIA,
  CRITERION_LABELS,
  type CrossingDoc,
  type RankingResponse,
  type TemplateDoc,
  type Weights,
} from "../types.js";

function crossingNotes(criterion: string, crossings: CrossingDoc[]): string {
  const relevant = crossings.filter(
    (c) => c.criterion === criterion && c.kind === "crossing" && c.at !== null,
  );
  if (!relevant.length) return "";
  const notes = relevant.map(
    (c) =>
      `<span class="crossing" title="exact: ${fmt4(c.at as number)}">` +
      `at ${fmt2(c.at as number)} &rarr; ${escapeHtml(c.leader_above ?? "?")} overtakes</span>`,
  );
  return `<div class="crossings">${notes.join(" ")}</div>`;
}

/**
 * Five weight sliders with the live what-if ranking beside them. Slider
 * movement is preview-only; "Commit weights" persists via PUT. The template
 * picker renders each sector's weight distribution as a bar chart.
 */
export function renderWorkbench(
  weights: Weights,
  ranking: RankingResponse | null,
  previewActive: boolean,
  crossings: CrossingDoc[],
  templates: TemplateDoc[],
): string {
  const sliders = CRITERIA.map((criterion) => {
    const value = weights[criterion] ?? 0;
    return `<div class="slider-row">
      <label for="slider-${criterion}" title="${escapeHtml(CRITERION_LABELS[criterion])}">
        ${criterion}</label>
      <input type="range" id="slider-${criterion}" class="weight-slider"
        data-action="move-slider" data-criterion="${criterion}"
        min="0" max="1" step="0.001" value="${value}">
      <output data-weight-for="${criterion}">${fmt2(value)}</output>
      ${crossingNotes(criterion, crossings)}
    </div>`;
  }).join("");

  const rankingRows = ranking
    ? ranking.entries
        .map(
          (entry, idx) =>
            `<li data-rank-platform="${escapeHtml(entry.platform)}">` +
            `<span class="position">${idx + 1}.</span> ${escapeHtml(entry.platform)} ` +
            `<span class="total">${fmt2(entry.total)}</span>` +
            (entry.tie_group !== idx + 1 || hasTieSibling(ranking, entry.tie_group)
              ? ` <span class="tie-badge" title="Totals equal within tolerance">tie</span>`
              : "") +
            `</li>`,
        )
        .join("")
    : "<li class=\"muted\">ranking unavailable</li>";

  const leader = ranking?.entries[0]?.platform ?? null;
  const templateButtons = templates
    .map((template) => {
      const bars = CRITERIA.map((criterion) => {
        const weight = template.weights[criterion] ?? 0;
        return `<div class="bar-row"><span class="bar-label">${criterion}</span>
          <div class="bar" style="width: ${pct(weight)}"></div>
          <span class="bar-value">${fmt2(weight)}</span></div>`;
      }).join("");
      return `<div class="template-card" title="${escapeHtml(template.provenance)}">
        <button data-action="apply-template" data-sector="${escapeHtml(template.sector)}">
          ${escapeHtml(template.display_name)}</button>
        <div class="bar-chart">${bars}</div>
      </div>`;
    })
    .join("");

  return `<div class="workbench">
    <div class="sliders">
      ${sliders}
      <div class="workbench-actions">
        <button data-action="commit-weights" ${previewActive ? "" : "disabled"}>
          Commit weights</button>
        <button data-action="discard-preview" ${previewActive ? "" : "disabled"}>
          Discard</button>
        ${previewActive ? '<span class="preview-badge">preview (not saved)</span>' : ""}
      </div>
    </div>
    <div class="live-ranking" data-leader="${leader ? escapeHtml(leader) : ""}">
      <h3>${previewActive ? "What-if ranking" : "Current ranking"}</h3>
      <ol class="ranking-list">${rankingRows}</ol>
    </div>
    <div class="templates">
      <h3>Industry templates</h3>
      ${templateButtons}
    </div>
  </div>`;
}

function hasTieSibling(ranking: RankingResponse, tieGroup: number): boolean {
  return ranking.entries.filter((e) => e.tie_group === tieGroup).length > 1;
}
