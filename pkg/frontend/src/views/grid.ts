import { escapeHtml, fmt2 } from "../format.js";
import {
  CRITERIA,
  CRITERION_LABELS,
  type ProjectDoc,
  type RankingResponse,
} from "../types.js";

const LIKERT = [1, 2, 3, 4, 5];

/**
 * Platforms x criteria scoring grid with a live totals column. Totals come
 * straight from the server ranking; while scores are incomplete the column
 * shows a placeholder instead of anything computed locally.
 */
export function renderScoringGrid(
  project: ProjectDoc,
  ranking: RankingResponse | null,
  scoresIncomplete: boolean,
): string {
  const totals = new Map(ranking?.entries.map((e) => [e.platform, e.total]) ?? []);
  const header = CRITERIA.map(
    (c) => `<th title="${escapeHtml(CRITERION_LABELS[c])}">${c}</th>`,
  ).join("");

  const rows = project.platforms.map((platform) => {
    const card = project.scorecards[platform.id];
    const cells = CRITERIA.map((criterion) => {
      if (card && card.mode === "subcriterion") {
        return `<td class="subcriterion-cell" title="Scored at sub-criterion level">roll-up</td>`;
      }
      const value = card?.direct_scores?.[criterion];
      const options = LIKERT.map(
        (v) =>
          `<option value="${v}" ${v === value ? "selected" : ""}>${v}</option>`,
      ).join("");
      return `<td><select class="score-input" data-action="set-score"
        data-platform="${escapeHtml(platform.id)}" data-criterion="${criterion}">
        <option value="" ${value === undefined ? "selected" : ""}>-</option>${options}
      </select></td>`;
    }).join("");
    const total = totals.get(platform.id);
    const totalCell =
      total !== undefined
        ? `<td class="total" data-total-for="${escapeHtml(platform.id)}">${fmt2(total)}</td>`
        : `<td class="total muted">${scoresIncomplete ? "incomplete" : "-"}</td>`;
    return `<tr>
      <th scope="row">${escapeHtml(platform.name)} <code>${escapeHtml(platform.id)}</code></th>
      ${cells}${totalCell}
    </tr>`;
  });

  return `<table class="scoring-grid">
    <thead><tr><th>Platform</th>${header}<th>Total</th></tr></thead>
    <tbody>${rows.join("")}</tbody>
  </table>`;
}
