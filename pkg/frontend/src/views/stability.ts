import { escapeHtml, fmt2, fmt4, pct } from "../format.js";
import type { SensitivityResponse, Weights } from "../types.js";

/**
 * Per-criterion stability bands on a [0, 1] weight axis: the shaded band is
 * where the current leader keeps rank 1, the marker is the stored weight.
 * Crossing points are annotated with the platform that takes over.
 */
export function renderStabilityView(
  sensitivity: SensitivityResponse | null,
  weights: Weights,
): string {
  if (!sensitivity) {
    return `<p class="muted">Sensitivity is available once every platform is fully scored.</p>`;
  }
  const rows = sensitivity.intervals.map((interval) => {
    const current = weights[interval.criterion] ?? 0;
    const exact =
      interval.low_exact || interval.high_exact
        ? ` <span class="exact">(exact: ${escapeHtml(interval.low_exact ?? "?")} .. ${escapeHtml(
            interval.high_exact ?? "?",
          )})</span>`
        : "";
    const crossings = sensitivity.crossings
      .filter((c) => c.criterion === interval.criterion && c.kind === "crossing")
      .map(
        (c) =>
          `<span class="axis-mark" style="left: ${pct(c.at as number)}"
             title="${escapeHtml(c.x)} vs ${escapeHtml(c.y)}: exact ${fmt4(c.at as number)};
 ${escapeHtml(c.leader_above ?? "?")} leads above">${fmt2(c.at as number)}&nbsp;&rarr;&nbsp;${escapeHtml(
            c.leader_above ?? "?",
          )}</span>`,
      )
      .join("");
    return `<div class="stability-row" data-criterion="${interval.criterion}">
      <div class="stability-head">
        <strong>${interval.criterion}</strong>
        leader ${escapeHtml(interval.leader)} stays first for
        [${fmt4(interval.low)}, ${fmt4(interval.high)}]${exact}
      </div>
      <div class="axis">
        <div class="band" style="left: ${pct(interval.low)}; width: ${pct(
          Math.max(interval.high - interval.low, 0),
        )}"></div>
        <div class="marker" style="left: ${pct(current)}" title="current weight ${fmt2(
          current,
        )}"></div>
        ${crossings}
      </div>
    </div>`;
  });
  return `<div class="stability-view">${rows.join("")}</div>`;
}
