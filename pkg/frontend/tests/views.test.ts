import { describe, expect, it } from "vitest";

import { renderScoringGrid } from "../src/views/grid.js";
import { renderScenarioBoard } from "../src/views/scenarios.js";
import { renderStabilityView } from "../src/views/stability.js";
import { renderStepper } from "../src/views/stepper.js";
import { renderWorkbench } from "../src/views/workbench.js";
import type { RankingResponse, SensitivityResponse } from "../src/types.js";
import { TABLE2_WEIGHTS, table2Project, UCF_CROSSING } from "./mockServer.js";

const RANKING: RankingResponse = {
  entries: [
    { platform: "A", total: 4.5, contributions: {}, tie_group: 1 },
    { platform: "B", total: 4.3, contributions: {}, tie_group: 2 },
    { platform: "C", total: 3.35, contributions: {}, tie_group: 3 },
  ],
  weights: TABLE2_WEIGHTS,
  snapshot_hash: "feedface",
};

describe("scoring grid", () => {
  it("renders totals exactly as served, never recomputed", () => {
    // 9.99 is impossible under any 1-5 x weights arithmetic: if it renders,
    // the total provably came from the server payload.
    const served: RankingResponse = {
      ...RANKING,
      entries: [{ platform: "A", total: 9.99, contributions: {}, tie_group: 1 },
                ...RANKING.entries.slice(1)],
    };
    const html = renderScoringGrid(table2Project(), served, false);
    expect(html).toContain(">9.99<");
    expect(html).toContain(">4.30<");
    expect(html).toContain(">3.35<");
  });

  it("shows a placeholder while scores are incomplete", () => {
    const html = renderScoringGrid(table2Project(), null, true);
    expect(html).toContain("incomplete");
  });

  it("marks selected Likert values", () => {
    const html = renderScoringGrid(table2Project(), RANKING, false);
    expect(html).toContain('data-platform="A" data-criterion="BPO"');
    expect(html.match(/selected/g)?.length).toBeGreaterThan(0);
  });
});

describe("workbench", () => {
  const sensitivity: SensitivityResponse = {
    intervals: [],
    crossings: [
      { criterion: "UCF", x: "A", y: "B", kind: "crossing", at: UCF_CROSSING,
        leader_below: "A", leader_above: "B" },
    ],
    scenarios: [],
    tornado: null,
    snapshot_hash: "feedface",
  };

  it("renders the served leader first", () => {
    const bLed: RankingResponse = {
      ...RANKING,
      entries: [
        { platform: "B", total: 4.51, contributions: {}, tie_group: 1 },
        { platform: "A", total: 4.35, contributions: {}, tie_group: 2 },
        { platform: "C", total: 3.2, contributions: {}, tie_group: 3 },
      ],
    };
    const html = renderWorkbench(TABLE2_WEIGHTS, bLed, true, [], []);
    expect(html).toContain('data-leader="B"');
    expect(html.indexOf("data-rank-platform=\"B\""))
      .toBeLessThan(html.indexOf("data-rank-platform=\"A\""));
  });

  it("annotates crossings at 2 decimals with the exact value on hover", () => {
    const html = renderWorkbench(TABLE2_WEIGHTS, RANKING, false,
                                 sensitivity.crossings, []);
    expect(html).toContain("at 0.29");
    expect(html).toContain('title="exact: 0.2917"');
    expect(html).toContain("B overtakes");
  });

  it("disables commit until a preview exists", () => {
    const idle = renderWorkbench(TABLE2_WEIGHTS, RANKING, false, [], []);
    expect(idle).toMatch(/data-action="commit-weights" disabled/);
    const active = renderWorkbench(TABLE2_WEIGHTS, RANKING, true, [], []);
    expect(active).not.toMatch(/data-action="commit-weights" disabled/);
    expect(active).toContain("preview (not saved)");
  });

  it("renders template bar charts from served weights", () => {
    const html = renderWorkbench(TABLE2_WEIGHTS, RANKING, false, [], [
      { sector: "pharma", display_name: "Pharma",
        weights: { BPO: 0.22, UCF: 0.12, II: 0.21, GS: 0.3, AEA: 0.15 },
        provenance: "trend" },
    ]);
    expect(html).toContain('data-sector="pharma"');
    expect(html).toContain("width: 30.00%");
  });
});

describe("stability view", () => {
  it("draws bands from interval bounds and annotates the overtaking platform", () => {
    const sensitivity: SensitivityResponse = {
      intervals: [
        { criterion: "UCF", low: 0, high: UCF_CROSSING, leader: "A",
          low_exact: "0", high_exact: "7/24" },
      ],
      crossings: [
        { criterion: "UCF", x: "A", y: "B", kind: "crossing", at: UCF_CROSSING,
          leader_below: "A", leader_above: "B" },
      ],
      scenarios: [], tornado: null, snapshot_hash: "feedface",
    };
    const html = renderStabilityView(sensitivity, TABLE2_WEIGHTS);
    expect(html).toContain("[0.0000, 0.2917]");
    expect(html).toContain("exact: 0 .. 7/24");
    expect(html).toContain("0.29&nbsp;&rarr;&nbsp;B");
  });
});

describe("stepper", () => {
  it("marks the current phase", () => {
    const html = renderStepper(table2Project());
    expect(html).toContain('class="step current" data-phase="scoring_and_ranking"');
    expect(html).toContain("Sensitivity Analysis");
  });
});

describe("scenario board", () => {
  it("renders rows from served totals", () => {
    const html = renderScenarioBoard([
      { name: "Pharma", weights: TABLE2_WEIGHTS, order: ["A", "B", "C"],
        totals: { A: 4.47, B: 4.28, C: 3.31 } },
    ]);
    expect(html).toContain("Pharma");
    expect(html).toContain("4.47");
  });

  it("offers the load button before any comparison ran", () => {
    expect(renderScenarioBoard(null)).toContain('data-action="load-scenarios"');
  });
});
