/**
 * UI consistency acceptance: the workspace mirrors server state exactly.
 *
 * 1. Loading the reference project displays server-identical totals.
 * 2. Dragging the UCF slider past the annotated crossing flips the displayed
 *    leader to B.
 * 3. Uncommitted slider changes leave stored weights and the audit log
 *    unchanged after a reload.
 */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { fmt2 } from "../src/format.js";
import { WorkspaceStore } from "../src/state.js";
import { renderScoringGrid } from "../src/views/grid.js";
import { renderWorkbench } from "../src/views/workbench.js";
import { MockServer, UCF_CROSSING } from "./mockServer.js";

describe("UI consistency acceptance", () => {
  let server: MockServer;
  let store: WorkspaceStore;

  beforeEach(() => {
    vi.useFakeTimers();
    server = new MockServer();
    vi.stubGlobal("fetch", server.fetch);
    store = new WorkspaceStore(new ApiClient(""));
  });

  afterEach(() => vi.useRealTimers());

  it("displays server-identical totals for the reference project", async () => {
    await store.open("golden");
    const served = await new ApiClient("").rank("golden");
    const html = renderScoringGrid(store.project!, store.displayedRanking(),
                                   store.scoresIncomplete);
    for (const entry of served.entries) {
      expect(store.displayedRanking()?.entries).toContainEqual(entry);
      expect(html).toContain(`data-total-for="${entry.platform}">${fmt2(entry.total)}<`);
    }
    expect(html).toContain(">4.50<");
    expect(html).toContain(">4.30<");
    expect(html).toContain(">3.35<");
  });

  it("flips the displayed leader to B when UCF crosses the annotated point", async () => {
    await store.open("golden");
    const annotated = store.sensitivity?.crossings.find(
      (c) => c.criterion === "UCF" && c.kind === "crossing");
    expect(annotated?.at).toBeCloseTo(UCF_CROSSING, 9);
    expect(annotated?.leader_above).toBe("B");
    expect(store.displayedRanking()?.entries[0]?.platform).toBe("A");

    // Drag through several positions ending past the crossing.
    for (const value of [0.18, 0.22, 0.27, 0.33, 0.4]) {
      store.moveSlider("UCF", value);
    }
    await vi.runAllTimersAsync();

    const html = renderWorkbench(store.displayedWeights(), store.displayedRanking(),
                                 true, store.sensitivity?.crossings ?? [], []);
    expect(store.displayedRanking()?.entries[0]?.platform).toBe("B");
    expect(html).toContain('data-leader="B"');
  });

  it("leaves stored weights and audit untouched by uncommitted drags + reload", async () => {
    await store.open("golden");
    const storedWeights = { ...server.project.weights };
    const auditLength = server.project.audit.length;

    for (const value of [0.3, 0.35, 0.4]) store.moveSlider("UCF", value);
    await vi.runAllTimersAsync();
    expect(store.displayedRanking()?.entries[0]?.platform).toBe("B");

    await store.reload();
    expect(store.displayedWeights()).toEqual(storedWeights);
    expect(store.displayedRanking()?.entries[0]?.platform).toBe("A");
    expect(server.project.weights).toEqual(storedWeights);
    expect(server.project.audit).toHaveLength(auditLength);
    expect(server.requests("PUT")).toHaveLength(0);
    const auditResponse = await new ApiClient("").getAudit("golden");
    expect(auditResponse.entries).toHaveLength(auditLength);
  });
});
