// End-to-end: the UI layers driven against the live Python service.

import { beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { OutcomeRecordWire, SessionWire } from "../src/model.js";
import { renderHistory, renderOutcomeRow } from "../src/render.js";
import { BASE_URL } from "./globalSetup.js";

const api = new ApiClient(BASE_URL);

describe("scripted play session: Right vs engine on (*, TB=2, marker Left)", () => {
  let snap: SessionWire;

  beforeAll(async () => {
    snap = await api.createSession("*", 2, 1, "L", "R");
  });

  it("starts awaiting a bid", () => {
    expect(snap.phase).toBe("awaiting_bid");
  });

  it("shows the engine bid 1 with marker and its move to 0", async () => {
    snap = await api.submitBid(snap.id, 1, false);
    const html = renderHistory(snap);
    expect(html).toContain("Left bids 1̂");
    expect(html).toContain("engine (Left) moves to 0");
    expect(snap.game).toBe("0");
  });

  it("ends with an engine win announced", async () => {
    snap = await api.submitBid(snap.id, 0, false);
    expect(snap.phase).toBe("finished");
    expect(snap.winner).toBe("L");
    const html = renderHistory(snap);
    expect(html).toContain("Right cannot move and loses: the engine wins (L).");
  });
});

describe("explorer reproduces server words byte for byte", () => {
  it("renders the * row from live responses only", async () => {
    const records: OutcomeRecordWire[] = [];
    for (let tb = 0; tb <= 3; tb++) {
      records.push(await api.solve("*", tb));
    }
    const row = renderOutcomeRow("*", records);

    // an independent second fetch: the displayed words must match exactly
    const fresh = await Promise.all(
      [0, 1, 2, 3].map((tb) => api.solve("*", tb)),
    );
    expect(fresh.map((r) => r.word)).toEqual([
      "LR",
      "LRLR",
      "LLRLRR",
      "LLRRLLRR",
    ]);
    for (const record of fresh) {
      expect(row).toContain(`data-word="${record.word}"`);
      const half = record.word.length / 2;
      expect(row).toContain(`>${record.word.slice(0, half)}</span>`);
      expect(row).toContain(`>${record.word.slice(half)}</span>`);
    }
  });
});

describe("other endpoints through the client", () => {
  it("constructs a witness", async () => {
    const res = await api.construct(3, 2, 0);
    expect(res.word).toBe("LLRRLLLL");
  });

  it("fetches the lattice", async () => {
    const lattice = await api.lattice(1);
    expect(lattice.nodes).toHaveLength(8);
    expect(lattice.edges).toHaveLength(10);
  });

  it("surfaces server errors with their code", async () => {
    await expect(api.solve("{0|", 1)).rejects.toMatchObject({
      code: "parse_error",
    });
    await expect(api.construct(2, 0, 2)).rejects.toMatchObject({
      code: "infeasible",
    });
    const err = await api.getSession("nope").catch((e: ApiError) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(404);
  });

  it("rejects an illegal bid without changing the session", async () => {
    const session = await api.createSession("*", 2, 1, "L", "R");
    await expect(api.submitBid(session.id, 9, false)).rejects.toMatchObject({
      code: "illegal_bid",
    });
    await expect(api.submitBid(session.id, 0, true)).rejects.toMatchObject({
      code: "illegal_bid",
    });
    const after = await api.getSession(session.id);
    expect(after.history).toHaveLength(0);
    expect(after.phase).toBe("awaiting_bid");
  });

  it("runs a human-move flow", async () => {
    let session = await api.createSession("^", 1, 1, "L", "L");
    session = await api.submitBid(session.id, 1, true);
    expect(session.phase).toBe("awaiting_human_move");
    expect(session.options).toEqual(["0"]);
    session = await api.submitMove(session.id, 0);
    expect(session.game).toBe("0");
    expect(session.phase).toBe("awaiting_bid");
  });
});
