// Thin typed client for the bidgame JSON service.

import {
  ConstructWire,
  LatticeWire,
  OutcomeRecordWire,
  PlayerToken,
  SessionWire,
} from "./model.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(
      response.status,
      body.error ?? "unknown",
      body.message ?? response.statusText,
    );
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return unwrap<T>(response);
  }

  private async get<T>(path: string): Promise<T> {
    return unwrap<T>(await fetch(this.baseUrl + path));
  }

  solve(game: string, tb: number): Promise<OutcomeRecordWire> {
    return this.post("/api/solve", { game, tb });
  }

  construct(tb: number, a: number, b: number): Promise<ConstructWire> {
    return this.post("/api/construct", { tb, a, b });
  }

  lattice(tb: number): Promise<LatticeWire> {
    return this.get(`/api/lattice/${tb}`);
  }

  createSession(
    game: string,
    tb: number,
    leftBudget: number,
    marker: PlayerToken,
    humanSide: PlayerToken,
  ): Promise<SessionWire> {
    return this.post("/api/session", {
      game,
      tb,
      left_budget: leftBudget,
      marker,
      human_side: humanSide,
    });
  }

  submitBid(
    sessionId: string,
    amount: number,
    includeMarker: boolean,
  ): Promise<SessionWire> {
    return this.post(`/api/session/${sessionId}/bid`, {
      amount,
      include_marker: includeMarker,
    });
  }

  submitMove(sessionId: string, index: number): Promise<SessionWire> {
    return this.post(`/api/session/${sessionId}/move`, { index });
  }

  getSession(sessionId: string): Promise<SessionWire> {
    return this.get(`/api/session/${sessionId}`);
  }
}
