// Wire types mirroring the service JSON exactly. The UI never computes
// winners locally; everything shown comes from these records.

export type PlayerToken = "L" | "R";

export interface BidWire {
  amount: number;
  marker: boolean;
}

export interface RoundWire {
  position: string;
  left_budget_before: number;
  marker_before: PlayerToken;
  left_bid: BidWire;
  right_bid: BidWire;
  mover: PlayerToken;
  left_budget_after: number;
  marker_after: PlayerToken;
  move_index: number | null;
  move_to: string | null;
}

export type Phase = "awaiting_bid" | "awaiting_human_move" | "finished";

export interface SessionWire {
  id: string;
  game: string;
  tb: number;
  left_budget: number;
  marker: PlayerToken;
  human_side: PlayerToken;
  phase: Phase;
  winner: PlayerToken | null;
  options: string[];
  history: RoundWire[];
}

export interface ShortFormWire {
  a: number;
  b: number;
}

export interface OutcomeRecordWire {
  tb: number;
  word: string;
  short_form: ShortFormWire;
  feasible: boolean;
}

export interface ConstructWire {
  game: string;
  word: string;
}

export interface LatticeWire {
  tb: number;
  nodes: number[][];
  edges: number[][][];
}

export function opponent(p: PlayerToken): PlayerToken {
  return p === "L" ? "R" : "L";
}

export function rightBudget(s: SessionWire): number {
  return s.tb - s.left_budget;
}

export function humanBudget(s: SessionWire): number {
  return s.human_side === "L" ? s.left_budget : rightBudget(s);
}

export function humanOwnsMarker(s: SessionWire): boolean {
  return s.marker === s.human_side;
}
