// View state and pure helpers: bid validation and round narration.
// All winner strings shown to the user come verbatim from server records.

import {
  BidWire,
  PlayerToken,
  RoundWire,
  SessionWire,
  humanBudget,
  humanOwnsMarker,
  opponent,
} from "./model.js";

export interface ExplorerState {
  game: string;
  tbFrom: number;
  tbTo: number;
}

export interface ViewState {
  session: SessionWire | null;
  pendingAmount: number;
  pendingMarker: boolean;
  error: string | null;
  explorer: ExplorerState;
}

export function initialViewState(): ViewState {
  return {
    session: null,
    pendingAmount: 0,
    pendingMarker: false,
    error: null,
    explorer: { game: "*", tbFrom: 0, tbTo: 3 },
  };
}

export function bidLabel(bid: BidWire): string {
  return bid.marker ? `${bid.amount}̂` : `${bid.amount}`;
}

export function playerName(p: PlayerToken): string {
  return p === "L" ? "Left" : "Right";
}

// The bid form may only submit amounts within the player's own budget, and
// the marker toggle only exists for its owner.
export function bidIsLegal(s: SessionWire, amount: number, marker: boolean): boolean {
  if (!Number.isInteger(amount)) return false;
  if (amount < 0 || amount > humanBudget(s)) return false;
  if (marker && !humanOwnsMarker(s)) return false;
  return true;
}

export function bidControlsEnabled(s: SessionWire | null): boolean {
  return s !== null && s.phase === "awaiting_bid";
}

// One narration block per completed auction round.
export function narrateRound(s: SessionWire, round: RoundWire): string[] {
  const lines: string[] = [];
  lines.push(
    `at ${round.position}: Left bids ${bidLabel(round.left_bid)}, ` +
      `Right bids ${bidLabel(round.right_bid)}`,
  );
  const mover = round.mover;
  const paid = mover === "L" ? round.left_bid.amount : round.right_bid.amount;
  lines.push(
    `${playerName(mover)} wins the bid and pays $${paid} to ${playerName(opponent(mover))}`,
  );
  if (round.marker_after !== round.marker_before) {
    lines.push(`the marker passes to ${playerName(round.marker_after)}`);
  }
  if (round.move_to !== null) {
    const actor = mover === s.human_side ? "you" : "engine";
    lines.push(`${actor} (${playerName(mover)}) moves to ${round.move_to}`);
  }
  return lines;
}

export function finishedBanner(s: SessionWire): string | null {
  if (s.phase !== "finished" || s.winner === null) return null;
  const loser = opponent(s.winner);
  const who = s.winner === s.human_side ? "you win" : "the engine wins";
  return `${playerName(loser)} cannot move and loses: ${who} (${s.winner}).`;
}

export function splitWord(word: string): [string, string] {
  const half = word.length / 2;
  return [word.slice(0, half), word.slice(half)];
}

export function budgetHeaders(tb: number): string[] {
  const out: string[] = [];
  for (let p = tb; p >= 0; p--) out.push(String(p));
  return out;
}
