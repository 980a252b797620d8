// Pure HTML renderers. Every winner character placed in the DOM is copied
// from a server response; snapshot tests compare these bytes directly.

import {
  LatticeWire,
  OutcomeRecordWire,
  SessionWire,
  rightBudget,
} from "./model.js";
import {
  bidControlsEnabled,
  budgetHeaders,
  finishedBanner,
  narrateRound,
  playerName,
  splitWord,
} from "./state.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderPlayerPanels(s: SessionWire): string {
  const marker = (side: "L" | "R") =>
    s.marker === side ? ' <span class="marker-badge">marker</span>' : "";
  const you = (side: "L" | "R") => (s.human_side === side ? " (you)" : " (engine)");
  return (
    `<div class="panel" data-side="L">Left${you("L")}: $${s.left_budget}${marker("L")}</div>` +
    `<div class="panel" data-side="R">Right${you("R")}: $${rightBudget(s)}${marker("R")}</div>` +
    `<div class="position">position: <code>${escapeHtml(s.game)}</code></div>`
  );
}

export function renderHistory(s: SessionWire): string {
  const blocks = s.history.map((round, i) => {
    const lines = narrateRound(s, round)
      .map((line) => `<li>${escapeHtml(line)}</li>`)
      .join("");
    return `<div class="round"><h4>round ${i + 1}</h4><ul>${lines}</ul></div>`;
  });
  const banner = finishedBanner(s);
  if (banner !== null) {
    blocks.push(`<div class="banner">${escapeHtml(banner)}</div>`);
  }
  return blocks.join("");
}

export function renderMoveChoices(s: SessionWire): string {
  if (s.phase !== "awaiting_human_move") return "";
  const buttons = s.options
    .map(
      (o, i) =>
        `<button class="move" data-index="${i}"><code>${escapeHtml(o)}</code></button>`,
    )
    .join("");
  return `<div class="choices">your move: ${buttons}</div>`;
}

export function renderBidForm(s: SessionWire | null): string {
  const enabled = bidControlsEnabled(s);
  const max = s === null ? 0 : (s.human_side === "L" ? s.left_budget : rightBudget(s));
  const markerToggle =
    s !== null && s.marker === s.human_side && enabled
      ? '<label><input type="checkbox" id="bid-marker"> include marker</label>'
      : "";
  const disabled = enabled ? "" : " disabled";
  return (
    `<input type="number" id="bid-amount" min="0" max="${max}" value="0"${disabled}>` +
    markerToggle +
    `<button id="bid-submit"${disabled}>bid</button>`
  );
}

export function renderOutcomeRow(
  game: string,
  records: OutcomeRecordWire[],
): string {
  const cells = records
    .map((r) => {
      const [withMarker, without] = splitWord(r.word);
      return (
        `<td data-word="${r.word}" data-tb="${r.tb}">` +
        `<span class="half">${withMarker}</span>` +
        `<span class="sep"> </span>` +
        `<span class="half">${without}</span>` +
        `</td>`
      );
    })
    .join("");
  return `<tr><th><code>${escapeHtml(game)}</code></th>${cells}</tr>`;
}

export function renderOutcomeHeader(records: OutcomeRecordWire[]): string {
  const cells = records
    .map((r) => {
      const budgets = budgetHeaders(r.tb).join(" ");
      return `<th>TB=${r.tb}<br><small>p̂: ${budgets} | p: ${budgets}</small></th>`;
    })
    .join("");
  return `<tr><th>game</th>${cells}</tr>`;
}

export function renderShortForms(records: OutcomeRecordWire[]): string {
  return records
    .map((r) => `TB=${r.tb}: (${r.short_form.a},${r.short_form.b})`)
    .join("  ");
}

// Layered digraph: rank = a+b, drawn top-down from (0,0).
export function renderLatticeSvg(lattice: LatticeWire): string {
  const ranks = new Map<number, number[][]>();
  for (const node of lattice.nodes) {
    const rank = node[0] + node[1];
    const bucket = ranks.get(rank) ?? [];
    bucket.push(node);
    ranks.set(rank, bucket);
  }
  const rowHeight = 70;
  const colWidth = 90;
  const maxPerRank = Math.max(...[...ranks.values()].map((b) => b.length));
  const width = Math.max(maxPerRank * colWidth + 40, 240);
  const height = (ranks.size - 1) * rowHeight + 80;
  const pos = new Map<string, [number, number]>();
  const sortedRanks = [...ranks.keys()].sort((x, y) => x - y);
  sortedRanks.forEach((rank, row) => {
    const bucket = ranks.get(rank)!;
    bucket.sort((u, v) => u[0] - v[0]);
    bucket.forEach((node, i) => {
      const x = width / 2 + (i - (bucket.length - 1) / 2) * colWidth;
      const y = 40 + row * rowHeight;
      pos.set(node.join(","), [x, y]);
    });
  });
  const edges = lattice.edges
    .map(([from, to]) => {
      const [x1, y1] = pos.get(from.join(","))!;
      const [x2, y2] = pos.get(to.join(","))!;
      return `<line x1="${x1}" y1="${y1 + 14}" x2="${x2}" y2="${y2 - 14}" stroke="#888"/>`;
    })
    .join("");
  const nodes = [...pos.entries()]
    .map(
      ([label, [x, y]]) =>
        `<g><circle cx="${x}" cy="${y}" r="16" fill="#eef" stroke="#336"/>` +
        `<text x="${x}" y="${y + 4}" text-anchor="middle" font-size="10">${label}</text></g>`,
    )
    .join("");
  return (
    `<svg viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">` +
    edges +
    nodes +
    `</svg>`
  );
}

export function renderGameTree(notation: string): string {
  // static collapsible view of the bracket structure
  let i = 0;

  function parseNode(): string {
    if (notation[i] !== "{") {
      let token = "";
      while (i < notation.length && !"{|},}".includes(notation[i])) {
        token += notation[i];
        i += 1;
      }
      return `<span class="leaf"><code>${escapeHtml(token.trim())}</code></span>`;
    }
    i += 1; // consume {
    const left: string[] = [];
    const right: string[] = [];
    let bucket = left;
    while (i < notation.length && notation[i] !== "}") {
      if (notation[i] === "|") {
        bucket = right;
        i += 1;
      } else if (notation[i] === ",") {
        i += 1;
      } else {
        bucket.push(parseNode());
      }
    }
    i += 1; // consume }
    return (
      `<details open><summary>node</summary>` +
      `<div class="opts">L: ${left.join(" ") || "&empty;"}</div>` +
      `<div class="opts">R: ${right.join(" ") || "&empty;"}</div>` +
      `</details>`
    );
  }

  return parseNode();
}
