// DOM bootstrap: the single file that touches document. Session mutations
// are queued so at most one request is in flight at a time.

import { ApiClient, ApiError } from "./api.js";
import { SessionWire } from "./model.js";
import {
  bidIsLegal,
  initialViewState,
  splitWord,
  ViewState,
} from "./state.js";
import {
  renderBidForm,
  renderHistory,
  renderLatticeSvg,
  renderMoveChoices,
  renderOutcomeHeader,
  renderOutcomeRow,
  renderPlayerPanels,
  renderShortForms,
} from "./render.js";

const api = new ApiClient("");
const state: ViewState = initialViewState();

let queue: Promise<unknown> = Promise.resolve();

function enqueue(task: () => Promise<void>): void {
  queue = queue.then(task).catch((err) => showError(err));
}

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node;
}

function showError(err: unknown): void {
  const message =
    err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
  el("error").textContent = message;
}

function clearError(): void {
  el("error").textContent = "";
}

function redrawSession(): void {
  const s = state.session;
  if (s === null) return;
  el("panels").innerHTML = renderPlayerPanels(s);
  el("history").innerHTML = renderHistory(s);
  el("choices").innerHTML = renderMoveChoices(s);
  el("bid-form").innerHTML = renderBidForm(s);
  wireBidForm();
  for (const button of el("choices").querySelectorAll("button.move")) {
    button.addEventListener("click", () => {
      const index = Number((button as HTMLElement).dataset.index);
      mutateSession((sess) => api.submitMove(sess.id, index));
    });
  }
}

function mutateSession(op: (s: SessionWire) => Promise<SessionWire>): void {
  enqueue(async () => {
    if (state.session === null) return;
    clearError();
    state.session = await op(state.session);
    redrawSession();
  });
}

function wireBidForm(): void {
  const submit = document.getElementById("bid-submit");
  if (submit === null) return;
  submit.addEventListener("click", () => {
    const s = state.session;
    if (s === null) return;
    const amount = Number(
      (document.getElementById("bid-amount") as HTMLInputElement).value,
    );
    const markerBox = document.getElementById(
      "bid-marker",
    ) as HTMLInputElement | null;
    const marker = markerBox !== null && markerBox.checked;
    if (!bidIsLegal(s, amount, marker)) {
      showError(new Error(`bid must be an integer between 0 and your budget`));
      return;
    }
    mutateSession((sess) => api.submitBid(sess.id, amount, marker));
  });
}

function startSession(): void {
  enqueue(async () => {
    clearError();
    const game = (el("new-game") as HTMLInputElement).value.trim();
    if (game === "") {
      showError(new Error("enter a game first"));
      return;
    }
    const tb = Number((el("new-tb") as HTMLInputElement).value);
    const left = Number((el("new-left") as HTMLInputElement).value);
    const marker = (el("new-marker") as HTMLSelectElement).value as "L" | "R";
    const human = (el("new-human") as HTMLSelectElement).value as "L" | "R";
    state.session = await api.createSession(game, tb, left, marker, human);
    redrawSession();
  });
}

function runExplorer(): void {
  enqueue(async () => {
    clearError();
    const game = (el("explore-game") as HTMLInputElement).value.trim();
    if (game === "") {
      showError(new Error("enter a game first"));
      return;
    }
    const from = Number((el("explore-from") as HTMLInputElement).value);
    const to = Number((el("explore-to") as HTMLInputElement).value);
    const records = [];
    for (let tb = from; tb <= to; tb++) {
      records.push(await api.solve(game, tb));
    }
    el("explorer-table").innerHTML =
      `<table>${renderOutcomeHeader(records)}${renderOutcomeRow(game, records)}</table>` +
      `<p>${renderShortForms(records)}</p>`;
  });
}

function drawLattice(): void {
  enqueue(async () => {
    clearError();
    const tb = Number((el("lattice-tb") as HTMLInputElement).value);
    const lattice = await api.lattice(tb);
    el("lattice").innerHTML = renderLatticeSvg(lattice);
  });
}

export function boot(): void {
  el("new-start").addEventListener("click", startSession);
  el("explore-run").addEventListener("click", runExplorer);
  el("lattice-run").addEventListener("click", drawLattice);
  el("bid-form").innerHTML = renderBidForm(null);
}

if (typeof document !== "undefined" && document.getElementById("new-start")) {
  boot();
}

export { api, state, splitWord };
