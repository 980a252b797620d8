"""HTTP/JSON facade over the engine: stateless solve/construct/lattice plus
stateful play sessions against the perfect-play engine.

The engine's bid in a round is derived from the session state alone, before
the human bid is read, so simultaneous bidding needs no trust. Sessions live
in memory with TTL eviction; per-session requests are serialized.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .constructor import InfeasibleShortForm, construct
from .engine import (Bid, BudgetState, IllegalBid, best_bid, best_move,
                     resolve_bids, solve, solve_outcome)
from .forms import GameForm, ParseError, Player, parse, render
from .lattice import build_lattice, lattice_record
from .outcomes import ShortForm, outcome_record, to_short_form, word

SESSION_TTL_SECONDS = 3600.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_request(code: str, message: str) -> ApiError:
    return ApiError(400, code, message)


def _player(token: str) -> Player:
    if token == "L":
        return Player.LEFT
    if token == "R":
        return Player.RIGHT
    raise _bad_request("invalid_player", f"player must be L or R, got {token!r}")


# ---------------------------------------------------------------- wire models

class SolveRequest(BaseModel):
    game: str
    tb: int = Field(ge=0)


class ShortFormModel(BaseModel):
    a: int
    b: int


class OutcomeRecordModel(BaseModel):
    tb: int
    word: str
    short_form: ShortFormModel
    feasible: bool


class ConstructRequest(BaseModel):
    tb: int = Field(ge=0)
    a: int
    b: int


class ConstructResponse(BaseModel):
    game: str
    word: str


class LatticeRecordModel(BaseModel):
    tb: int
    nodes: list[list[int]]
    edges: list[list[list[int]]]


class SessionCreateRequest(BaseModel):
    game: str
    tb: int = Field(ge=0)
    left_budget: int
    marker: str
    human_side: str


class BidRequest(BaseModel):
    amount: int
    include_marker: bool = False


class MoveRequest(BaseModel):
    index: int


class BidModel(BaseModel):
    amount: int
    marker: bool


class RoundModel(BaseModel):
    position: str
    left_budget_before: int
    marker_before: str
    left_bid: BidModel
    right_bid: BidModel
    mover: str
    left_budget_after: int
    marker_after: str
    move_index: Optional[int] = None
    move_to: Optional[str] = None


class SessionModel(BaseModel):
    id: str
    game: str
    tb: int
    left_budget: int
    marker: str
    human_side: str
    phase: str
    winner: Optional[str] = None
    options: list[str] = []
    history: list[RoundModel] = []


# ------------------------------------------------------------------- sessions

class Phase(Enum):
    AWAITING_BID = "awaiting_bid"
    AWAITING_HUMAN_MOVE = "awaiting_human_move"
    FINISHED = "finished"


@dataclass
class Round:
    position: GameForm
    state_before: BudgetState
    left_bid: Bid
    right_bid: Bid
    mover: Player
    state_after: BudgetState
    move_index: Optional[int] = None
    move_to: Optional[GameForm] = None


@dataclass
class PlaySession:
    id: str
    form: GameForm
    state: BudgetState
    human_side: Player
    phase: Phase = Phase.AWAITING_BID
    winner: Optional[Player] = None
    history: list[Round] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    @property
    def engine_side(self) -> Player:
        return self.human_side.opponent


class SessionStore:
    def __init__(self, ttl: float = SESSION_TTL_SECONDS):
        self._ttl = ttl
        self._sessions: dict[str, PlaySession] = {}
        self._lock = threading.Lock()

    def _evict(self, now: float) -> None:
        stale = [sid for sid, s in self._sessions.items()
                 if now - s.last_access > self._ttl]
        for sid in stale:
            del self._sessions[sid]

    def add(self, session: PlaySession) -> None:
        with self._lock:
            self._evict(time.monotonic())
            self._sessions[session.id] = session

    def get(self, session_id: str) -> PlaySession:
        with self._lock:
            now = time.monotonic()
            self._evict(now)
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown_session",
                               f"no session {session_id!r}")
            session.last_access = now
            return session


def _mover_options(session: PlaySession, mover: Player) -> tuple[GameForm, ...]:
    return session.form.options(mover)


def _finish(session: PlaySession, loser: Player) -> None:
    session.phase = Phase.FINISHED
    session.winner = loser.opponent


def _engine_move(session: PlaySession, round_: Round) -> None:
    idx = best_move(session.form, session.state, session.engine_side)
    chosen = session.form.options(session.engine_side)[idx]
    round_.move_index = idx
    round_.move_to = chosen
    session.form = chosen
    session.phase = Phase.AWAITING_BID


def apply_bid_round(session: PlaySession, human_bid: Bid) -> Round:
    """Resolve one auction round; the engine bid depends on state only."""
    if session.phase is not Phase.AWAITING_BID:
        raise ApiError(409, "wrong_phase",
                       f"cannot bid while {session.phase.value}")
    engine_bid = best_bid(session.form, session.state, session.engine_side)
    if session.human_side is Player.LEFT:
        left_bid, right_bid = human_bid, engine_bid
    else:
        left_bid, right_bid = engine_bid, human_bid
    try:
        res = resolve_bids(session.state, left_bid, right_bid)
    except IllegalBid as exc:
        raise _bad_request("illegal_bid", str(exc)) from exc
    round_ = Round(position=session.form, state_before=session.state,
                   left_bid=left_bid, right_bid=right_bid,
                   mover=res.mover, state_after=res.state)
    session.history.append(round_)
    session.state = res.state
    if not _mover_options(session, res.mover):
        _finish(session, loser=res.mover)
    elif res.mover is session.engine_side:
        _engine_move(session, round_)
    else:
        session.phase = Phase.AWAITING_HUMAN_MOVE
    return round_


def apply_human_move(session: PlaySession, index: int) -> None:
    if session.phase is not Phase.AWAITING_HUMAN_MOVE:
        raise ApiError(409, "wrong_phase",
                       f"cannot move while {session.phase.value}")
    opts = session.form.options(session.human_side)
    if not 0 <= index < len(opts):
        raise _bad_request("bad_index",
                           f"move index {index} out of range 0..{len(opts) - 1}")
    round_ = session.history[-1]
    round_.move_index = index
    round_.move_to = opts[index]
    session.form = opts[index]
    session.phase = Phase.AWAITING_BID


def session_snapshot(session: PlaySession) -> SessionModel:
    options: list[str] = []
    if session.phase is Phase.AWAITING_HUMAN_MOVE:
        options = [render(o) for o in session.form.options(session.human_side)]
    history = [
        RoundModel(
            position=render(r.position),
            left_budget_before=r.state_before.left,
            marker_before=r.state_before.marker.value,
            left_bid=BidModel(amount=r.left_bid.amount, marker=r.left_bid.marker),
            right_bid=BidModel(amount=r.right_bid.amount, marker=r.right_bid.marker),
            mover=r.mover.value,
            left_budget_after=r.state_after.left,
            marker_after=r.state_after.marker.value,
            move_index=r.move_index,
            move_to=render(r.move_to) if r.move_to is not None else None,
        )
        for r in session.history
    ]
    return SessionModel(
        id=session.id,
        game=render(session.form),
        tb=session.state.tb,
        left_budget=session.state.left,
        marker=session.state.marker.value,
        human_side=session.human_side.value,
        phase=session.phase.value,
        winner=session.winner.value if session.winner else None,
        options=options,
        history=history,
    )


# ------------------------------------------------------------------------ app

def create_app() -> FastAPI:
    app = FastAPI(title="bidgame", version="0.1.0")
    store = SessionStore()
    app.state.sessions = store

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"error": exc.code, "message": exc.message})

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content={"error": "invalid_request",
                                     "message": str(exc.errors())})

    def _parse_game(text: str) -> GameForm:
        try:
            return parse(text)
        except ParseError as exc:
            raise _bad_request("parse_error", str(exc)) from exc

    @app.post("/api/solve", response_model=OutcomeRecordModel)
    def api_solve(req: SolveRequest):
        outcome = solve_outcome(_parse_game(req.game), req.tb)
        return outcome_record(outcome)

    @app.post("/api/construct", response_model=ConstructResponse)
    def api_construct(req: ConstructRequest):
        try:
            g = construct(req.tb, ShortForm(req.a, req.b))
        except InfeasibleShortForm as exc:
            raise _bad_request("infeasible", str(exc)) from exc
        return ConstructResponse(game=render(g),
                                 word=word(solve_outcome(g, req.tb)))

    @app.get("/api/lattice/{tb}", response_model=LatticeRecordModel)
    def api_lattice(tb: int):
        if tb < 0:
            raise _bad_request("invalid_request", "tb must be nonnegative")
        return lattice_record(build_lattice(tb))

    @app.post("/api/session", response_model=SessionModel)
    def api_create_session(req: SessionCreateRequest):
        form = _parse_game(req.game)
        try:
            state = BudgetState(req.tb, req.left_budget, _player(req.marker))
        except ValueError as exc:
            raise _bad_request("invalid_budget", str(exc)) from exc
        session = PlaySession(id=uuid.uuid4().hex, form=form, state=state,
                              human_side=_player(req.human_side))
        store.add(session)
        return session_snapshot(session)

    @app.post("/api/session/{session_id}/bid", response_model=SessionModel)
    def api_bid(session_id: str, req: BidRequest):
        session = store.get(session_id)
        with session.lock:
            apply_bid_round(session, Bid(req.amount, req.include_marker))
            return session_snapshot(session)

    @app.post("/api/session/{session_id}/move", response_model=SessionModel)
    def api_move(session_id: str, req: MoveRequest):
        session = store.get(session_id)
        with session.lock:
            apply_human_move(session, req.index)
            return session_snapshot(session)

    @app.get("/api/session/{session_id}", response_model=SessionModel)
    def api_get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session_snapshot(session)

    return app


app = create_app()
