"""Bid legality, bid resolution and the memoized perfect-play solver.

Each round both players bid simultaneously from their budgets; the marker
owner may include the marker.  The higher bid buys the move and is paid to
the opponent; ties go to the marker owner and hand the marker over, as does
winning with the marker included.  A player who must move but has no option
loses.  Backward induction over (form, budget split, marker owner) yields a
pure-strategy subgame perfect equilibrium winner at every coordinate.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .forms import GameForm, Player
from .outcomes import OutcomeTuple


@dataclass(frozen=True)
class BudgetState:
    """One solver coordinate: total budget, Left's share, marker owner.

    Right's share is derived, never stored.
    """

    tb: int
    left: int
    marker: Player

    def __post_init__(self) -> None:
        if self.tb < 0:
            raise ValueError("total budget must be nonnegative")
        if not 0 <= self.left <= self.tb:
            raise ValueError(
                f"Left budget {self.left} out of range 0..{self.tb}")

    @property
    def right(self) -> int:
        return self.tb - self.left

    def budget_of(self, who: Player) -> int:
        return self.left if who is Player.LEFT else self.right

    def mirrored(self) -> "BudgetState":
        """The same coordinate with the players' roles swapped."""
        return BudgetState(self.tb, self.right, self.marker.opponent)

    def describe(self) -> str:
        hat = "̂"
        p = str(self.left)
        return f"p{hat}={p}" if self.marker is Player.LEFT else f"p={p}"


@dataclass(frozen=True)
class Bid:
    amount: int
    marker: bool = False

    def describe(self) -> str:
        return f"{self.amount}̂" if self.marker else str(self.amount)


@dataclass(frozen=True)
class Resolution:
    """Outcome of one auction: who moves, and the state after money and
    marker transfer but before the move is made."""

    mover: Player
    state: BudgetState


class IllegalBid(ValueError):
    pass


def legal_bids(state: BudgetState, who: Player) -> list[Bid]:
    """All bids available to a player: every affordable amount, doubled with
    the marker included when the player owns it."""
    budget = state.budget_of(who)
    bids = [Bid(x) for x in range(budget + 1)]
    if state.marker is who:
        bids += [Bid(x, True) for x in range(budget + 1)]
    return bids


def _check_legal(state: BudgetState, bid: Bid, who: Player) -> None:
    if bid.amount < 0 or bid.amount > state.budget_of(who):
        raise IllegalBid(
            f"{who.value} bid {bid.amount} exceeds budget {state.budget_of(who)}")
    if bid.marker and state.marker is not who:
        raise IllegalBid(f"{who.value} does not hold the marker")


def _resolve(tb: int, left: int, marker_left: bool,
             la: int, lm: bool, ra: int, rm: bool) -> tuple[bool, int, bool]:
    """Core auction rule. Returns (mover_is_left, new_left, new_marker_left).

    Bids are assumed legal.  The marker transfers exactly when its owner wins
    the auction via a tie or with the marker included; a losing marked bid
    leaves it in place.
    """
    if marker_left:
        if lm:
            if la >= ra:
                return True, left - la, False
            return False, left + ra, True
        if la > ra:
            return True, left - la, True
        if la == ra:
            return True, left - la, False
        return False, left + ra, True
    if rm:
        if ra >= la:
            return False, left + ra, True
        return True, left - la, False
    if ra > la:
        return False, left + ra, False
    if ra == la:
        return False, left + ra, True
    return True, left - la, False


def resolve_bids(state: BudgetState, left_bid: Bid, right_bid: Bid) -> Resolution:
    """Resolve a pair of legal bids into the mover and the next state."""
    _check_legal(state, left_bid, Player.LEFT)
    _check_legal(state, right_bid, Player.RIGHT)
    mover_left, new_left, new_marker_left = _resolve(
        state.tb, state.left, state.marker is Player.LEFT,
        left_bid.amount, left_bid.marker, right_bid.amount, right_bid.marker)
    return Resolution(
        Player.LEFT if mover_left else Player.RIGHT,
        BudgetState(state.tb, new_left,
                    Player.LEFT if new_marker_left else Player.RIGHT))


class Solver:
    """Backward-induction solver for one fixed total budget.

    Memoized on (form id, Left budget, marker owner); caches for different
    total budgets are never mixed.  Memo inserts are idempotent, so racing
    writers are harmless.
    """

    def __init__(self, tb: int):
        if tb < 0:
            raise ValueError("total budget must be nonnegative")
        self.tb = tb
        self._memo: dict[tuple[int, int, bool], bool] = {}

    def left_wins(self, g: GameForm, left: int, marker_left: bool) -> bool:
        key = (g.uid, left, marker_left)
        got = self._memo.get(key)
        if got is not None:
            return got
        tb = self.tb
        right = tb - left
        if marker_left:
            left_bids = [(x, False) for x in range(left + 1)] + \
                        [(x, True) for x in range(left + 1)]
            right_bids = [(x, False) for x in range(right + 1)]
        else:
            left_bids = [(x, False) for x in range(left + 1)]
            right_bids = [(x, False) for x in range(right + 1)] + \
                         [(x, True) for x in range(right + 1)]
        result = False
        for la, lm in left_bids:
            # A winning bid must beat every reply.
            if all(self._cell_left_wins(g, left, marker_left, la, lm, ra, rm)
                   for ra, rm in right_bids):
                result = True
                break
        self._memo[key] = result
        return result

    def _cell_left_wins(self, g: GameForm, left: int, marker_left: bool,
                        la: int, lm: bool, ra: int, rm: bool) -> bool:
        mover_left, nleft, nmarker = _resolve(
            self.tb, left, marker_left, la, lm, ra, rm)
        if mover_left:
            # Mover with no option loses on the spot.
            return any(self.left_wins(o, nleft, nmarker) for o in g.left)
        opts = g.right
        if not opts:
            return True
        return all(self.left_wins(o, nleft, nmarker) for o in opts)


_solvers: dict[int, Solver] = {}
_solvers_lock = threading.Lock()


def solver_for(tb: int) -> Solver:
    got = _solvers.get(tb)
    if got is None:
        with _solvers_lock:
            got = _solvers.setdefault(tb, Solver(tb))
    return got


def solve(g: GameForm, state: BudgetState) -> Player:
    """Perfect-play winner at one coordinate."""
    s = solver_for(state.tb)
    return Player.LEFT if s.left_wins(g, state.left, state.marker is Player.LEFT) \
        else Player.RIGHT


def solve_outcome(g: GameForm, tb: int) -> OutcomeTuple:
    """Perfect-play winners at all 2(TB+1) coordinates."""
    s = solver_for(tb)
    winners = []
    for marker_left in (True, False):
        for p in range(tb, -1, -1):
            winners.append(Player.LEFT if s.left_wins(g, p, marker_left)
                           else Player.RIGHT)
    return OutcomeTuple(tb, tuple(winners))


@dataclass(frozen=True)
class BidMatrix:
    """Winners of the continued game for every bid pair, Left bids as rows."""

    state: BudgetState
    left_bids: tuple[Bid, ...]
    right_bids: tuple[Bid, ...]
    cells: tuple[tuple[Player, ...], ...]

    def left_security_rows(self) -> list[int]:
        return [i for i, row in enumerate(self.cells)
                if all(w is Player.LEFT for w in row)]

    def right_security_cols(self) -> list[int]:
        return [j for j in range(len(self.right_bids))
                if all(row[j] is Player.RIGHT for row in self.cells)]


def bid_matrix(g: GameForm, state: BudgetState) -> BidMatrix:
    """Evaluate every bid pair; each cell assumes an optimal move follows."""
    s = solver_for(state.tb)
    lbids = tuple(legal_bids(state, Player.LEFT))
    rbids = tuple(legal_bids(state, Player.RIGHT))
    marker_left = state.marker is Player.LEFT
    cells = tuple(
        tuple(
            Player.LEFT if s._cell_left_wins(
                g, state.left, marker_left,
                lb.amount, lb.marker, rb.amount, rb.marker)
            else Player.RIGHT
            for rb in rbids)
        for lb in lbids)
    return BidMatrix(state, lbids, rbids, cells)


def _ordered_bids(state: BudgetState, who: Player) -> list[Bid]:
    # Deterministic preference: smaller amount first, unmarked before marked.
    return sorted(legal_bids(state, who), key=lambda b: (b.amount, b.marker))


def best_bid(g: GameForm, state: BudgetState, who: Player) -> Bid:
    """A security bid when `who` wins the coordinate; the pass otherwise."""
    if solve(g, state) is not who:
        return Bid(0, False)
    s = solver_for(state.tb)
    marker_left = state.marker is Player.LEFT
    replies = legal_bids(state, who.opponent)
    for bid in _ordered_bids(state, who):
        if who is Player.LEFT:
            secure = all(
                s._cell_left_wins(g, state.left, marker_left,
                                  bid.amount, bid.marker, r.amount, r.marker)
                for r in replies)
        else:
            secure = not any(
                s._cell_left_wins(g, state.left, marker_left,
                                  r.amount, r.marker, bid.amount, bid.marker)
                for r in replies)
        if secure:
            return bid
    raise AssertionError("winner must hold a security bid")


def best_move(g: GameForm, state: BudgetState, mover: Player) -> int:
    """Index of the mover's winning option with the smallest index, or 0."""
    opts = g.options(mover)
    if not opts:
        raise ValueError("mover has no options")
    for i, o in enumerate(opts):
        if solve(o, state) is mover:
            return i
    return 0


def best_action(g: GameForm, state: BudgetState, who: Player) -> tuple[Bid, int | None]:
    """Deterministic bid for `who`, plus the move index if `who` would move
    when the opponent replies with their own best bid."""
    bid = best_bid(g, state, who)
    reply = best_bid(g, state, who.opponent)
    if who is Player.LEFT:
        res = resolve_bids(state, bid, reply)
    else:
        res = resolve_bids(state, reply, bid)
    if res.mover is who and g.options(who):
        return bid, best_move(g, res.state, who)
    return bid, None
