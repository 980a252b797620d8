"""Reference solver: plain exhaustive recursion, no caching, no pruning.

This module restates the auction rules from scratch instead of importing the
engine's resolution helpers, so that the two implementations can be checked
against each other without sharing a failure mode.
"""

from __future__ import annotations

from .forms import GameForm, Player
from .engine import BudgetState


def oracle_solve(g: GameForm, state: BudgetState) -> Player:
    """Perfect-play winner at one coordinate, recomputed from first principles."""
    wins = _left_wins(g, state.tb, state.left, state.marker is Player.LEFT)
    return Player.LEFT if wins else Player.RIGHT


def _left_wins(g: GameForm, tb: int, left: int, marker_left: bool) -> bool:
    right = tb - left
    if marker_left:
        left_bids = [(x, m) for m in (False, True) for x in range(left + 1)]
        right_bids = [(x, False) for x in range(right + 1)]
    else:
        left_bids = [(x, False) for x in range(left + 1)]
        right_bids = [(x, m) for m in (False, True) for x in range(right + 1)]
    for la, lm in left_bids:
        if all(_cell_left_wins(g, tb, left, marker_left, la, lm, ra, rm)
               for ra, rm in right_bids):
            return True
    return False


def _cell_left_wins(g: GameForm, tb: int, left: int, marker_left: bool,
                    la: int, lm: bool, ra: int, rm: bool) -> bool:
    # Restated auction rules, marker owner first.  A winning marked bid or a
    # won tie hands the marker over; losing the auction never does.
    if marker_left:
        if lm and la >= ra:
            mover_left, nleft, nmarker = True, left - la, False
        elif not lm and la > ra:
            mover_left, nleft, nmarker = True, left - la, True
        elif not lm and la == ra:
            mover_left, nleft, nmarker = True, left - la, False
        else:
            mover_left, nleft, nmarker = False, left + ra, True
    else:
        if rm and ra >= la:
            mover_left, nleft, nmarker = False, left + ra, True
        elif not rm and ra > la:
            mover_left, nleft, nmarker = False, left + ra, False
        elif not rm and ra == la:
            mover_left, nleft, nmarker = False, left + ra, True
        else:
            mover_left, nleft, nmarker = True, left - la, False
    if mover_left:
        return any(_left_wins(o, tb, nleft, nmarker) for o in g.left)
    if not g.right:
        return True
    return all(_left_wins(o, tb, nleft, nmarker) for o in g.right)
