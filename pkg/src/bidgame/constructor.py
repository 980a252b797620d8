"""Build a game form realizing any feasible outcome, verified by the solver.

The builder works on one marker half at a time.  For a target threshold it
simulates two forced bidding lines, one from the smallest budget that must
win and one from the largest that must lose.  While the same player dominates
both lines, the chain grows a node that threatens an immediate move to 0
against the dominating player, forcing them to buy the move and transfer
money; the moment the dominating player differs between the lines the chain
ends in *, where the dominating player wins.  The assembled game is solved
and checked against the requested outcome before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .forms import ZERO, STAR, GameForm, Player, conjugate, make_form
from .engine import solve_outcome, solver_for
from .outcomes import (ShortForm, from_short_form, is_feasible_short_form,
                       to_short_form, word)


class InfeasibleShortForm(ValueError):
    pass


class StageCapExceeded(RuntimeError):
    """The forced-bid simulation failed to terminate; indicates a rules bug."""


class VerificationFailed(RuntimeError):
    def __init__(self, tb: int, expected_word: str, actual_word: str,
                 form: GameForm):
        super().__init__(
            f"construction for TB={tb} produced outcome {actual_word}, "
            f"expected {expected_word}")
        self.tb = tb
        self.expected_word = expected_word
        self.actual_word = actual_word
        self.form = form


def dominating_player(tb: int, left: int, marker: Player) -> Player:
    """Strictly larger budget dominates; the marker breaks an even split."""
    if 2 * left > tb:
        return Player.LEFT
    if 2 * left < tb:
        return Player.RIGHT
    return marker


@dataclass(frozen=True)
class BidSequencePair:
    """Two forced bidding lines advanced in lockstep.

    ``first``/``second`` hold the Left budgets per stage; ``markers`` the
    marker owner per stage (shared by both lines); ``dominators`` the shared
    dominating player at each stage before the flip.  ``flip_index`` is the
    stage at which the lines first disagree on who dominates.
    """

    tb: int
    marker_start: Player
    first: tuple[int, ...]
    second: tuple[int, ...]
    markers: tuple[Player, ...]
    dominators: tuple[Player, ...]
    flip_index: int


def _forced_step(tb: int, left: int, marker: Player, dom: Player) -> int:
    """Left budget after the dominating player buys one forced move.

    The non-dominating side threatens to end the game, so the dominating
    player must outbid them: strictly when the threatener holds the marker
    (their marked bid would win ties), weakly otherwise.
    """
    if dom is Player.LEFT:
        q = tb - left
        paid = q + 1 if marker is Player.RIGHT else q
        return left - paid
    paid = left + 1 if marker is Player.LEFT else left
    return left + paid


def forced_bid_sequence(tb: int, p0: int, p0_prime: int,
                        marker_start: Player) -> BidSequencePair:
    """Advance both lines until exactly one changes dominating player."""
    if p0 == p0_prime:
        raise ValueError("starting budgets must differ")
    for p in (p0, p0_prime):
        if not 0 <= p <= tb:
            raise ValueError(f"budget {p} out of range 0..{tb}")
    first = [p0]
    second = [p0_prime]
    marker = marker_start
    markers = [marker]
    dominators: list[Player] = []
    cap = 4 * (tb + 2)
    for _ in range(cap):
        d1 = dominating_player(tb, first[-1], marker)
        d2 = dominating_player(tb, second[-1], marker)
        if d1 is not d2:
            return BidSequencePair(tb, marker_start, tuple(first), tuple(second),
                                   tuple(markers), tuple(dominators),
                                   len(first) - 1)
        dominators.append(d1)
        first.append(_forced_step(tb, first[-1], marker, d1))
        second.append(_forced_step(tb, second[-1], marker, d1))
        # After a forced purchase the threatening side ends up with the
        # marker: a tie win hands it over, a strict overbid leaves it put.
        marker = d1.opponent
        markers.append(marker)
    raise StageCapExceeded(
        f"no flip within {cap} stages for TB={tb}, start ({p0}, {p0_prime})")


@dataclass(frozen=True)
class ThreatChain:
    """A chain of forms ending in *.

    Every intermediate node carries an option to 0 on its threatened side and
    exactly one continuation option on the other; nodes run top-down, so
    ``nodes[0]`` is the whole chain and ``nodes[-1]`` is the terminal *.
    """

    threat_sides: tuple[Player, ...]
    nodes: tuple[GameForm, ...]

    @property
    def root(self) -> GameForm:
        return self.nodes[0]

    @property
    def terminal(self) -> GameForm:
        return self.nodes[-1]


def threat_chain(threat_sides: Sequence[Player]) -> ThreatChain:
    """Assemble a threat chain ending in * from per-node threat placements."""
    nodes = [STAR]
    for side in reversed(threat_sides):
        if side is Player.LEFT:
            nodes.append(make_form([ZERO], [nodes[-1]]))
        else:
            nodes.append(make_form([nodes[-1]], [ZERO]))
    nodes.reverse()
    return ThreatChain(tuple(threat_sides), tuple(nodes))


def _chain_from_threats(threat_sides: Sequence[Player]) -> GameForm:
    return threat_chain(threat_sides).root


def build_threshold_chain(tb: int, threshold: int,
                          side: Player) -> GameForm | None:
    """Option-side chain for one marker half of a target outcome.

    side LEFT: the chain C satisfies, with Right holding the marker, that
    Left wins (C, p) exactly when p >= threshold.  side RIGHT is the mirror
    image: with Left holding the marker, Left wins (C, p) iff p >= threshold.
    Thresholds 0 and TB+1 are the constant halves: 0 is won by whoever does
    not hold the marker, so it covers both extremes, and None marks the half
    where the side's option set must stay empty.
    """
    if not 0 <= threshold <= tb + 1:
        raise ValueError(f"threshold {threshold} out of range 0..{tb + 1}")
    if side is Player.LEFT:
        if threshold == 0:
            return ZERO
        if threshold == tb + 1:
            return None
        seq = forced_bid_sequence(tb, threshold, threshold - 1, Player.RIGHT)
        threats = [d.opponent for d in seq.dominators]
        return _chain_from_threats(threats)
    if threshold == 0:
        return None
    if threshold == tb + 1:
        return ZERO
    mirror = build_threshold_chain(tb, tb + 1 - threshold, Player.LEFT)
    assert mirror is not None
    return conjugate(mirror)


def _assemble(left_half: GameForm | None, right_half: GameForm | None) -> GameForm:
    return make_form([left_half] if left_half is not None else [],
                     [right_half] if right_half is not None else [])


def _half_ok(tb: int, half: GameForm | None, threshold: int,
             side: Player) -> bool:
    """Check a half directly: the post-pass-round coordinate must flip at the
    threshold."""
    if half is None:
        return threshold == (tb + 1 if side is Player.LEFT else 0)
    solver = solver_for(tb)
    marker_left = side is Player.RIGHT
    for p in range(tb + 1):
        if solver.left_wins(half, p, marker_left) != (p >= threshold):
            return False
    return True


def _fallback_half(tb: int, threshold: int, side: Player,
                   max_len: int) -> GameForm | None:
    """Bounded search over threat-chain variants for one half."""
    for cand in (ZERO, STAR):
        if _half_ok(tb, cand, threshold, side):
            return cand
    for length in range(1, max_len + 1):
        for sides in product((Player.LEFT, Player.RIGHT), repeat=length):
            cand = _chain_from_threats(list(sides))
            if _half_ok(tb, cand, threshold, side):
                return cand
    return None


def construct(tb: int, sf: ShortForm) -> GameForm:
    """A game form whose solved outcome has the given short form.

    The solver verifies every construction before it is returned; if the
    primary chain misses, a bounded search over threat placements runs before
    giving up.
    """
    sf = ShortForm(*sf)
    if not is_feasible_short_form(tb, sf):
        raise InfeasibleShortForm(
            f"short form {tuple(sf)} is not feasible for TB={tb}")
    g = _assemble(build_threshold_chain(tb, sf.a, Player.LEFT),
                  build_threshold_chain(tb, sf.b, Player.RIGHT))
    outcome = solve_outcome(g, tb)
    if to_short_form(outcome) == sf:
        return g

    max_len = 2 * (tb + 2)
    left_half = build_threshold_chain(tb, sf.a, Player.LEFT)
    if not _half_ok(tb, left_half, sf.a, Player.LEFT):
        left_half = _fallback_half(tb, sf.a, Player.LEFT, max_len) \
            if sf.a <= tb else None
    right_half = build_threshold_chain(tb, sf.b, Player.RIGHT)
    if not _half_ok(tb, right_half, sf.b, Player.RIGHT):
        right_half = _fallback_half(tb, sf.b, Player.RIGHT, max_len) \
            if sf.b >= 1 else None
    retry = _assemble(left_half, right_half)
    retry_outcome = solve_outcome(retry, tb)
    if to_short_form(retry_outcome) == sf:
        return retry
    raise VerificationFailed(tb, word(from_short_form(tb, sf)),
                             word(outcome), g)
