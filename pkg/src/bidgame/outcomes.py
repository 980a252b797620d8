"""Perfect-play outcome tuples, word notation, feasibility and short forms.

For a total budget TB an outcome is the 2(TB+1)-tuple of winners over every
coordinate (Left budget, marker owner), ordered marker-with-Left first, Left
budget descending in each half.  Words spell the tuple over {L, R}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .forms import Player


class ShortForm(NamedTuple):
    """Thresholds (a, b): the smallest Left budget with which Left wins while
    holding / not holding the marker; TB+1 when she never does."""

    a: int
    b: int


@dataclass(frozen=True)
class OutcomeTuple:
    tb: int
    winners: tuple[Player, ...]

    def __post_init__(self) -> None:
        if self.tb < 0:
            raise ValueError("total budget must be nonnegative")
        if len(self.winners) != 2 * (self.tb + 1):
            raise ValueError(
                f"expected {2 * (self.tb + 1)} winners, got {len(self.winners)}")

    def winner_at(self, left_budget: int, marker: Player) -> Player:
        """Winner at one coordinate."""
        if not 0 <= left_budget <= self.tb:
            raise ValueError("budget out of range")
        offset = 0 if marker is Player.LEFT else self.tb + 1
        return self.winners[offset + (self.tb - left_budget)]

    def half(self, marker: Player) -> tuple[Player, ...]:
        """One marker half, Left budget descending."""
        if marker is Player.LEFT:
            return self.winners[:self.tb + 1]
        return self.winners[self.tb + 1:]


@dataclass(frozen=True)
class FeasibilityReport:
    monotone_with_marker: bool
    monotone_without_marker: bool
    marker_worth: bool

    @property
    def feasible(self) -> bool:
        return (self.monotone_with_marker and self.monotone_without_marker
                and self.marker_worth)


class NonMonotoneOutcome(ValueError):
    """Raised when thresholds are requested for a non-monotone outcome."""


def word(o: OutcomeTuple) -> str:
    return "".join(w.value for w in o.winners)


def parse_word(tb: int, text: str) -> OutcomeTuple:
    if len(text) != 2 * (tb + 1):
        raise ValueError(
            f"word for TB={tb} must have length {2 * (tb + 1)}, got {len(text)}")
    winners = []
    for ch in text:
        if ch == "L":
            winners.append(Player.LEFT)
        elif ch == "R":
            winners.append(Player.RIGHT)
        else:
            raise ValueError(f"bad letter {ch!r}; alphabet is L/R")
    return OutcomeTuple(tb, tuple(winners))


def _half_monotone(half: tuple[Player, ...]) -> bool:
    # Budget descends along the half, so winners must read L...LR...R.
    for prev, cur in zip(half, half[1:]):
        if prev is Player.RIGHT and cur is Player.LEFT:
            return False
    return True


def feasibility(o: OutcomeTuple) -> FeasibilityReport:
    """Check budget monotonicity in both halves and the one-dollar marker bound."""
    with_marker = _half_monotone(o.half(Player.LEFT))
    without = _half_monotone(o.half(Player.RIGHT))
    worth = all(
        not (o.winner_at(p, Player.LEFT) is Player.LEFT
             and o.winner_at(p + 1, Player.RIGHT) is Player.RIGHT)
        for p in range(o.tb))
    return FeasibilityReport(with_marker, without, worth)


def _threshold(tb: int, half: tuple[Player, ...]) -> int:
    # half is indexed by descending budget: index i holds budget tb - i.
    wins = [tb - i for i, w in enumerate(half) if w is Player.LEFT]
    return min(wins) if wins else tb + 1


def to_short_form(o: OutcomeTuple) -> ShortForm:
    """Winning-budget thresholds of a monotone outcome."""
    rep = feasibility(o)
    if not (rep.monotone_with_marker and rep.monotone_without_marker):
        raise NonMonotoneOutcome(f"outcome {word(o)} is not monotone")
    return ShortForm(_threshold(o.tb, o.half(Player.LEFT)),
                     _threshold(o.tb, o.half(Player.RIGHT)))


def from_short_form(tb: int, sf: ShortForm) -> OutcomeTuple:
    """Monotone outcome with the given thresholds."""
    a, b = sf
    for t in (a, b):
        if not 0 <= t <= tb + 1:
            raise ValueError(f"threshold {t} out of range 0..{tb + 1}")
    half_a = (Player.LEFT,) * (tb + 1 - a) + (Player.RIGHT,) * a
    half_b = (Player.LEFT,) * (tb + 1 - b) + (Player.RIGHT,) * b
    return OutcomeTuple(tb, half_a + half_b)


def conjugate_outcome(o: OutcomeTuple) -> OutcomeTuple:
    """Swap the players' roles: word reversed with L and R exchanged."""
    return OutcomeTuple(o.tb, tuple(w.opponent for w in reversed(o.winners)))


def conjugate_short_form(tb: int, sf: ShortForm) -> ShortForm:
    return ShortForm(tb + 1 - sf.b, tb + 1 - sf.a)


def is_feasible_short_form(tb: int, sf: ShortForm) -> bool:
    a, b = sf
    return 0 <= a <= tb + 1 and 0 <= b <= tb + 1 and b <= a + 1


def enumerate_feasible(tb: int) -> list[ShortForm]:
    """All feasible short forms, lexicographically ordered."""
    return [ShortForm(a, b)
            for a in range(tb + 2)
            for b in range(min(a + 1, tb + 1) + 1)]


def count_feasible(tb: int) -> int:
    return len(enumerate_feasible(tb))


def triangular(n: int) -> int:
    return n * (n + 1) // 2


def outcome_record(o: OutcomeTuple) -> dict:
    """Serialized outcome record shared by the CLI and the service."""
    sf = to_short_form(o)
    return {
        "tb": o.tb,
        "word": word(o),
        "short_form": {"a": sf.a, "b": sf.b},
        "feasible": feasibility(o).feasible,
    }
