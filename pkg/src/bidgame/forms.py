"""Literal game forms: construction, notation, classification.

A form is a pair of option collections, one per player, ending in the empty
form ``0 = {|}``.  Forms are interned: two forms with the same option sets on
both sides are the same Python object, so identity checks are O(1) and solver
memo keys are stable.  Interned forms are immutable.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence


class Player(Enum):
    """The two players. Left is conventionally female, Right male."""

    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    def __str__(self) -> str:
        return self.value


class AlternatingOutcome(Enum):
    """Outcome classes of classical alternating normal play."""

    L = "L"  # Left wins regardless of who starts
    N = "N"  # the next (first) player wins
    P = "P"  # the previous (second) player wins
    R = "R"  # Right wins regardless of who starts


def alternating_leq(x: AlternatingOutcome, y: AlternatingOutcome) -> bool:
    """Partial order on the outcome diamond: L above N and P, R below, N and P
    incomparable."""
    return x is y or x is AlternatingOutcome.R or y is AlternatingOutcome.L


def alternating_conjugate(o: AlternatingOutcome) -> AlternatingOutcome:
    """Image of an outcome class under swapping the players' roles."""
    if o is AlternatingOutcome.L:
        return AlternatingOutcome.R
    if o is AlternatingOutcome.R:
        return AlternatingOutcome.L
    return o


class GameForm:
    """An interned literal form.

    Do not instantiate directly; use :func:`make_form`, :func:`parse` or the
    named-form constants.  Structural flags that are cheap to maintain
    bottom-up (birthday, impartiality, dicot, symmetric ending) are computed
    once at interning time.
    """

    __slots__ = ("uid", "left", "right", "birthday",
                 "is_impartial", "is_dicot", "is_symmetric_ending")

    uid: int
    left: tuple["GameForm", ...]
    right: tuple["GameForm", ...]
    birthday: int
    is_impartial: bool
    is_dicot: bool
    is_symmetric_ending: bool

    def __repr__(self) -> str:
        return f"GameForm({render(self)})"

    def options(self, who: Player) -> tuple["GameForm", ...]:
        return self.left if who is Player.LEFT else self.right

    @property
    def is_terminal_for_both(self) -> bool:
        return not self.left and not self.right


_intern_lock = threading.Lock()
_intern_table: dict[tuple[tuple[int, ...], tuple[int, ...]], GameForm] = {}
_next_uid = 0


def _dedupe(options: Sequence[GameForm]) -> tuple[GameForm, ...]:
    seen: set[int] = set()
    out = []
    for g in options:
        if g.uid not in seen:
            seen.add(g.uid)
            out.append(g)
    return tuple(out)


def make_form(left: Sequence[GameForm], right: Sequence[GameForm]) -> GameForm:
    """Intern the form with the given option collections.

    Option order is preserved (first occurrence wins) for stable rendering,
    but identity depends only on the option sets.
    """
    left_t = _dedupe(left)
    right_t = _dedupe(right)
    key = (tuple(sorted(g.uid for g in left_t)),
           tuple(sorted(g.uid for g in right_t)))
    got = _intern_table.get(key)
    if got is not None:
        return got
    with _intern_lock:
        got = _intern_table.get(key)
        if got is not None:
            return got
        global _next_uid
        form = object.__new__(GameForm)
        form.uid = _next_uid
        _next_uid += 1
        form.left = left_t
        form.right = right_t
        children = left_t + right_t
        form.birthday = 1 + max(c.birthday for c in children) if children else 0
        form.is_impartial = key[0] == key[1] and all(c.is_impartial for c in left_t)
        form.is_dicot = (not children) or (
            bool(left_t) and bool(right_t) and all(c.is_dicot for c in children))
        zero_left = any(c.birthday == 0 for c in left_t)
        zero_right = any(c.birthday == 0 for c in right_t)
        form.is_symmetric_ending = (
            zero_left == zero_right
            and bool(left_t) == bool(right_t)
            and all(c.is_symmetric_ending for c in children))
        _intern_table[key] = form
        return form


ZERO = make_form([], [])
STAR = make_form([ZERO], [ZERO])
ONE = make_form([ZERO], [])
NEG_ONE = make_form([], [ZERO])
HALF = make_form([ZERO], [ONE])
UP = make_form([ZERO], [STAR])
DOWN = make_form([STAR], [ZERO])
STAR_PAIR = make_form([STAR], [STAR])
UP_SYM = make_form([STAR_PAIR], [STAR])
PLUS_MINUS_ONE = make_form([ONE], [NEG_ONE])

#: Built-in named forms accepted by the notation grammar.
NAMED_FORMS: dict[str, GameForm] = {
    "0": ZERO,
    "*": STAR,
    "*2": STAR_PAIR,
    "1": ONE,
    "-1": NEG_ONE,
    "1/2": HALF,
    "^": UP,
    "v": DOWN,
    "^sym": UP_SYM,
    "+-1": PLUS_MINUS_ONE,
}

# Rendering prefers the shortest token; ties broken alphabetically.
_NAME_BY_UID: dict[int, str] = {}
for _name in sorted(NAMED_FORMS, key=lambda n: (len(n), n)):
    _NAME_BY_UID.setdefault(NAMED_FORMS[_name].uid, _name)


class ParseError(ValueError):
    """Notation syntax error, annotated with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_NAMED_TOKENS = sorted(NAMED_FORMS, key=len, reverse=True)
_PUNCT = "{|},"


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            tokens.append((c, i))
            i += 1
            continue
        for name in _NAMED_TOKENS:
            if text.startswith(name, i):
                tokens.append((name, i))
                i += len(name)
                break
        else:
            raise ParseError(f"unknown token {text[i:i + 4]!r}", i)
    return tokens


def parse(text: str) -> GameForm:
    """Parse game notation into an interned form.

    Grammar: ``game := named | "{" opts "|" opts "}"`` with comma-separated
    option lists; whitespace between tokens is ignored.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek() -> Optional[str]:
        return tokens[pos][0] if pos < len(tokens) else None

    def where() -> int:
        return tokens[pos][1] if pos < len(tokens) else len(text)

    def expect(tok: str) -> None:
        nonlocal pos
        if peek() != tok:
            raise ParseError(f"expected {tok!r}", where())
        pos += 1

    def game() -> GameForm:
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of input", where())
        if tok in NAMED_FORMS:
            pos += 1
            return NAMED_FORMS[tok]
        if tok == "{":
            pos += 1
            left = opts(closers=("|",))
            expect("|")
            right = opts(closers=("}",))
            expect("}")
            return make_form(left, right)
        raise ParseError(f"unexpected token {tok!r}", where())

    def opts(closers: tuple[str, ...]) -> list[GameForm]:
        out: list[GameForm] = []
        if peek() in closers:
            return out
        out.append(game())
        while peek() == ",":
            pos_advance()
            out.append(game())
        return out

    def pos_advance() -> None:
        nonlocal pos
        pos += 1

    g = game()
    if pos != len(tokens):
        raise ParseError("trailing input", where())
    return g


def render(g: GameForm) -> str:
    """Render a form; named forms render as their token."""
    name = _NAME_BY_UID.get(g.uid)
    if name is not None:
        return name
    left = ",".join(render(o) for o in g.left)
    right = ",".join(render(o) for o in g.right)
    return "{" + left + "|" + right + "}"


_conjugate_cache: dict[int, GameForm] = {ZERO.uid: ZERO}


def conjugate(g: GameForm) -> GameForm:
    """Swap the players' roles: left and right options exchanged recursively."""
    got = _conjugate_cache.get(g.uid)
    if got is not None:
        return got
    c = make_form([conjugate(o) for o in g.right],
                  [conjugate(o) for o in g.left])
    _conjugate_cache[g.uid] = c
    _conjugate_cache.setdefault(c.uid, g)
    return c


def birthday(g: GameForm) -> int:
    """Height of the literal game tree (0 for the empty form)."""
    return g.birthday


@dataclass(frozen=True)
class Classification:
    impartial: bool
    dicot: bool
    symmetric_ending: bool


def classify(g: GameForm) -> Classification:
    """Structural flags, each evaluated over all followers.

    impartial: both players always have identical option sets.
    dicot: away from the empty form, both players always have a move.
    symmetric_ending: a player has a move to 0 exactly when the other does,
    and a side is empty exactly when both are.
    """
    return Classification(g.is_impartial, g.is_dicot, g.is_symmetric_ending)


def followers(g: GameForm) -> Iterator[GameForm]:
    """All followers of g, including g itself, each once."""
    seen = {g.uid}
    stack = [g]
    while stack:
        h = stack.pop()
        yield h
        for o in h.left + h.right:
            if o.uid not in seen:
                seen.add(o.uid)
                stack.append(o)


_alt_cache: dict[tuple[int, bool], bool] = {}


def _first_player_wins(g: GameForm, left_to_move: bool) -> bool:
    key = (g.uid, left_to_move)
    got = _alt_cache.get(key)
    if got is not None:
        return got
    opts = g.left if left_to_move else g.right
    # Normal play: no move means the player to move loses.
    result = any(not _first_player_wins(o, not left_to_move) for o in opts)
    _alt_cache[key] = result
    return result


def alternating_outcome(g: GameForm) -> AlternatingOutcome:
    """Classical alternating-play outcome by backward induction."""
    lw = _first_player_wins(g, True)
    rw = _first_player_wins(g, False)
    if lw and rw:
        return AlternatingOutcome.N
    if lw:
        return AlternatingOutcome.L
    if rw:
        return AlternatingOutcome.R
    return AlternatingOutcome.P


def random_game(max_birthday: int, max_options: int,
                empty_side_probability: float, seed: int) -> GameForm:
    """Deterministic random form with birthday at most max_birthday."""
    if max_options < 1:
        raise ValueError("max_options must be at least 1")
    rng = random.Random(seed)
    return _random_form(rng, max_birthday, max_options, empty_side_probability)


def _random_form(rng: random.Random, depth: int, max_options: int,
                 p_empty: float) -> GameForm:
    if depth <= 0:
        return ZERO

    def side() -> list[GameForm]:
        if rng.random() < p_empty:
            return []
        return [_random_form(rng, depth - 1, max_options, p_empty)
                for _ in range(rng.randint(1, max_options))]

    return make_form(side(), side())


def random_corpus(count: int, max_birthday: int, max_options: int,
                  empty_side_probability: float, seed: int) -> list[GameForm]:
    """A reproducible stream of random forms (duplicates possible).

    Depth varies per form so shallow games stay represented.
    """
    rng = random.Random(seed)
    return [_random_form(rng, rng.randint(0, max_birthday), max_options,
                         empty_side_probability)
            for _ in range(count)]


def random_impartial_game(max_birthday: int, max_options: int, seed: int) -> GameForm:
    """Deterministic random impartial form (both sides share every option set)."""
    rng = random.Random(seed)
    return _random_impartial(rng, max_birthday, max_options)


def _random_impartial(rng: random.Random, depth: int, max_options: int) -> GameForm:
    if depth <= 0 or rng.random() < 0.2:
        return ZERO
    opts = [_random_impartial(rng, depth - 1, max_options)
            for _ in range(rng.randint(1, max_options))]
    return make_form(opts, opts)


def random_symmetric_ending_game(max_birthday: int, max_options: int,
                                 seed: int) -> GameForm:
    """Deterministic random symmetric-ending form.

    Either the empty form, or both sides non-empty with moves to 0 present on
    both sides or on neither.
    """
    rng = random.Random(seed)
    if max_birthday <= 0 or rng.random() < 0.15:
        return ZERO
    return _random_symmetric(rng, rng.randint(1, max_birthday), max_options)


def _random_symmetric(rng: random.Random, depth: int, max_options: int) -> GameForm:
    # depth >= 1; result is always non-terminal, so nested calls never
    # introduce a one-sided move to 0.
    if depth == 1:
        return STAR
    include_zero = rng.random() < 0.5

    def side() -> list[GameForm]:
        base = [ZERO] if include_zero else []
        low = 0 if include_zero else 1
        extra = rng.randint(low, max(low, max_options - len(base)))
        base += [_random_symmetric(rng, rng.randint(1, depth - 1), max_options)
                 for _ in range(extra)]
        return base

    return make_form(side(), side())
