"""Command-line interface: solving, table reproduction, construction, lattice
export, classification, the invariant suite and terminal play.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional, Sequence

from .constructor import (InfeasibleShortForm, VerificationFailed, construct,
                          forced_bid_sequence)
from .engine import (Bid, BudgetState, best_bid, best_move, bid_matrix,
                     resolve_bids, solve, solve_outcome)
from .forms import (GameForm, ParseError, Player, alternating_outcome,
                    classify, conjugate, parse, random_corpus,
                    random_impartial_game, random_symmetric_ending_game,
                    render)
from .lattice import build_lattice, export_dot, lattice_record
from .oracle import oracle_solve
from .outcomes import (ShortForm, feasibility, outcome_record, to_short_form,
                       word)

#: Reference games whose outcome words are tabulated for small budgets.
TABLE_GAMES = ["0", "*", "1", "^", "{*|*}", "{*|}", "1/2", "+-1"]


class DomainError(Exception):
    pass


def _parse_game(text: str) -> GameForm:
    try:
        return parse(text)
    except ParseError as exc:
        raise DomainError(f"cannot parse {text!r}: {exc}") from exc


def _parse_player(token: str) -> Player:
    if token.upper() in ("L", "LEFT"):
        return Player.LEFT
    if token.upper() in ("R", "RIGHT"):
        return Player.RIGHT
    raise DomainError(f"player must be L or R, got {token!r}")


def _parse_tb_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError as exc:
        raise DomainError(f"bad tb range {text!r}; use N or A..B") from exc


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _split_word(w: str) -> str:
    half = len(w) // 2
    return f"{w[:half]} {w[half:]}"


# ------------------------------------------------------------------- commands

def cmd_solve(args) -> int:
    g = _parse_game(args.game)
    if args.p is not None:
        marker = _parse_player(args.marker)
        try:
            state = BudgetState(args.tb, args.p, marker)
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
        winner = solve(g, state)
        if args.format == "json":
            _emit_json({"tb": args.tb, "p": args.p, "marker": marker.value,
                        "winner": winner.value})
        else:
            print(f"{render(g)} at ({state.describe()} | TB={args.tb}): "
                  f"{winner.value} wins")
        return 0
    outcome = solve_outcome(g, args.tb)
    record = outcome_record(outcome)
    if args.format == "json":
        _emit_json(record)
    else:
        sf = record["short_form"]
        print(f"{render(g)}  TB={args.tb}  {_split_word(record['word'])}  "
              f"short=({sf['a']},{sf['b']})")
    return 0


def cmd_table(args) -> int:
    tbs = list(_parse_tb_range(args.tb_range))
    games = args.games or TABLE_GAMES
    rows = []
    for text in games:
        g = _parse_game(text)
        rows.append((text, [word(solve_outcome(g, tb)) for tb in tbs]))
    if args.format == "json":
        _emit_json({"tbs": tbs, "rows": [
            {"game": text, "words": words} for text, words in rows]})
        return 0
    name_width = max(len(t) for t, _ in rows)
    header = "game".ljust(name_width) + "  " + "  ".join(
        f"o_{tb}".ljust(2 * (tb + 1) + 1) for tb in tbs)
    print(header)
    for text, words in rows:
        cells = "  ".join(_split_word(w).ljust(2 * (tb + 1) + 1)
                          for tb, w in zip(tbs, words))
        print(text.ljust(name_width) + "  " + cells)
    return 0


def cmd_construct(args) -> int:
    try:
        a, b = (int(x) for x in args.short.split(","))
    except ValueError as exc:
        raise DomainError(f"bad short form {args.short!r}; use a,b") from exc
    try:
        g = construct(args.tb, ShortForm(a, b))
    except (InfeasibleShortForm, VerificationFailed) as exc:
        raise DomainError(str(exc)) from exc
    outcome = solve_outcome(g, args.tb)
    if args.format == "json":
        _emit_json({"game": render(g), **outcome_record(outcome)})
    else:
        print(f"({a},{b}) at TB={args.tb}: {render(g)}  "
              f"word={_split_word(word(outcome))}")
    return 0


def cmd_lattice(args) -> int:
    lat = build_lattice(args.tb)
    if args.format == "json":
        _emit_json(lattice_record(lat))
    elif args.format == "text":
        print(f"L({args.tb}): {len(lat.nodes)} nodes, {len(lat.edges)} edges")
        for a, b in lat.sorted_nodes():
            print(f"  ({a},{b})")
    else:
        sys.stdout.write(export_dot(lat))
    return 0


def cmd_classify(args) -> int:
    g = _parse_game(args.game)
    flags = classify(g)
    alt = alternating_outcome(g)
    payload = {
        "game": render(g),
        "birthday": g.birthday,
        "impartial": flags.impartial,
        "dicot": flags.dicot,
        "symmetric_ending": flags.symmetric_ending,
        "alternating_outcome": alt.value,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"{payload['game']}: birthday={g.birthday} "
              f"impartial={flags.impartial} dicot={flags.dicot} "
              f"symmetric_ending={flags.symmetric_ending} "
              f"alternating={alt.value}")
    return 0


# --------------------------------------------------------------- verification

def _verify_failures(tb: int, count: int, seed: int) -> Iterable[str]:
    """Run the invariant suites on a seeded corpus; yield violations."""
    corpus = random_corpus(count, 3, 2, 0.3, seed)
    feas_nodes = set(build_lattice(tb).nodes)
    for i, g in enumerate(corpus):
        label = f"form #{i} {render(g)}"
        # alternating play is the zero-budget special case
        w0 = word(solve_outcome(g, 0))
        alt = {"LL": "L", "LR": "N", "RL": "P", "RR": "R"}[w0]
        if alt != alternating_outcome(g).value:
            yield f"{label}: TB=0 word {w0} but alternating {alternating_outcome(g).value}"
        outcome = solve_outcome(g, tb)
        if not feasibility(outcome).feasible:
            yield f"{label}: infeasible outcome {word(outcome)} at TB={tb}"
        elif to_short_form(outcome) not in feas_nodes:
            yield f"{label}: outcome {word(outcome)} outside L({tb})"
        conj_word = word(solve_outcome(conjugate(g), tb))
        expected = word(outcome)[::-1].translate(str.maketrans("LR", "RL"))
        if conj_word != expected:
            yield f"{label}: conjugate outcome {conj_word} != {expected}"
        for marker in (Player.LEFT, Player.RIGHT):
            for p in range(tb + 1):
                state = BudgetState(tb, p, marker)
                engine = solve(g, state)
                if engine is not oracle_solve(g, state):
                    yield f"{label}: solve != oracle at ({state.describe()})"
                matrix = bid_matrix(g, state)
                rows = bool(matrix.left_security_rows())
                cols = bool(matrix.right_security_cols())
                if rows == cols:
                    yield f"{label}: no saddle at ({state.describe()})"
                if (engine is Player.LEFT) != rows:
                    yield f"{label}: winner/saddle mismatch at ({state.describe()})"


def cmd_verify(args) -> int:
    failures = []
    for failure in _verify_failures(args.tb, args.count, args.seed):
        failures.append(failure)
        print(f"FAIL {failure}", file=sys.stderr)
        if len(failures) >= 10:
            break
    if failures:
        print(f"verify: {len(failures)} violation(s)", file=sys.stderr)
        return 1
    print(f"verify: OK ({args.count} forms, TB={args.tb}, seed={args.seed})")
    return 0


# ----------------------------------------------------------------------- play

def _read_bid(prompt: str, state: BudgetState, who: Player,
              stdin, stdout) -> Optional[Bid]:
    budget = state.budget_of(who)
    marker_note = ", append m to include the marker" if state.marker is who else ""
    stdout.write(f"{prompt} (0..{budget}{marker_note}): ")
    stdout.flush()
    line = stdin.readline()
    if not line:
        return None
    text = line.strip().lower()
    marked = text.endswith("m")
    if marked:
        text = text[:-1]
    try:
        return Bid(int(text), marked)
    except ValueError:
        stdout.write("bad bid, try again\n")
        return _read_bid(prompt, state, who, stdin, stdout)


def cmd_play(args) -> int:
    stdin = sys.stdin
    stdout = sys.stdout
    g = _parse_game(args.game)
    marker = _parse_player(args.marker)
    human = _parse_player(args.human)
    engine_side = human.opponent
    try:
        state = BudgetState(args.tb, args.p, marker)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    stdout.write(f"Playing {render(g)} at TB={args.tb}; "
                 f"you are {human.value}, engine is {engine_side.value}.\n")
    while True:
        stdout.write(f"\nposition {render(g)}  Left=${state.left} "
                     f"Right=${state.right}  marker with {state.marker.value}\n")
        engine_bid_choice = best_bid(g, state, engine_side)
        human_bid = _read_bid("your bid", state, human, stdin, stdout)
        if human_bid is None:
            stdout.write("\nbye\n")
            return 0
        try:
            if human is Player.LEFT:
                res = resolve_bids(state, human_bid, engine_bid_choice)
            else:
                res = resolve_bids(state, engine_bid_choice, human_bid)
        except Exception as exc:
            stdout.write(f"illegal bid: {exc}\n")
            continue
        stdout.write(f"engine bids {engine_bid_choice.describe()}; "
                     f"{res.mover.value} wins the bid\n")
        state = res.state
        opts = g.options(res.mover)
        if not opts:
            stdout.write(f"{res.mover.value} must move but cannot: "
                         f"{res.mover.opponent.value} wins the game\n")
            return 0
        if res.mover is engine_side:
            idx = best_move(g, state, engine_side)
            g = opts[idx]
            stdout.write(f"engine moves to {render(g)}\n")
        else:
            for i, o in enumerate(opts):
                stdout.write(f"  [{i}] {render(o)}\n")
            while True:
                stdout.write("your move: ")
                stdout.flush()
                line = stdin.readline()
                if not line:
                    stdout.write("\nbye\n")
                    return 0
                try:
                    idx = int(line.strip())
                    if 0 <= idx < len(opts):
                        break
                except ValueError:
                    pass
                stdout.write("bad index, try again\n")
            g = opts[idx]
            stdout.write(f"you move to {render(g)}\n")


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("bidgame.service:app", host=args.host, port=args.port)
    return 0


# ----------------------------------------------------------------- entrypoint

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidgame",
        description="Exact engine for discrete-bidding combinatorial games")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="perfect-play outcome of a game")
    p.add_argument("game")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--p", type=int, default=None,
                   help="Left budget for a single-coordinate query")
    p.add_argument("--marker", default="L",
                   help="marker owner for the coordinate query, L or R "
                        "(default L)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="outcome words over a range of budgets")
    p.add_argument("games", nargs="*",
                   help="games to tabulate (default: the built-in reference set)")
    p.add_argument("--tb-range", default="0..3")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="realize a feasible short form")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--short", required=True, help="target short form a,b")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lattice", help="outcome lattice for a total budget")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json", "text"], default="dot")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("classify", help="structural flags of a game")
    p.add_argument("game")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the invariant suite on a seeded corpus")
    p.add_argument("--tb", type=int, default=2)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("game")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--p", type=int, required=True, help="Left's budget")
    p.add_argument("--marker", required=True, help="marker owner, L or R")
    p.add_argument("--human", default="L", help="your side, L or R")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
