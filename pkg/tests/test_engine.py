"""Bidding engine: legality, resolution, solving, strategies, theorem checks."""

import pytest

from bidgame.engine import (Bid, BudgetState, IllegalBid, best_action,
                            best_bid, best_move, bid_matrix, legal_bids,
                            resolve_bids, solve, solve_outcome)
from bidgame.forms import (STAR, ZERO, AlternatingOutcome, Player,
                           alternating_outcome, classify, conjugate, parse,
                           random_corpus, random_impartial_game,
                           random_symmetric_ending_game, render)
from bidgame.oracle import oracle_solve
from bidgame.outcomes import feasibility, word

L, R = Player.LEFT, Player.RIGHT


# ------------------------------------------------------------------ legality

def test_legal_bids_marker_owner():
    state = BudgetState(2, 1, L)
    assert legal_bids(state, L) == [Bid(0), Bid(1), Bid(0, True), Bid(1, True)]
    assert legal_bids(state, R) == [Bid(0), Bid(1)]


def test_legal_bids_degenerate_budget():
    state = BudgetState(0, 0, L)
    assert legal_bids(state, L) == [Bid(0), Bid(0, True)]
    assert legal_bids(state, R) == [Bid(0)]


# ---------------------------------------------------------------- resolution

def test_resolve_marked_win_transfers_marker():
    res = resolve_bids(BudgetState(2, 1, L), Bid(1, True), Bid(0))
    assert res.mover is L
    assert res.state == BudgetState(2, 0, R)


def test_resolve_overbid_by_non_owner():
    res = resolve_bids(BudgetState(2, 1, L), Bid(0), Bid(1))
    assert res.mover is R
    assert res.state == BudgetState(2, 2, L)


def test_resolve_tie_goes_to_owner_and_transfers():
    res = resolve_bids(BudgetState(2, 1, L), Bid(1), Bid(1))
    assert res.mover is L
    assert res.state == BudgetState(2, 0, R)


def test_resolve_strict_win_keeps_marker():
    res = resolve_bids(BudgetState(2, 1, L), Bid(1), Bid(0))
    assert res.mover is L
    assert res.state == BudgetState(2, 0, L)


def test_resolve_losing_marked_bid_keeps_marker():
    res = resolve_bids(BudgetState(2, 1, L), Bid(0, True), Bid(1))
    assert res.mover is R
    assert res.state == BudgetState(2, 2, L)


def test_resolve_mirrored_for_right_owner():
    res = resolve_bids(BudgetState(2, 1, R), Bid(0), Bid(1, True))
    assert res.mover is R
    assert res.state == BudgetState(2, 2, L)
    res = resolve_bids(BudgetState(2, 1, R), Bid(0), Bid(0))
    assert res.mover is R
    assert res.state == BudgetState(2, 1, L)


def test_resolve_rejects_illegal_bids():
    with pytest.raises(IllegalBid):
        resolve_bids(BudgetState(2, 1, L), Bid(2), Bid(0))
    with pytest.raises(IllegalBid):
        resolve_bids(BudgetState(2, 1, L), Bid(0), Bid(0, True))


def test_budget_state_validation():
    with pytest.raises(ValueError):
        BudgetState(2, 3, L)
    with pytest.raises(ValueError):
        BudgetState(-1, 0, L)


def test_money_conservation_over_all_resolutions():
    for tb in range(3):
        for p in range(tb + 1):
            for marker in (L, R):
                state = BudgetState(tb, p, marker)
                for lb in legal_bids(state, L):
                    for rb in legal_bids(state, R):
                        res = resolve_bids(state, lb, rb)
                        assert 0 <= res.state.left <= tb
                        assert res.state.left + res.state.right == tb
                        if res.state.marker is not marker:
                            # only a tie or a winning marked bid moves it
                            winner_bid = lb if res.mover is L else rb
                            assert winner_bid.marker or lb.amount == rb.amount


# ------------------------------------------------------------------- solving

def test_zero_game_loses_for_marker_owner():
    for tb in range(4):
        for p in range(tb + 1):
            assert solve(ZERO, BudgetState(tb, p, L)) is R
            assert solve(ZERO, BudgetState(tb, p, R)) is L


def test_star_with_marker_and_half_budget():
    assert solve(STAR, BudgetState(2, 1, L)) is L


def test_right_needs_two_dollars_without_marker():
    g = parse("{^|}")
    assert solve(g, BudgetState(2, 0, L)) is R
    assert solve(g, BudgetState(2, 0, R)) is L
    assert solve(g, BudgetState(2, 1, L)) is L


def test_solve_outcome_words():
    assert word(solve_outcome(parse("*"), 1)) == "LRLR"
    assert word(solve_outcome(parse("{*|v}"), 2)) == "LRRLRR"
    assert word(solve_outcome(ZERO, 3)) == "RRRRLLLL"


# ---------------------------------------------------------------- bid matrix

def test_bid_matrix_star_worked_example():
    m = bid_matrix(STAR, BudgetState(2, 1, L))
    assert m.left_bids == (Bid(0), Bid(1), Bid(0, True), Bid(1, True))
    assert m.right_bids == (Bid(0), Bid(1))
    assert [[w.value for w in row] for row in m.cells] == [
        ["L", "R"], ["R", "L"], ["L", "R"], ["L", "L"]]
    assert m.left_security_rows() == [3]
    assert m.right_security_cols() == []


def test_bid_matrix_without_marked_rows_has_no_saddle():
    # dropping the marked bids leaves matching-pennies rows, the situation
    # the marker-in-bid rule exists to repair
    m = bid_matrix(STAR, BudgetState(2, 1, L))
    unmarked = [row for bid, row in zip(m.left_bids, m.cells) if not bid.marker]
    assert not any(all(w is L for w in row) for row in unmarked)
    assert not any(all(row[j] is R for row in unmarked)
                   for j in range(len(m.right_bids)))


def test_bid_matrix_terminal_game():
    m = bid_matrix(ZERO, BudgetState(0, 0, L))
    assert all(w is R for row in m.cells for w in row)


# ---------------------------------------------------------------- strategies

def test_best_action_star_example():
    bid, move = best_action(STAR, BudgetState(2, 1, L), L)
    assert bid == Bid(1, True)
    assert move == 0


def test_best_action_pass_when_winning_without_moving():
    bid, move = best_action(ZERO, BudgetState(1, 1, R), L)
    assert bid == Bid(0, False)
    assert move is None
    assert solve(ZERO, BudgetState(1, 1, R)) is L


def test_best_action_deterministic():
    g = parse("{*|}")
    state = BudgetState(1, 0, L)
    first = best_action(g, state, L)
    for _ in range(3):
        assert best_action(g, state, L) == first


def test_best_bid_is_security_bid():
    for g in random_corpus(50, 3, 2, 0.3, seed=17):
        for tb in range(3):
            for p in range(tb + 1):
                for marker in (L, R):
                    state = BudgetState(tb, p, marker)
                    winner = solve(g, state)
                    bid = best_bid(g, state, winner)
                    m = bid_matrix(g, state)
                    bids = m.left_bids if winner is L else m.right_bids
                    idx = bids.index(bid)
                    if winner is L:
                        assert idx in m.left_security_rows()
                    else:
                        assert idx in m.right_security_cols()


def test_best_move_prefers_smallest_winning_index():
    # at {0,*|} with Right holding the marker, moving to either option wins,
    # so index 0 is chosen
    g = parse("{0,*|}")
    assert best_move(g, BudgetState(1, 1, R), L) == 0


# ----------------------------------------------------------- theorem suites

def test_tb0_reduces_to_alternating_play():
    mapping = {"LL": AlternatingOutcome.L, "LR": AlternatingOutcome.N,
               "RL": AlternatingOutcome.P, "RR": AlternatingOutcome.R}
    for g in random_corpus(300, 4, 3, 0.3, seed=21):
        assert mapping[word(solve_outcome(g, 0))] is alternating_outcome(g)


def test_oracle_equivalence():
    for g in random_corpus(120, 3, 2, 0.3, seed=23):
        for tb in range(3):
            for p in range(tb + 1):
                for marker in (L, R):
                    state = BudgetState(tb, p, marker)
                    assert solve(g, state) is oracle_solve(g, state)


def test_oracle_on_zero_game():
    assert oracle_solve(ZERO, BudgetState(5, 2, L)) is R


def test_oracle_agrees_on_star_all_coordinates():
    for marker in (L, R):
        for p in range(3):
            state = BudgetState(2, p, marker)
            assert oracle_solve(STAR, state) is solve(STAR, state)


def test_saddle_existence():
    for g in random_corpus(80, 3, 2, 0.3, seed=29):
        for tb in range(3):
            for p in range(tb + 1):
                for marker in (L, R):
                    m = bid_matrix(g, BudgetState(tb, p, marker))
                    assert bool(m.left_security_rows()) != \
                        bool(m.right_security_cols())


def test_conjugation_mirrors_outcomes():
    for g in random_corpus(80, 3, 2, 0.3, seed=31):
        cg = conjugate(g)
        for tb in range(3):
            for p in range(tb + 1):
                for marker in (L, R):
                    state = BudgetState(tb, p, marker)
                    assert solve(cg, state.mirrored()) is \
                        solve(g, state).opponent


def test_conjugation_commutes_with_outcomes():
    from bidgame.outcomes import conjugate_outcome
    for g in random_corpus(60, 3, 2, 0.3, seed=33):
        for tb in range(4):
            assert solve_outcome(conjugate(g), tb) == \
                conjugate_outcome(solve_outcome(g, tb))


def test_concurrent_solving_is_consistent():
    import concurrent.futures
    corpus = random_corpus(40, 3, 2, 0.3, seed=35)

    def run(args):
        g, tb = args
        return word(solve_outcome(g, tb))

    jobs = [(g, tb) for g in corpus for tb in range(3)]
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(run, jobs))
    assert parallel == [run(job) for job in jobs]


def test_last_move_wins():
    # a dominating player with a move that strands the opponent wins
    from bidgame.constructor import dominating_player
    for g in random_corpus(150, 3, 2, 0.3, seed=37):
        for tb in range(3):
            for p in range(tb + 1):
                for marker in (L, R):
                    dom = dominating_player(tb, p, marker)
                    opts = g.options(dom)
                    if any(not o.options(dom.opponent) for o in opts):
                        assert solve(g, BudgetState(tb, p, marker)) is dom


def _impartial_prediction(g, tb, p, marker):
    if g is ZERO:
        return marker.opponent
    if 2 * p > tb:
        return L
    if 2 * p < tb:
        return R
    nimber_nonzero = alternating_outcome(g) is AlternatingOutcome.N
    return marker if nimber_nonzero else marker.opponent


def test_impartial_theorem():
    for seed in range(120):
        g = random_impartial_game(4, 2, seed)
        assert classify(g).impartial
        for tb in range(4):
            for p in range(tb + 1):
                for marker in (L, R):
                    want = _impartial_prediction(g, tb, p, marker)
                    assert solve(g, BudgetState(tb, p, marker)) is want, \
                        (render(g), tb, p, marker)


def _symmetric_prediction(g, tb, p, marker):
    if g is ZERO:
        return marker.opponent
    if 2 * p > tb:
        return L
    if 2 * p < tb:
        return R
    alt = alternating_outcome(g)
    favorable = {L: (AlternatingOutcome.L, AlternatingOutcome.N),
                 R: (AlternatingOutcome.R, AlternatingOutcome.N)}[marker]
    return marker if alt in favorable else marker.opponent


def test_symmetric_ending_theorem():
    for seed in range(120):
        g = random_symmetric_ending_game(4, 2, seed)
        assert classify(g).symmetric_ending
        for tb in range(4):
            for p in range(tb + 1):
                for marker in (L, R):
                    want = _symmetric_prediction(g, tb, p, marker)
                    assert solve(g, BudgetState(tb, p, marker)) is want, \
                        (render(g), tb, p, marker)


def test_outcomes_always_feasible():
    for g in random_corpus(200, 4, 2, 0.3, seed=41):
        for tb in range(5):
            assert feasibility(solve_outcome(g, tb)).feasible
