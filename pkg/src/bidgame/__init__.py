"""Discrete-bidding combinatorial games under normal play: exact solving,
outcome feasibility, witness construction, outcome lattices and interactive
play."""

from .forms import (AlternatingOutcome, Classification, GameForm, ParseError,
                    Player, alternating_outcome, birthday, classify, conjugate,
                    make_form, parse, render)
from .engine import (Bid, BidMatrix, BudgetState, IllegalBid, Resolution,
                     best_action, best_bid, best_move, bid_matrix, legal_bids,
                     resolve_bids, solve, solve_outcome)
from .oracle import oracle_solve
from .outcomes import (FeasibilityReport, NonMonotoneOutcome, OutcomeTuple,
                       ShortForm, conjugate_outcome, conjugate_short_form,
                       count_feasible, enumerate_feasible, feasibility,
                       from_short_form, is_feasible_short_form, outcome_record,
                       parse_word, to_short_form, word)
from .constructor import (BidSequencePair, InfeasibleShortForm,
                          StageCapExceeded, ThreatChain, VerificationFailed,
                          build_threshold_chain, construct, dominating_player,
                          forced_bid_sequence, threat_chain)
from .lattice import (Lattice, build_lattice, export_dot, gamma_has_edge,
                      join, lattice_record, meet, order_leq)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
