"""Outcome words, feasibility, short forms and counting."""

import itertools

import pytest
from hypothesis import given, strategies as st

from bidgame.forms import Player
from bidgame.outcomes import (NonMonotoneOutcome, OutcomeTuple, ShortForm,
                              conjugate_outcome, conjugate_short_form,
                              count_feasible, enumerate_feasible, feasibility,
                              from_short_form, is_feasible_short_form,
                              outcome_record, parse_word, to_short_form,
                              triangular, word)


def test_word_roundtrip():
    o = parse_word(1, "LRLR")
    assert o.winners == (Player.LEFT, Player.RIGHT, Player.LEFT, Player.RIGHT)
    assert word(o) == "LRLR"


def test_parse_word_validation():
    with pytest.raises(ValueError):
        parse_word(1, "LRL")
    with pytest.raises(ValueError):
        parse_word(1, "LRLX")


def test_winner_at_indexing():
    o = parse_word(2, "LLRLRR")
    assert o.winner_at(2, Player.LEFT) is Player.LEFT
    assert o.winner_at(0, Player.LEFT) is Player.RIGHT
    assert o.winner_at(2, Player.RIGHT) is Player.LEFT
    assert o.winner_at(1, Player.RIGHT) is Player.RIGHT


def test_feasibility_non_monotone():
    rep = feasibility(parse_word(1, "RLRL"))
    assert not rep.monotone_with_marker
    assert not rep.feasible


def test_feasibility_marker_worth_violation():
    # Left wins with the bare marker but loses with a dollar instead.
    rep = feasibility(parse_word(1, "LLRR"))
    assert rep.monotone_with_marker and rep.monotone_without_marker
    assert not rep.marker_worth
    assert not rep.feasible


def test_feasibility_ok():
    assert feasibility(parse_word(1, "LRLL")).feasible


def test_to_short_form_values():
    assert to_short_form(parse_word(3, "LLLRLLLR")) == ShortForm(1, 1)
    assert to_short_form(parse_word(3, "RRRRLLLL")) == ShortForm(4, 0)
    # threshold scan: marker half flips at p=1, bare half at p=2
    assert to_short_form(parse_word(2, "LLRLRR")) == ShortForm(1, 2)


def test_to_short_form_rejects_non_monotone():
    with pytest.raises(NonMonotoneOutcome):
        to_short_form(parse_word(1, "RLRL"))


def test_from_short_form_values():
    assert word(from_short_form(3, ShortForm(2, 0))) == "LLRRLLLL"
    assert word(from_short_form(1, ShortForm(0, 0))) == "LLLL"
    assert word(from_short_form(2, ShortForm(3, 3))) == "RRRRRR"


def test_from_short_form_range_check():
    with pytest.raises(ValueError):
        from_short_form(2, ShortForm(4, 0))
    with pytest.raises(ValueError):
        from_short_form(2, ShortForm(0, -1))


def test_short_form_roundtrips():
    for tb in range(4):
        for a in range(tb + 2):
            for b in range(tb + 2):
                sf = ShortForm(a, b)
                assert to_short_form(from_short_form(tb, sf)) == sf


def test_conjugate_outcome_word():
    assert word(conjugate_outcome(parse_word(1, "LRLR"))) == "LRLR"
    assert word(conjugate_outcome(parse_word(1, "LLRR"))) == "LLRR"
    assert word(conjugate_outcome(parse_word(2, "LLRLRR"))) == "LLRLRR"
    assert word(conjugate_outcome(parse_word(3, "LLRRLLLL"))) == "RRRRLLRR"


def test_conjugate_short_form_formula():
    assert conjugate_short_form(3, ShortForm(2, 0)) == ShortForm(4, 2)
    # conjugation commutes with thresholds on monotone outcomes
    for tb in range(4):
        for sf in enumerate_feasible(tb):
            o = from_short_form(tb, sf)
            assert to_short_form(conjugate_outcome(o)) == \
                conjugate_short_form(tb, sf)
            assert is_feasible_short_form(tb, conjugate_short_form(tb, sf))


def test_conjugate_outcome_involution():
    o = parse_word(2, "LLRLRR")
    assert conjugate_outcome(conjugate_outcome(o)) == o


def test_feasible_counts():
    assert count_feasible(0) == 4
    assert count_feasible(2) == 13
    assert count_feasible(3) == 19
    for tb in range(11):
        assert count_feasible(tb) == (tb + 2) ** 2 - triangular(tb)


def test_enumerate_feasible_contents():
    nodes = enumerate_feasible(0)
    assert nodes == [ShortForm(0, 0), ShortForm(0, 1),
                     ShortForm(1, 0), ShortForm(1, 1)]
    for tb in range(5):
        for sf in enumerate_feasible(tb):
            assert sf.b <= sf.a + 1


def test_monotone_word_count_and_exhaustive_feasible_filter():
    # all words, filtered: monotone count is (TB+2)^2, feasible subset
    # matches the closed formula
    for tb in range(4):
        monotone = 0
        feasible = 0
        for bits in itertools.product("LR", repeat=2 * (tb + 1)):
            rep = feasibility(parse_word(tb, "".join(bits)))
            if rep.monotone_with_marker and rep.monotone_without_marker:
                monotone += 1
                if rep.feasible:
                    feasible += 1
        assert monotone == (tb + 2) ** 2
        assert feasible == count_feasible(tb)


def test_outcome_record_schema():
    record = outcome_record(parse_word(1, "LRLR"))
    assert record == {"tb": 1, "word": "LRLR",
                      "short_form": {"a": 1, "b": 1}, "feasible": True}


@given(st.integers(0, 4), st.data())
def test_short_form_conjugation_involution_property(tb, data):
    sf = data.draw(st.sampled_from(enumerate_feasible(tb)))
    assert conjugate_short_form(tb, conjugate_short_form(tb, sf)) == sf
