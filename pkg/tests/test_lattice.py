"""Outcome lattices: nodes, edges, order, join/meet, reachability, DOT."""

import pytest

from bidgame.engine import solve_outcome
from bidgame.forms import random_corpus
from bidgame.lattice import (build_lattice, export_dot, gamma_has_edge, join,
                             lattice_record, meet, order_leq)
from bidgame.outcomes import (ShortForm, count_feasible, enumerate_feasible,
                              to_short_form)


def test_gamma_edge_rule():
    assert gamma_has_edge((0, 0), (1, 0))
    assert gamma_has_edge((0, 0), (0, 1))
    assert not gamma_has_edge((0, 0), (1, 1))  # rank jumps by two
    assert gamma_has_edge((1, 0), (1, 1))
    assert not gamma_has_edge((1, 1), (1, 0))


def test_lattice_tb0_is_the_diamond():
    lat = build_lattice(0)
    assert lat.nodes == {ShortForm(0, 0), ShortForm(0, 1),
                         ShortForm(1, 0), ShortForm(1, 1)}
    assert len(lat.edges) == 4
    assert lat.top == ShortForm(0, 0)
    assert lat.bottom == ShortForm(1, 1)


def test_lattice_tb1_counts():
    lat = build_lattice(1)
    assert len(lat.nodes) == 8
    assert len(lat.edges) == 10


def test_lattice_node_sets_match_enumeration():
    for tb in range(11):
        lat = build_lattice(tb)
        assert lat.nodes == set(enumerate_feasible(tb))
        assert len(lat.nodes) == count_feasible(tb)


def test_order_and_bounds():
    assert order_leq((1, 1), (0, 0))
    assert not order_leq((0, 1), (1, 0))
    assert not order_leq((1, 0), (0, 1))
    assert join((0, 1), (1, 0)) == ShortForm(0, 0)
    assert meet((0, 1), (1, 0)) == ShortForm(1, 1)


def test_join_meet_closure():
    for tb in range(5):
        nodes = enumerate_feasible(tb)
        node_set = set(nodes)
        for x in nodes:
            for y in nodes:
                assert join(x, y) in node_set
                assert meet(x, y) in node_set


def test_lattice_methods_validate_membership():
    lat = build_lattice(1)
    with pytest.raises(ValueError):
        lat.join((3, 3), (0, 0))  # node of a larger budget's lattice
    assert lat.join((1, 1), (2, 0)) == ShortForm(1, 0)


def test_reachability_matches_order():
    for tb in range(7):
        lat = build_lattice(tb)
        nodes = lat.sorted_nodes()
        for x in nodes:
            for y in nodes:
                assert lat.has_path(x, y) == order_leq(y, x), (tb, x, y)


def test_solved_outcomes_live_in_the_lattice():
    for tb in range(4):
        nodes = build_lattice(tb).nodes
        for g in random_corpus(100, 3, 2, 0.3, seed=57):
            assert to_short_form(solve_outcome(g, tb)) in nodes


def test_export_dot_deterministic_and_counts():
    lat = build_lattice(0)
    text = export_dot(lat)
    assert text == export_dot(build_lattice(0))
    node_lines = [ln for ln in text.splitlines()
                  if ln.endswith(";") and "->" not in ln and '"' in ln]
    assert len(node_lines) == 4
    assert text.count("->") == 4
    assert export_dot(build_lattice(1)).count("->") == 10


def test_lattice_record_schema():
    rec = lattice_record(build_lattice(0))
    assert rec["tb"] == 0
    assert rec["nodes"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert [[0, 0], [0, 1]] in rec["edges"]
    assert len(rec["edges"]) == 4
