"""End-to-end smoke tests for the python module."""

from fractions import Fraction

import pytest

import firetree as ft


def test_builders_and_queries():
    t = ft.perfect_binary(3)
    assert t.n == 15
    assert t.height == 3
    assert t.weight(0) == 15
    p = ft.path(5)
    assert p.weight(1) == 4
    w = ft.pincer(1, 10, 16)
    assert w.n == 27
    assert w.weight(1) == 10
    assert w.weight(2) == 16
    assert w.max_weight_at_level(1, 2) == 9


def test_tree_json_round_trip():
    t = ft.random_tree(12, 7)
    again = ft.RootedTree.from_json(t.to_json())
    assert again.to_json() == t.to_json()


def test_simulation_matches_known_games():
    out = ft.simulate(ft.perfect_binary(3), "const:1", "gr")
    assert out["turns"] == 3
    assert not out["contained"]

    out = ft.simulate(ft.star(4), "list:4", "gr")
    assert out["contained"]
    assert ft.frac(out["saved"]) == 4

    out = ft.simulate(ft.path(5), "list:1", "gr")
    assert ft.frac(out["saved"]) == 4
    assert out["turns"] == 1


def test_offline_oracles():
    value, _nodes = ft.beta_integral(ft.path(5), "list:1")
    assert ft.frac(value) == 4
    assert ft.frac(ft.beta_fractional(ft.path(5), "list:1")) == 4
    assert ft.frac(ft.bob_two(ft.pincer(1, 10, 16), "list:1,0,1")) == 24

    tree = ft.RootedTree.from_parent_pairs([(1, 0), (2, 0), (3, 1), (4, 1)], 0)
    assert ft.frac(ft.beta_fractional(tree, "list:1/2,2")) == Fraction(5, 2)


def test_worst_ratio_and_phi_guarantee():
    report = ft.worst_ratio(ft.random_tree(9, 3), "algo2", 2)
    ratio = ft.frac(report["ratio"])
    # exact golden-ratio certificate: p^2 + pq - q^2 >= 0
    p, q = ratio.numerator, ratio.denominator
    assert p * p + p * q - q * q >= 0


def test_fire_recurrence():
    fire = [ft.frac(v) for v in ft.fire_recurrence([3, 3, 3], "const:1", 3)]
    assert fire == [1, 2, 5, 14]
    flat = [ft.frac(v) for v in ft.fire_recurrence([2, 2, 2, 2], "const:1", 4)]
    assert all(v == 1 for v in flat)


def test_targeting_game():
    out = ft.targeting("3", "4", "const:4", "greedy", 20)
    assert out["won"] and out["turn"] == 2
    assert out["divisors"] == ["2", "2"]
    out = ft.targeting("1", "3/2", "const:1", "single_divisor", 20)
    assert out["won"] and out["turn"] == 2


def test_separation_witness():
    w = ft.separate("const:1", "list:3/2;rest=1", 60)
    assert w["prefix"] == ["2", "2", "2"]
    assert w["rank"] == 3
    assert ft.frac(w["strong_fire_at_rank"]) <= 0

    w = ft.separate("const:1", "list:2;rest=1", 60, integral=True)
    assert w["rank"] == 1


def test_losing_instance():
    w = ft.losing_instance("doubling", "const:1", 50)
    assert w["M"] == 3
    assert w["N"] == 4
    assert w["prefix"][0] == "16"
    assert ft.frac(w["burn_share_sum"]) < 1


def test_level_trees():
    s = ft.level_family("spider_inf")
    assert s.level_size(5) == 6
    out = ft.simulate_prefix(s, "const:1", "even", 20, fractional=True)
    assert out["contained"]
    assert out["turns"] == 3


def test_errors_are_typed():
    with pytest.raises(ft.ParseError):
        ft.family("nonsense(1)")
    with pytest.raises(ft.GuardExceeded):
        ft.beta_integral(ft.pincer(1, 10, 16), "list:1")
    with pytest.raises(ft.ConstructionFailure):
        ft.separate("const:1", "const:1", 30)
