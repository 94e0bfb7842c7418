"""Exact gamma_ri2 solving: frozen values, oracle equivalence, invariants."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from rainbowdom.enumeration import enumerate_free_trees, random_tree
from rainbowdom.gadgets import build_spider
from rainbowdom.graph import (
    Graph,
    cycle_graph,
    disjoint_union,
    add_edge,
    path_graph,
    star_graph,
)
from rainbowdom.solver import (
    CapExceeded,
    ColorConstraint,
    assignment_from_string,
    assignment_to_string,
    enumerate_min_functions,
    gamma,
    gamma_bruteforce,
    gamma_tree_dp,
    gamma_weight,
    has_min_function_with_color,
    independent_domination,
    is_2ridf,
    w_zero,
)


def test_assignment_strings():
    assert assignment_to_string((0, 1, 2)) == "012"
    assert assignment_from_string("210") == (2, 1, 0)
    with pytest.raises(ValueError):
        assignment_from_string("013")


def test_is_2ridf_definition():
    p = path_graph(3)
    assert is_2ridf(p, (1, 0, 2))
    assert not is_2ridf(p, (1, 0, 1))      # middle 0 lacks a 2-neighbor
    assert not is_2ridf(p, (1, 1, 2))      # adjacent 1s not independent
    assert is_2ridf(p, (1, 2, 1))


# -- frozen expected values ---------------------------------------------------

def test_trivial_small_graphs():
    assert gamma_weight(Graph(0)) == 0
    assert gamma(Graph(1)).weight == 1
    assert gamma(path_graph(2)).weight == 2


def test_path_cycle_formulas():
    for n in range(1, 21):
        assert gamma_weight(path_graph(n)) == math.ceil((n + 1) / 2), n
    for m in range(3, 21):
        expect = math.ceil(m / 2) if m % 4 in (0, 3) else math.ceil(m / 2 + 1)
        assert gamma_weight(cycle_graph(m)) == expect, m


def test_star_values():
    # star centers must be dominated by both colors among leaves
    assert gamma_weight(star_graph(2)) == 2
    assert gamma_weight(star_graph(5)) == 5


def test_spider_values():
    for k in range(2, 5):
        s = build_spider(k)
        assert s.n == 3 * k + 1
        assert gamma_weight(s, brute_cap=s.n) == 2 * k


def test_min_function_enumeration_frozen():
    assert list(enumerate_min_functions(Graph(1))) == [(1,), (2,)]
    assert list(enumerate_min_functions(path_graph(2))) == [(1, 2), (2, 1)]
    assert list(enumerate_min_functions(path_graph(3))) == [(1, 0, 2), (2, 0, 1)]


def test_w_zero_path_and_spider():
    assert w_zero(path_graph(3)) == {1}
    assert w_zero(path_graph(5)) == {1, 3}
    s = build_spider(3)
    assert w_zero(s) == {0, 2, 5, 8}   # head plus middle vertex of each leg


def test_infeasible_component():
    # an isolated vertex forces weight >= 1, never infeasible; but a constraint can be
    g = path_graph(2)
    cc = ColorConstraint.free(2).restrict(0, {0}).restrict(1, {0})
    assert gamma(g, cc).weight is None


# -- oracle equivalence -------------------------------------------------------

def test_dp_equals_bruteforce_all_trees():
    for n in range(1, 9):
        for t in enumerate_free_trees(n):
            dp = gamma_tree_dp(t)
            bf = gamma_bruteforce(t)
            assert dp.weight == bf.weight
            assert dp.witness == bf.witness  # identical lexicographic witness


def test_dp_equals_bruteforce_under_constraints():
    rng = random.Random(31)
    for _ in range(60):
        t = random_tree(rng.randint(2, 9), rng)
        cc = ColorConstraint.free(t.n).random_single(rng)
        dp = gamma_tree_dp(t, cc)
        bf = gamma_bruteforce(t, cc)
        assert dp.weight == bf.weight
        assert dp.witness == bf.witness


def test_unicyclic_equals_bruteforce():
    rng = random.Random(17)
    for _ in range(80):
        t = random_tree(rng.randint(3, 9), rng)
        while True:
            u, v = rng.randrange(t.n), rng.randrange(t.n)
            if u != v and not t.has_edge(u, v):
                break
        g = add_edge(t, u, v)
        cc = ColorConstraint.free(g.n).random_single(rng)
        for constraint in (None, cc):
            fast = gamma_weight(g, constraint)
            slow = gamma_bruteforce(g, constraint)
            assert fast == (slow.weight if slow.weight is not None else 10**9)


def test_witness_is_valid_and_minimum():
    rng = random.Random(7)
    for _ in range(40):
        t = random_tree(rng.randint(1, 10), rng)
        out = gamma(t)
        assert is_2ridf(t, out.witness)
        assert sum(1 for c in out.witness if c != 0) == out.weight


# -- invariants ---------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_disjoint_union_additive(n, seed):
    rng = random.Random(seed)
    a = random_tree(n, rng)
    b = random_tree(rng.randint(1, 6), rng)
    assert gamma_weight(disjoint_union(a, b)) == gamma_weight(a) + gamma_weight(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_constraint_monotone(n, seed):
    rng = random.Random(seed)
    t = random_tree(n, rng)
    cc = ColorConstraint.free(t.n).random_single(rng)
    assert gamma_weight(t, cc) >= gamma_weight(t)


def test_has_min_function_with_color():
    p = path_graph(3)
    assert has_min_function_with_color(p, 0, {1, 2})
    assert has_min_function_with_color(p, 1, {0})
    assert not has_min_function_with_color(p, 1, {1, 2})


def test_cap_enforced():
    big = cycle_graph(4)  # cyclic but solvable exactly; brute cap applies elsewhere
    assert gamma_weight(big) == 2
    two_cycles = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert gamma_weight(two_cycles) == 4  # unicyclic components, no cap needed
    with pytest.raises(CapExceeded):
        gamma_bruteforce(path_graph(16))
    with pytest.raises(CapExceeded):
        enumerate_min_functions(path_graph(16)).__next__()


def test_independent_domination_values():
    assert independent_domination(path_graph(5)) == 2
    assert independent_domination(cycle_graph(5)) == 2
    assert independent_domination(star_graph(4)) == 1
    assert independent_domination(Graph(0)) == 0
    with pytest.raises(CapExceeded):
        independent_domination(path_graph(20))
