"""Removal profiles, stability, ER-criticality, edge-deletion witnesses."""

import random

import pytest

from rainbowdom.enumeration import random_tree
from rainbowdom.gadgets import build_spider
from rainbowdom.graph import Edge, cycle_graph, path_graph, star_graph, subdivision
from rainbowdom.perturbation import (
    edge_removal_profile,
    edgedel_witness,
    is_er_critical,
    is_stable,
    vertex_removal_profile,
)
from rainbowdom.solver import gamma_weight


def test_vertex_profile_path4():
    prof = vertex_removal_profile(path_graph(4))
    assert prof.base_gamma == 3
    # deleting an end leaf leaves P3 (gamma 2); deleting an inner vertex
    # leaves K1 + K2 (gamma 3)
    deltas = {e.element: e.delta for e in prof.entries}
    assert deltas == {0: -1, 1: 0, 2: 0, 3: -1}


def test_edge_profile_path4():
    prof = edge_removal_profile(path_graph(4))
    assert prof.base_gamma == 3
    deltas = {(e.element.u, e.element.v): e.delta for e in prof.entries}
    assert deltas == {(0, 1): 0, (1, 2): 1, (2, 3): 0}


def test_profile_json_shapes():
    vj = vertex_removal_profile(path_graph(3)).to_json()
    assert all(isinstance(e["element"], int) for e in vj["entries"])
    ej = edge_removal_profile(path_graph(3)).to_json()
    assert all(isinstance(e["element"], list) for e in ej["entries"])


def test_stability_known_cases():
    assert is_stable(path_graph(3))           # the smallest stable tree
    assert not is_stable(path_graph(4))
    assert not is_stable(star_graph(3))
    s = build_spider(3)
    assert is_stable(s)
    assert not is_stable(build_spider(2))


def test_er_critical_known_cases():
    assert not is_er_critical(path_graph(2))  # deleting the edge keeps gamma at 2
    assert is_er_critical(path_graph(3))      # the subdivision of K2
    assert not is_er_critical(path_graph(4))
    assert is_er_critical(subdivision(star_graph(3)))
    assert not is_er_critical(star_graph(3))


def test_er_critical_rejects_nontrees():
    with pytest.raises(ValueError):
        is_er_critical(cycle_graph(4))


def test_edgedel_witness_agrees_on_random_trees():
    rng = random.Random(23)
    for _ in range(40):
        t = random_tree(rng.randint(2, 9), rng)
        for e in t.edges():
            w = edgedel_witness(t, e)
            assert w.agrees
            assert w.measured_delta in (0, 1)


def test_edgedel_witness_records():
    t = path_graph(4)
    w = edgedel_witness(t, Edge(1, 2))
    assert w.predicted_delta == 1 and w.measured_delta == 1
    assert all(r.condition_holds for r in w.records)
    w = edgedel_witness(t, Edge(0, 1))
    assert w.predicted_delta == 0 and w.measured_delta == 0


def test_edgedel_witness_validates_input():
    with pytest.raises(ValueError):
        edgedel_witness(path_graph(4), Edge(0, 2))
    with pytest.raises(ValueError):
        edgedel_witness(cycle_graph(3), Edge(0, 1))
