"""Constructive recognizers for the stable-tree and ER-critical families."""

import random

import pytest

from rainbowdom.enumeration import enumerate_free_trees, random_tree
from rainbowdom.gadgets import O1, attach_gadget, build_spider, o3
from rainbowdom.graph import cycle_graph, path_graph, star_graph, subdivision
from rainbowdom.isomorphism import trees_isomorphic
from rainbowdom.perturbation import is_er_critical, is_stable
from rainbowdom.recognizers import (
    FamilyTCertificate,
    recognize_family_F,
    recognize_family_T,
    replay_certificate,
)


def test_base_cases():
    cert = recognize_family_T(path_graph(3))
    assert cert is not None and cert.base == "P3" and cert.steps == []
    cert = recognize_family_T(build_spider(3))
    assert cert is not None and cert.base == "spider" and cert.k == 3
    assert recognize_family_T(path_graph(4)) is None
    assert recognize_family_T(star_graph(3)) is None
    assert recognize_family_T(build_spider(2)) is None


def test_o1_grown_tree_recognized():
    # P3 grown by one O1 step at its forced-zero center: order 6, stable
    base = path_graph(3)
    g, _ = attach_gadget(base, 1, O1)
    cert = recognize_family_T(g)
    assert cert is not None
    assert [s.op.tag for s in cert.steps] == ["O1"]
    assert trees_isomorphic(replay_certificate(cert), g)


def test_o3_grown_tree_recognized():
    g, _ = attach_gadget(path_graph(3), 0, o3(3))
    cert = recognize_family_T(g)
    assert cert is not None
    assert trees_isomorphic(replay_certificate(cert), g)


def test_recognizer_matches_stability_small():
    for n in range(3, 10):
        for t in enumerate_free_trees(n):
            cert = recognize_family_T(t)
            assert (cert is not None) == is_stable(t), t
            if cert is not None:
                assert trees_isomorphic(replay_certificate(cert), t)


def test_certificate_round_trips_json():
    g, _ = attach_gadget(build_spider(3), 0, o3(3))
    cert = recognize_family_T(g)
    assert cert is not None
    blob = cert.to_json()
    again = FamilyTCertificate.from_json(blob)
    assert trees_isomorphic(replay_certificate(again), g)


def test_recognize_family_F_subdivisions():
    rng = random.Random(41)
    for _ in range(30):
        t = random_tree(rng.randint(2, 6), rng)
        s = subdivision(t)
        pre = recognize_family_F(s)
        assert pre is not None
        assert trees_isomorphic(pre.preimage, t)


def test_recognize_family_F_rejects_non_subdivisions():
    assert recognize_family_F(path_graph(4)) is None      # even order
    assert recognize_family_F(star_graph(3)) is None
    assert recognize_family_F(build_spider(3)) is None    # order 10


def test_recognize_family_F_matches_er_criticality_small():
    for n in range(3, 10):
        for t in enumerate_free_trees(n):
            assert (recognize_family_F(t) is not None) == is_er_critical(t), t


def test_recognizers_reject_nontrees():
    with pytest.raises(ValueError):
        recognize_family_T(cycle_graph(5))
    with pytest.raises(ValueError):
        recognize_family_F(cycle_graph(5))
