"""Tree/forest isomorphism via canonical forms."""

import random

import pytest

from rainbowdom.graph import Graph, cycle_graph, disjoint_union, path_graph, star_graph
from rainbowdom.isomorphism import forest_canonical_form, trees_isomorphic


def _relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, ((perm[e.u], perm[e.v]) for e in g.edges()))


def test_relabeling_oracle():
    from rainbowdom.enumeration import random_tree

    rng = random.Random(99)
    for _ in range(100):
        t = random_tree(rng.randint(1, 16), rng)
        assert trees_isomorphic(t, _relabel(t, rng))


def test_distinguishes_nonisomorphic():
    from rainbowdom.enumeration import enumerate_free_trees

    for n in (6, 7):
        trees = list(enumerate_free_trees(n))
        forms = [forest_canonical_form(t) for t in trees]
        assert len(set(forms)) == len(forms)


def test_star_vs_path():
    assert not trees_isomorphic(star_graph(3), path_graph(4))


def test_forest_order_independent():
    rng = random.Random(5)
    a = disjoint_union(path_graph(3), star_graph(3))
    b = disjoint_union(star_graph(3), path_graph(3))
    assert forest_canonical_form(a) == forest_canonical_form(b)
    assert forest_canonical_form(a) != forest_canonical_form(
        disjoint_union(path_graph(3), path_graph(4))
    )


def test_rejects_cycles():
    with pytest.raises(ValueError):
        forest_canonical_form(cycle_graph(4))
