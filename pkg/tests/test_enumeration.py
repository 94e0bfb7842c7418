"""Tree enumeration and random generators."""

import itertools
import random

import pytest

from rainbowdom.enumeration import (
    enumerate_free_trees,
    random_connected_gnp,
    random_gnp,
    random_tree,
    tree_from_pruefer,
)
from rainbowdom.isomorphism import forest_canonical_form

# free trees on n vertices, OEIS A000055
FREE_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


@pytest.mark.parametrize("n,count", sorted(FREE_TREE_COUNTS.items()))
def test_free_tree_counts(n, count):
    trees = list(enumerate_free_trees(n))
    assert len(trees) == count
    assert all(t.n == n and t.is_tree() for t in trees)
    forms = {forest_canonical_form(t) for t in trees}
    assert len(forms) == count  # pairwise non-isomorphic


def test_enumeration_matches_labeled_bruteforce():
    """Independent oracle: dedup all labeled trees (via Pruefer) by canonical form."""
    for n in range(3, 8):
        labeled = {
            forest_canonical_form(tree_from_pruefer(list(seq), n))
            for seq in itertools.product(range(n), repeat=n - 2)
        }
        assert {forest_canonical_form(t) for t in enumerate_free_trees(n)} == labeled


def test_random_tree_is_tree():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 20)
        assert random_tree(n, rng).is_tree()


def test_random_gnp_bounds():
    rng = random.Random(12)
    g = random_gnp(10, 0.0, rng)
    assert g.edge_count() == 0
    g = random_gnp(10, 1.0, rng)
    assert g.edge_count() == 45
    g = random_connected_gnp(9, 0.3, rng)
    assert len(g.components()) == 1
