"""Free-tree enumeration and seeded random graph generators."""

from __future__ import annotations

import random
from typing import Iterator

from networkx.generators.nonisomorphic_trees import nonisomorphic_trees

from .graph import Graph


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled free tree of order n exactly once, in a deterministic order.

    Backed by the WROM level-sequence generator (constant amortized time).
    """
    if n < 1:
        raise ValueError("tree order must be at least 1")
    if n == 1:
        yield Graph(1)
        return
    for t in nonisomorphic_trees(n):
        yield Graph(n, list(t.edges()))


def tree_from_pruefer(seq: list[int], n: int) -> Graph:
    """Labeled tree on n >= 2 vertices from a Pruefer sequence of length n-2."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n < 1:
        raise ValueError("tree order must be at least 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_gnp(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        g = random_gnp(n, p, rng)
        if n == 0 or len(g.components()) == 1:
            return g
