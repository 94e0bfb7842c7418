"""AHU canonical forms for rooted trees and isomorphism of forests."""

from __future__ import annotations

from .graph import Graph, induced_subgraph


def _centers(g: Graph, comp: list[int]) -> list[int]:
    """Center vertex/vertices of one tree component (original ids)."""
    sub, relabel = induced_subgraph(g, comp)
    back = {new: old for old, new in relabel.items()}
    deg = [sub.degree(v) for v in range(sub.n)]
    remaining = sub.n
    layer = [v for v in range(sub.n) if deg[v] <= 1]
    alive = [True] * sub.n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
        remaining -= len(layer)
        for v in layer:
            for w in sub.adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(back[v] for v in range(sub.n) if alive[v])


def rooted_canonical_form(g: Graph, root: int) -> str:
    """AHU encoding of the tree component containing root, rooted there."""
    # iterative post-order; children encodings sorted
    enc: dict[int, str] = {}
    stack = [(root, -1, False)]
    while stack:
        v, parent, done = stack.pop()
        if done:
            kids = sorted(enc[w] for w in g.adj[v] if w != parent)
            enc[v] = "(" + "".join(kids) + ")"
        else:
            stack.append((v, parent, True))
            for w in g.adj[v]:
                if w != parent:
                    stack.append((w, v, False))
    return enc[root]


def tree_canonical_form(g: Graph, comp: list[int]) -> str:
    """Canonical form of one tree component: best AHU encoding over its centers."""
    return min(rooted_canonical_form(g, c) for c in _centers(g, comp))


def forest_canonical_form(g: Graph) -> tuple[str, ...]:
    """Sorted multiset of per-component canonical forms; raises on cycles."""
    if not g.is_forest():
        raise ValueError("input contains a cycle")
    return tuple(sorted(tree_canonical_form(g, comp) for comp in g.components()))


def trees_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism of forests via canonical rooted encodings at centers."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        if not (a.is_forest() and b.is_forest()):
            raise ValueError("input contains a cycle")
        return False
    return forest_canonical_form(a) == forest_canonical_form(b)
