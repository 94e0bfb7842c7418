"""Constructive recognition of stable trees and of ER-critical trees.

Stable trees are recognized by running the structural decomposition backwards:
repeatedly strip an attachment (a degree-3 support vertex with two leaves, or
a pendant spider) off a deepest branch, checking the forced-zero side
conditions on the remainder, until a base tree (P3 or a spider with >= 3
legs) is reached. The recorded strips replay forwards into a certificate.

ER-critical trees are recognized as subdivision graphs: vertices at odd
distance from a leaf must all have degree 2 and contract to the preimage's
edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .gadgets import GadgetKind, O1, O2, attach_gadget, build_spider, o3
from .graph import (
    Graph,
    bfs_distances,
    eccentricities,
    induced_subgraph,
    path_graph,
    subdivision,
)
from .isomorphism import trees_isomorphic
from .solver import ColorConstraint, gamma_weight


class SideConditionError(ValueError):
    """A certificate step violates its forced-zero side condition."""


@dataclass(frozen=True)
class TreeCertificateStep:
    op: GadgetKind
    attach_at: int

    def __post_init__(self):
        if self.op.tag not in ("O1", "O2", "O3"):
            raise ValueError("certificate steps use O1, O2 or O3 only")


@dataclass
class FamilyTCertificate:
    base: str                    # "P3" or "spider"
    k: Optional[int] = None      # leg count when base == "spider"
    steps: list[TreeCertificateStep] = field(default_factory=list)

    def __post_init__(self):
        if self.base not in ("P3", "spider"):
            raise ValueError("certificate base must be 'P3' or 'spider'")
        if self.base == "spider" and (self.k is None or self.k < 3):
            raise ValueError("spider base needs k >= 3")

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "k": self.k,
            "steps": [
                {"op": s.op.tag, "k": s.op.k, "attach": s.attach_at}
                for s in self.steps
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FamilyTCertificate":
        steps = [
            TreeCertificateStep(GadgetKind(s["op"], s.get("k")), s["attach"])
            for s in data["steps"]
        ]
        return cls(data["base"], data.get("k"), steps)


@dataclass
class SubdivisionPreimage:
    preimage: Graph
    originals: list[int]              # input ids kept as preimage vertices
    subdivision_vertices: list[int]   # input ids contracted away

    def to_json(self) -> dict:
        from .graph import emit_graph6

        return {
            "preimage_graph6": emit_graph6(self.preimage),
            "originals": self.originals,
            "subdivision_vertices": self.subdivision_vertices,
        }


# -- forced-zero membership on a working tree ----------------------------------

def _in_w_zero(g: Graph, v: int) -> bool:
    base = gamma_weight(g)
    constrained = ColorConstraint.free(g.n).restrict(v, {1, 2})
    return gamma_weight(g, constrained) > base


# -- structural probes ----------------------------------------------------------

def _whole_spider(g: Graph) -> Optional[tuple[int, int, list[tuple[int, int, int]]]]:
    """(k, head, legs) if g is a spider with k >= 3 legs of P3 each."""
    n = g.n
    if n < 10 or (n - 1) % 3:
        return None
    k = (n - 1) // 3
    heads = [v for v in range(n) if g.degree(v) == k]
    if k < 3 or len(heads) != 1:
        return None
    head = heads[0]
    legs = []
    seen = {head}
    for a in sorted(g.adj[head]):
        if g.degree(a) != 2:
            return None
        (b,) = g.adj[a] - {head}
        if g.degree(b) != 2 or b == head:
            return None
        (c,) = g.adj[b] - {a}
        if g.degree(c) != 1:
            return None
        legs.append((a, b, c))
        seen.update((a, b, c))
    return (k, head, legs) if len(seen) == n else None


def _rooted_spider_legs(
    g: Graph, head: int, parent: int
) -> Optional[list[tuple[int, int, int]]]:
    """Legs of the maximal subtree at head if it is a spider, else None."""
    legs = []
    for a in sorted(g.adj[head] - {parent}):
        nb = g.adj[a] - {head}
        if len(nb) != 1:
            return None
        (b,) = nb
        nb2 = g.adj[b] - {a}
        if len(nb2) != 1:
            return None
        (c,) = nb2
        if g.degree(c) != 1:
            return None
        legs.append((a, b, c))
    return legs or None


def _is_p3(g: Graph) -> Optional[tuple[int, int, int]]:
    """(leaf, center, leaf) when g is P3."""
    if g.n != 3 or g.edge_count() != 2:
        return None
    center = next(v for v in range(3) if g.degree(v) == 2)
    a, b = sorted(set(range(3)) - {center})
    return (a, center, b)


def _is_ds22(g: Graph) -> Optional[tuple[int, int]]:
    """The two centers when g is the double star DS_{2,2}."""
    if g.n != 6 or g.edge_count() != 5:
        return None
    centers = sorted(v for v in range(6) if g.degree(v) == 3)
    if len(centers) != 2 or not g.has_edge(*centers):
        return None
    for c in centers:
        if any(g.degree(w) != 1 for w in g.adj[c] if w not in centers):
            return None
    return tuple(centers)


def _diametrical_path(g: Graph) -> list[int]:
    """Deterministic diametrical path maximizing deg of its second vertex."""
    ecc = eccentricities(g)
    diam = max(ecc)
    dists = [bfs_distances(g, v) for v in range(g.n)]
    best = None
    for a in range(g.n):
        if ecc[a] != diam:
            continue
        for b in range(g.n):
            if dists[a][b] != diam:
                continue
            # unique tree path a -> b, walked greedily toward b
            path = [a]
            while path[-1] != b:
                v = path[-1]
                nxt = min(w for w in g.adj[v] if dists[w][b] == dists[v][b] - 1)
                path.append(nxt)
            key = (-g.degree(path[1]), path[1], a, b)
            if best is None or key < best[0]:
                best = (key, path)
    assert best is not None
    return best[1]


# -- recognition of the stable-tree family --------------------------------------

def recognize_family_T(t: Graph) -> Optional[FamilyTCertificate]:
    """Certificate for membership in the stable-tree family, or None."""
    if not t.is_tree():
        raise ValueError("recognize_family_T needs a tree")
    if t.n < 3:
        raise ValueError("recognition needs order >= 3")

    cur = t
    orig = list(range(t.n))  # cur id -> input id
    records: list[tuple] = []  # strip records, outermost first
    base: Optional[tuple] = None

    def strip(drop: set[int]) -> None:
        nonlocal cur, orig
        keep = [v for v in range(cur.n) if v not in drop]
        sub, relabel = induced_subgraph(cur, keep)
        orig = [orig[old] for old in sorted(relabel, key=relabel.get)]
        cur = sub

    def residual_w0(drop: set[int], probe: int) -> bool:
        keep = [v for v in range(cur.n) if v not in drop]
        sub, relabel = induced_subgraph(cur, keep)
        return _in_w_zero(sub, relabel[probe])

    while True:
        if cur.n < 3:
            return None
        p3 = _is_p3(cur)
        if p3:
            base = ("P3", tuple(orig[v] for v in p3))
            break
        sp = _whole_spider(cur)
        if sp:
            k, head, legs = sp
            base = (
                "spider",
                k,
                orig[head],
                [tuple(orig[x] for x in leg) for leg in legs],
            )
            break
        diam = max(eccentricities(cur))
        if diam <= 2:
            return None
        if diam == 3:
            ds = _is_ds22(cur)
            if ds is None:
                return None
            c_keep, c_strip = ds
            leaves = sorted(cur.adj[c_strip] - {c_keep})
            records.append(
                ("O1", orig[c_keep], (orig[c_strip], orig[leaves[0]], orig[leaves[1]]))
            )
            strip({c_strip, *leaves})
            continue

        path = _diametrical_path(cur)
        v2, v3, v4, v5 = path[1], path[2], path[3], path[4]
        deg2 = cur.degree(v2)
        if deg2 == 3:
            leaves = sorted(cur.adj[v2] - {v3})
            if any(cur.degree(w) != 1 for w in leaves):
                return None
            drop = {v2, *leaves}
            if not residual_w0(drop, v3):
                return None
            records.append(("O1", orig[v3], (orig[v2], orig[leaves[0]], orig[leaves[1]])))
            strip(drop)
        elif deg2 == 2:
            if cur.degree(v3) != 2:
                return None
            # a depth-1 branch below v4 is handled like the degree-3 case
            depth1 = sorted(
                y
                for y in cur.adj[v4] - {v5}
                if cur.degree(y) >= 2
                and all(cur.degree(w) == 1 for w in cur.adj[y] - {v4})
            )
            if depth1:
                y = depth1[0]
                if cur.degree(y) != 3:
                    return None
                leaves = sorted(cur.adj[y] - {v4})
                drop = {y, *leaves}
                if not residual_w0(drop, v4):
                    return None
                records.append(("O1", orig[v4], (orig[y], orig[leaves[0]], orig[leaves[1]])))
                strip(drop)
            else:
                legs = _rooted_spider_legs(cur, v4, v5)
                if legs is None or len(legs) < 2:
                    return None
                m = len(legs)
                drop = {v4}
                for leg in legs:
                    drop.update(leg)
                if m >= 3:
                    records.append(
                        (
                            "O3",
                            m,
                            orig[v5],
                            (orig[v4], [tuple(orig[x] for x in leg) for leg in legs]),
                        )
                    )
                    strip(drop)
                else:
                    if residual_w0(drop, v5):
                        return None
                    records.append(
                        (
                            "O2",
                            orig[v5],
                            (orig[v4], [tuple(orig[x] for x in leg) for leg in legs]),
                        )
                    )
                    strip(drop)
        else:
            return None

    # forward pass: rebuild with the certificate's own labeling
    rmap: dict[int, int] = {}
    if base[0] == "P3":
        cert = FamilyTCertificate("P3")
        g = path_graph(3)
        la, c, lb = base[1]
        rmap.update({la: 0, c: 1, lb: 2})
    else:
        _, k, head, legs = base
        cert = FamilyTCertificate("spider", k)
        g = build_spider(k)
        rmap[head] = 0
        for i, (a, b, cv) in enumerate(legs):
            rmap[a] = 3 * i + 1
            rmap[b] = 3 * i + 2
            rmap[cv] = 3 * i + 3

    for rec in reversed(records):
        if rec[0] == "O1":
            _, attach, (mid, l1, l2) = rec
            kind = O1
            g, names = attach_gadget(g, rmap[attach], kind)
            rmap[mid] = names["v1"]
            rmap[l1] = names["v2"]
            rmap[l2] = names["v3"]
        elif rec[0] == "O2":
            _, attach, (head_o, legs_o) = rec
            kind = O2
            g, names = attach_gadget(g, rmap[attach], kind)
            rmap[head_o] = names["v1"]
            (a1, b1, c1), (a2, b2, c2) = legs_o
            for v, name in zip((a1, b1, c1, a2, b2, c2), ("v2", "v3", "v4", "v5", "v6", "v7")):
                rmap[v] = names[name]
        else:
            _, m, attach, (head_o, legs_o) = rec
            kind = o3(m)
            g, names = attach_gadget(g, rmap[attach], kind)
            rmap[head_o] = names["v1"]
            for i, (a, b, cv) in enumerate(legs_o, start=1):
                rmap[a] = names[f"v1^{i}"]
                rmap[b] = names[f"v2^{i}"]
                rmap[cv] = names[f"v3^{i}"]
        cert.steps.append(TreeCertificateStep(kind, rmap[rec[1] if rec[0] != "O3" else rec[2]]))

    return cert


def replay_certificate(cert: FamilyTCertificate) -> Graph:
    """Rebuild the tree, enforcing each step's forced-zero side condition."""
    if cert.base == "P3":
        g = path_graph(3)
    else:
        g = build_spider(cert.k)
    for step in cert.steps:
        if not 0 <= step.attach_at < g.n:
            raise ValueError(f"attach vertex {step.attach_at} out of range")
        if step.op.tag == "O1":
            if not _in_w_zero(g, step.attach_at):
                raise SideConditionError(
                    f"O1 attach vertex {step.attach_at} is not forced to zero"
                )
        elif step.op.tag == "O2":
            if _in_w_zero(g, step.attach_at):
                raise SideConditionError(
                    f"O2 attach vertex {step.attach_at} is forced to zero"
                )
        g, _ = attach_gadget(g, step.attach_at, step.op)
    return g


# -- recognition of subdivision trees --------------------------------------------

def recognize_family_F(t: Graph) -> Optional[SubdivisionPreimage]:
    """Subdivision preimage when t = S(T') for a nontrivial tree T', else None."""
    if not t.is_tree():
        raise ValueError("recognize_family_F needs a tree")
    if t.n < 3:
        return None
    leaf = next((v for v in range(t.n) if t.degree(v) == 1), 0)
    dist = bfs_distances(t, leaf)
    originals = [v for v in range(t.n) if dist[v] % 2 == 0]
    subdiv = [v for v in range(t.n) if dist[v] % 2 == 1]
    if len(originals) < 2:
        return None
    if any(t.degree(x) != 2 for x in subdiv):
        return None
    relabel = {v: i for i, v in enumerate(originals)}
    edges = []
    for x in subdiv:
        a, b = sorted(t.adj[x])
        if a not in relabel or b not in relabel:
            return None
        edges.append((relabel[a], relabel[b]))
    if len(set(edges)) != len(edges):
        return None
    pre = Graph(len(originals), edges)
    if not pre.is_tree():
        return None
    if not trees_isomorphic(subdivision(pre), t):
        return None
    return SubdivisionPreimage(pre, originals, subdiv)
