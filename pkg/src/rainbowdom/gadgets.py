"""Spiders and the attachment constructions used by the perturbation results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph


_PARAMETRIC = {"O3", "SpiderAttach", "K14_6"}
_TAGS = {
    "O1", "O2", "O3", "K12Path", "K13Path", "SpiderAttach",
    "K14_1", "K14_2", "K14_3", "K14_4", "K14_5", "K14_6", "K14_7",
}


@dataclass(frozen=True)
class GadgetKind:
    tag: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown gadget tag {self.tag!r}")
        if self.tag in _PARAMETRIC:
            if self.k is None:
                raise ValueError(f"{self.tag} requires parameter k")
            if self.tag == "O3" and self.k < 3:
                raise ValueError("O3 requires k >= 3")
            if self.tag == "SpiderAttach" and self.k < 2:
                raise ValueError("SpiderAttach requires k >= 2")
            if self.tag == "K14_6" and self.k < 3:
                raise ValueError("K14_6 requires k >= 3 pendant edges")
        elif self.k is not None:
            raise ValueError(f"{self.tag} takes no parameter")


O1 = GadgetKind("O1")
O2 = GadgetKind("O2")
K12_PATH = GadgetKind("K12Path")
K13_PATH = GadgetKind("K13Path")


def o3(k: int) -> GadgetKind:
    return GadgetKind("O3", k)


def spider_attach(k: int) -> GadgetKind:
    return GadgetKind("SpiderAttach", k)


def k14(item: int, k: Optional[int] = None) -> GadgetKind:
    if not 1 <= item <= 7:
        raise ValueError("K14 items are numbered 1..7")
    return GadgetKind(f"K14_{item}", k)


def build_spider(k: int) -> Graph:
    """Spider S_k: head 0 joined to k disjoint P3 legs.

    Leg i (0-based) occupies ids 3i+1, 3i+2, 3i+3 walking away from the head.
    """
    if k < 2:
        raise ValueError("spiders need at least 2 legs")
    edges = []
    for i in range(k):
        a = 3 * i + 1
        edges += [(0, a), (a, a + 1), (a + 1, a + 2)]
    return Graph(3 * k + 1, edges)


def spider_head_and_legs(k: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Vertex roles matching build_spider's labeling."""
    return 0, [(3 * i + 1, 3 * i + 2, 3 * i + 3) for i in range(k)]


def _spider_gadget(n0: int, x: int, k: int) -> tuple[list[tuple[int, int]], dict[str, int]]:
    head = n0
    edges = [(x, head)]
    names = {"v1": head}
    for i in range(k):
        a = n0 + 1 + 3 * i
        edges += [(head, a), (a, a + 1), (a + 1, a + 2)]
        names[f"v1^{i + 1}"] = a
        names[f"v2^{i + 1}"] = a + 1
        names[f"v3^{i + 1}"] = a + 2
    return edges, names


def attach_gadget(g: Graph, x: int, kind: GadgetKind) -> tuple[Graph, dict[str, int]]:
    """Attach the named construction at x; new vertices are appended after g's ids.

    Returns the enlarged graph and a map from the construction's vertex names
    to the new ids.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    n0 = g.n
    tag = kind.tag
    if tag in ("O1", "K12Path"):
        # path v2-v1-v3 with v1 joined to x
        v1, v2, v3 = n0, n0 + 1, n0 + 2
        new_edges = [(v1, v2), (v1, v3), (x, v1)]
        names = {"v1": v1, "v2": v2, "v3": v3}
    elif tag == "O2":
        # path v4 v3 v2 v1 v5 v6 v7 with v1 joined to x
        v1, v2, v3, v4, v5, v6, v7 = range(n0, n0 + 7)
        new_edges = [(v4, v3), (v3, v2), (v2, v1), (v1, v5), (v5, v6), (v6, v7), (x, v1)]
        names = {f"v{i}": v for i, v in enumerate((v1, v2, v3, v4, v5, v6, v7), start=1)}
    elif tag in ("O3", "SpiderAttach"):
        new_edges, names = _spider_gadget(n0, x, kind.k)
    elif tag == "K13Path":
        # path v5 v4 v3 v2 v1 with v4 joined to x
        v1, v2, v3, v4, v5 = range(n0, n0 + 5)
        new_edges = [(v5, v4), (v4, v3), (v3, v2), (v2, v1), (x, v4)]
        names = {f"v{i}": v for i, v in enumerate((v1, v2, v3, v4, v5), start=1)}
    elif tag == "K14_1":
        v1, v2, v = n0, n0 + 1, n0 + 2
        new_edges = [(x, v), (x, v2), (v2, v1)]
        names = {"v1": v1, "v2": v2, "v": v}
    elif tag == "K14_2":
        v1, v2, w1, w2 = range(n0, n0 + 4)
        new_edges = [(v1, v2), (w1, w2), (x, v2), (x, w2)]
        names = {"v1": v1, "v2": v2, "v1'": w1, "v2'": w2}
    elif tag == "K14_3":
        v1, v2, u1, u2, u3 = range(n0, n0 + 5)
        new_edges = [(v1, v2), (u1, u2), (u2, u3), (x, v2), (x, u3)]
        names = {"v1": v1, "v2": v2, "u1": u1, "u2": u2, "u3": u3}
    elif tag == "K14_4":
        u1, u2, u3, u4 = range(n0, n0 + 4)
        new_edges = [(u1, u2), (u2, u3), (u3, u4), (x, u4)]
        names = {"u1": u1, "u2": u2, "u3": u3, "u4": u4}
    elif tag == "K14_5":
        v1, v2, v3, u1, u2, u3, w = range(n0, n0 + 7)
        new_edges = [(v1, v2), (v2, v3), (u1, u2), (u2, u3), (x, w), (x, v3), (x, u3)]
        names = {"v1": v1, "v2": v2, "v3": v3, "u1": u1, "u2": u2, "u3": u3, "w": w}
    elif tag == "K14_6":
        new_edges = [(x, n0 + i) for i in range(kind.k)]
        names = {f"v{i + 1}": n0 + i for i in range(kind.k)}
    elif tag == "K14_7":
        u1, u2, u3, u4, u5 = range(n0, n0 + 5)
        new_edges = [(u1, u2), (u2, u3), (u3, u4), (u4, u5), (x, u4)]
        names = {f"u{i}": v for i, v in enumerate((u1, u2, u3, u4, u5), start=1)}
    else:  # pragma: no cover
        raise ValueError(f"unknown gadget tag {tag!r}")
    all_edges = [(e.u, e.v) for e in g.edges()] + new_edges
    return Graph(n0 + len(names), all_edges), names
