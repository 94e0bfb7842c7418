"""Vertex- and edge-removal analysis: deltas, stability, ER-criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Edge, Graph, remove_edge, remove_vertex
from .solver import (
    DEFAULT_BRUTE_CAP,
    INF,
    enumerate_min_functions,
    gamma_weight,
)


@dataclass
class RemovalEntry:
    element: Union[int, Edge]
    gamma: int
    delta: int


@dataclass
class RemovalProfile:
    base_gamma: int
    entries: list[RemovalEntry]

    def to_json(self) -> dict:
        out = []
        for e in self.entries:
            if isinstance(e.element, Edge):
                elem = [e.element.u, e.element.v]
            else:
                elem = e.element
            out.append({"element": elem, "gamma": e.gamma, "delta": e.delta})
        return {"base_gamma": self.base_gamma, "entries": out}


def _solve(g: Graph, cap: int) -> int:
    w = gamma_weight(g, None, cap)
    if w >= INF:
        raise ValueError("graph admits no 2RiDF")
    return w


def vertex_removal_profile(g: Graph, brute_cap: int = DEFAULT_BRUTE_CAP) -> RemovalProfile:
    base = _solve(g, brute_cap)
    entries = []
    for v in range(g.n):
        sub, _ = remove_vertex(g, v)
        w = _solve(sub, brute_cap)
        entries.append(RemovalEntry(v, w, w - base))
    return RemovalProfile(base, entries)


def edge_removal_profile(g: Graph, brute_cap: int = DEFAULT_BRUTE_CAP) -> RemovalProfile:
    base = _solve(g, brute_cap)
    entries = []
    for e in g.edges():
        w = _solve(remove_edge(g, e), brute_cap)
        entries.append(RemovalEntry(e, w, w - base))
    return RemovalProfile(base, entries)


def is_stable(g: Graph, brute_cap: int = DEFAULT_BRUTE_CAP) -> bool:
    """gamma_ri2 unchanged by removal of any single vertex."""
    base = _solve(g, brute_cap)
    for v in range(g.n):
        sub, _ = remove_vertex(g, v)
        if _solve(sub, brute_cap) != base:
            return False
    return True


def is_er_critical(t: Graph, brute_cap: int = DEFAULT_BRUTE_CAP) -> bool:
    """Every edge deletion raises gamma_ri2 by exactly one (trees)."""
    if not t.is_tree():
        raise ValueError("ER-criticality is defined for trees")
    if t.edge_count() < 1:
        raise ValueError("ER-criticality needs at least one edge")
    base = _solve(t, brute_cap)
    for e in t.edges():
        if _solve(remove_edge(t, e), brute_cap) != base + 1:
            return False
    return True


@dataclass
class FunctionRecord:
    colors: tuple
    zero_endpoint: Optional[int]          # the endpoint in V_0, if exactly one
    positive_neighbors: Optional[int]     # its count of neighbors in V_1 u V_2
    condition_holds: bool


@dataclass
class EdgeWitness:
    edge: Edge
    records: list[FunctionRecord]
    predicted_delta: int                  # +1 iff the condition holds for every function
    measured_delta: int
    agrees: bool = field(init=False)

    def __post_init__(self):
        self.agrees = self.predicted_delta == self.measured_delta


def edgedel_witness(t: Graph, e: Edge, brute_cap: int = DEFAULT_BRUTE_CAP) -> EdgeWitness:
    """Per-minimum-function endpoint analysis for one tree edge.

    The structural condition: exactly one endpoint is 0-colored and that
    endpoint has exactly two positively colored neighbors. Deletion raises
    gamma by one iff the condition holds for every minimum function.
    """
    if not t.is_tree():
        raise ValueError("edgedel_witness needs a tree")
    if not t.has_edge(e.u, e.v):
        raise ValueError(f"edge ({e.u},{e.v}) not present")
    base = _solve(t, brute_cap)
    records = []
    all_hold = True
    for f in enumerate_min_functions(t, brute_cap):
        zeros = [x for x in (e.u, e.v) if f[x] == 0]
        if len(zeros) == 1:
            z = zeros[0]
            pos = sum(1 for w in t.adj[z] if f[w] != 0)
            holds = pos == 2
            records.append(FunctionRecord(f, z, pos, holds))
        else:
            records.append(FunctionRecord(f, None, None, False))
            holds = False
        all_hold = all_hold and holds
    measured = _solve(remove_edge(t, e), brute_cap) - base
    return EdgeWitness(e, records, 1 if all_hold else 0, measured)
