"""Simple undirected graphs with dense integer vertex ids, plus graph6 I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class Graph6Error(ValueError):
    """Raised on malformed graph6 input."""


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("self-loops are not allowed")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)

    def edges(self) -> list[Edge]:
        return [Edge(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_forest(self) -> bool:
        return all(
            len(comp) - 1 == self._component_edge_count(comp)
            for comp in self.components()
        )

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count() == self.n - 1 and len(self.components()) == 1

    def _component_edge_count(self, comp: list[int]) -> int:
        cs = set(comp)
        return sum(len(self.adj[v] & cs) for v in comp) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(e.u, e.v) for e in self.edges()]})"


# -- constructors ------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(p: int, q: int) -> Graph:
    """DS_{p,q}: adjacent centers 0 and 1 with p and q pendant leaves."""
    if p < 1 or q < 1:
        raise ValueError("double star needs p,q >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return Graph(2 + p + q, edges)


# -- editing operations ------------------------------------------------------

def remove_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Delete v, relabel densely preserving order; returns (graph, old->new map)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return remove_vertices(g, {v})


def remove_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(vs)
    for v in drop:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    keep = [u for u in range(g.n) if u not in drop]
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [
        (relabel[u], relabel[w])
        for u in keep
        for w in g.adj[u]
        if w not in drop and u < w
    ]
    return Graph(len(keep), edges), relabel


def induced_subgraph(g: Graph, verts: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = sorted(set(verts))
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [
        (relabel[u], relabel[w])
        for u in keep
        for w in g.adj[u]
        if w in relabel and u < w
    ]
    return Graph(len(keep), edges), relabel


def remove_edge(g: Graph, e: Edge) -> Graph:
    if not g.has_edge(e.u, e.v):
        raise ValueError(f"edge ({e.u},{e.v}) not present")
    return Graph(g.n, [(d.u, d.v) for d in g.edges() if d != e])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph(g.n, [(e.u, e.v) for e in g.edges()] + [(u, v)])


def subdivision(g: Graph) -> Graph:
    """Replace each edge uv by u-w-v with a fresh vertex w appended after 0..n-1."""
    edges = []
    w = g.n
    for e in g.edges():
        edges.append((e.u, w))
        edges.append((w, e.v))
        w += 1
    return Graph(w, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = [(e.u, e.v) for e in a.edges()]
    edges += [(e.u + a.n, e.v + a.n) for e in b.edges()]
    return Graph(a.n + b.n, edges)


# -- metrics -----------------------------------------------------------------

@dataclass
class GraphMetrics:
    diameter: Optional[int]          # None when disconnected or empty
    component_diameters: list[int]
    girth: Optional[int]             # None for forests
    leaves: list[int]
    components: list[list[int]]
    degree_sequence: list[int]


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, u)[v]
    if d < 0:
        raise ValueError("vertices in different components")
    return d


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity within each vertex's own component."""
    return [max(d for d in bfs_distances(g, v) if d >= 0) for v in range(g.n)]


def _girth(g: Graph) -> Optional[int]:
    # shortest cycle through each vertex via BFS
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v] and dist[w] >= dist[v]:
                        cyc = dist[v] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


def metrics(g: Graph) -> GraphMetrics:
    comps = g.components()
    comp_diams = []
    for comp in comps:
        sub, _ = induced_subgraph(g, comp)
        comp_diams.append(max(eccentricities(sub)) if sub.n else 0)
    diameter = comp_diams[0] if len(comps) == 1 else None
    return GraphMetrics(
        diameter=diameter,
        component_diameters=comp_diams,
        girth=_girth(g),
        leaves=[v for v in range(g.n) if g.degree(v) == 1],
        components=comps,
        degree_sequence=sorted((g.degree(v) for v in range(g.n)), reverse=True),
    )


def diameter(g: Graph) -> int:
    m = metrics(g)
    if m.diameter is None:
        raise ValueError("graph is disconnected or empty")
    return m.diameter


# -- graph6 ------------------------------------------------------------------
# Standard header-less short form: n <= 62 as chr(n+63), then the upper
# triangle in column order packed into big-endian 6-bit groups, each + 63.

def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 headers are not supported")
    if not s:
        raise Graph6Error("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid length character {s[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    data = s[1:]
    if len(data) != nchars:
        raise Graph6Error(f"expected {nchars} data characters, got {len(data)}")
    bits = []
    for ch in data:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"data character {ch!r} out of range")
        val = c - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero trailing padding bits")
    edges = [(u, v) for bit, (u, v) in zip(bits, _triangle_pairs(n)) if bit]
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("short-form graph6 supports at most 62 vertices")
    bits = [1 if g.has_edge(u, v) else 0 for u, v in _triangle_pairs(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)
