"""Exact 2-rainbow independent domination solvers.

Two independent routes compute the optimum: a branch-and-bound scan over all
color assignments (the oracle, exact but exponential) and a linear-time
dynamic program on forests. Unicyclic components are solved exactly by
conditioning on the colors of one cycle edge's endpoints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, induced_subgraph

INF = 10 ** 9
DEFAULT_BRUTE_CAP = 15

RainbowAssignment = tuple  # per-vertex colors in {0,1,2}


class CapExceeded(ValueError):
    """Instance too large for the configured exhaustive-search cap."""


def assignment_to_string(colors: Sequence[int]) -> str:
    return "".join(str(c) for c in colors)


def assignment_from_string(s: str) -> tuple[int, ...]:
    colors = tuple(int(c) for c in s)
    if any(c not in (0, 1, 2) for c in colors):
        raise ValueError("assignment digits must be 0, 1 or 2")
    return colors


@dataclass(frozen=True)
class ColorConstraint:
    """Per-vertex allowed color sets; every set must be nonempty."""

    allowed: tuple[frozenset, ...]

    def __post_init__(self):
        for i, s in enumerate(self.allowed):
            if not s:
                raise ValueError(f"empty allowed set at vertex {i}")
            if not s <= {0, 1, 2}:
                raise ValueError(f"allowed colors at vertex {i} must be within {{0,1,2}}")

    @classmethod
    def free(cls, n: int) -> "ColorConstraint":
        return cls(tuple(frozenset({0, 1, 2}) for _ in range(n)))

    def restrict(self, v: int, colors) -> "ColorConstraint":
        new = list(self.allowed)
        new[v] = frozenset(colors)
        return ColorConstraint(tuple(new))

    def random_single(self, rng: random.Random) -> "ColorConstraint":
        """Force or forbid one random color at one random vertex."""
        v = rng.randrange(len(self.allowed))
        c = rng.choice((0, 1, 2))
        if rng.random() < 0.5:
            return self.restrict(v, {c})
        return self.restrict(v, {0, 1, 2} - {c})


def _allowed_sets(g: Graph, c: Optional[ColorConstraint]) -> list[frozenset]:
    if c is None:
        return [frozenset({0, 1, 2})] * g.n
    if len(c.allowed) != g.n:
        raise ValueError("constraint length does not match graph order")
    return list(c.allowed)


@dataclass
class SolveOutcome:
    weight: Optional[int]                      # None when infeasible
    witness: Optional[tuple[int, ...]] = None

    @property
    def feasible(self) -> bool:
        return self.weight is not None


# -- validity ----------------------------------------------------------------

def is_2ridf(g: Graph, colors: Sequence[int]) -> bool:
    """V_1 and V_2 independent; every 0-vertex sees both a 1 and a 2."""
    if len(colors) != g.n:
        raise ValueError("assignment length does not match graph order")
    for v in range(g.n):
        c = colors[v]
        if c == 0:
            nc = {colors[w] for w in g.adj[v]}
            if 1 not in nc or 2 not in nc:
                return False
        else:
            if any(colors[w] == c for w in g.adj[v]):
                return False
    return True


# -- branch-and-bound scan (oracle route) --------------------------------------

def _scan_assignments(
    g: Graph,
    allowed: list[frozenset],
    limit: Callable[[], int],
    on_complete: Callable[[list[int], int], bool],
) -> None:
    """DFS over color vectors in lexicographic order.

    Prunes branches whose partial weight exceeds limit(); calls on_complete
    for every valid full assignment, stopping if it returns True.
    """
    n = g.n
    nbrs = [sorted(g.adj[v]) for v in range(n)]
    last = [max(g.adj[v]) if g.adj[v] else -1 for v in range(n)]
    color = [0] * n
    s1 = [0] * n
    s2 = [0] * n
    stop = [False]

    def place(v: int, c: int) -> bool:
        if c == 1 and s1[v]:
            return False
        if c == 2 and s2[v]:
            return False
        if c == 0 and last[v] < v and not (s1[v] and s2[v]):
            return False
        color[v] = c
        if c:
            arr = s1 if c == 1 else s2
            for u in nbrs[v]:
                arr[u] += 1
        # earlier 0-vertices whose neighborhoods just completed
        ok = True
        for u in nbrs[v]:
            if u < v and color[u] == 0 and last[u] == v and not (s1[u] and s2[u]):
                ok = False
                break
        if not ok:
            unplace(v, c)
        return ok

    def unplace(v: int, c: int) -> None:
        if c:
            arr = s1 if c == 1 else s2
            for u in nbrs[v]:
                arr[u] -= 1

    def rec(v: int, w: int) -> None:
        if stop[0]:
            return
        if v == n:
            if on_complete(color, w):
                stop[0] = True
            return
        for c in (0, 1, 2):
            if c not in allowed[v]:
                continue
            nw = w + (1 if c else 0)
            if nw > limit():
                continue
            if place(v, c):
                rec(v + 1, nw)
                unplace(v, c)
            if stop[0]:
                return

    rec(0, 0)


def _bb_min_weight(g: Graph, allowed: list[frozenset]) -> int:
    # weight can never exceed the order, so g.n is a safe initial bound
    best = [INF]
    cap = g.n

    def done(colors, w):
        best[0] = min(best[0], w)
        return False

    _scan_assignments(g, allowed, lambda: min(best[0] - 1, cap), done)
    return best[0]


def _bb_first_witness(g: Graph, allowed: list[frozenset], weight: int) -> Optional[tuple[int, ...]]:
    found: list[Optional[tuple[int, ...]]] = [None]

    def done(colors, w):
        found[0] = tuple(colors)
        return True

    _scan_assignments(g, allowed, lambda: weight, done)
    return found[0]


def gamma_bruteforce(
    g: Graph,
    constraint: Optional[ColorConstraint] = None,
    cap: int = DEFAULT_BRUTE_CAP,
) -> SolveOutcome:
    """Exhaustive minimum over all assignments respecting the constraint."""
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds brute-force cap {cap}")
    allowed = _allowed_sets(g, constraint)
    w = _bb_min_weight(g, allowed)
    if w >= INF:
        return SolveOutcome(None)
    return SolveOutcome(w, _bb_first_witness(g, allowed, w))


def enumerate_min_functions(
    g: Graph,
    cap: int = DEFAULT_BRUTE_CAP,
) -> Iterator[tuple[int, ...]]:
    """All minimum 2RiDFs, each once, in lexicographic order."""
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds brute-force cap {cap}")
    allowed = _allowed_sets(g, None)
    w = _bb_min_weight(g, allowed)
    if w >= INF:
        return
    out: list[tuple[int, ...]] = []

    def done(colors, wt):
        if wt == w:
            out.append(tuple(colors))
        return False

    _scan_assignments(g, allowed, lambda: w, done)
    yield from out


# -- forest dynamic program ----------------------------------------------------
# Vertex states: 0 = colored 1, 1 = colored 2, 2..5 = colored 0 with the set S
# of colors provided by children encoded as a bitmask (bit0 -> 1, bit1 -> 2).
# A 0-colored vertex is satisfied once S plus the parent's color covers {1,2};
# the root itself needs S = {1,2}.

def _tree_component_weight(
    g: Graph, comp: list[int], allowed: Sequence[frozenset]
) -> int:
    root = comp[0]
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in g.adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    if len(order) != len(comp):
        raise ValueError("component is not connected as expected")
    cost: dict[int, list[int]] = {}
    for v in reversed(order):
        a = allowed[v]
        base = [
            1 if 1 in a else INF,
            1 if 2 in a else INF,
            0 if 0 in a else INF,
            INF,
            INF,
            INF,
        ]
        for ch in g.adj[v]:
            if ch == parent[v]:
                continue
            cc = cost.pop(ch)
            under1 = min(cc[1], cc[4], cc[5])   # child colored 2 or zero seeing a 2
            under2 = min(cc[0], cc[3], cc[5])
            base[0] = min(INF, base[0] + under1)
            base[1] = min(INF, base[1] + under2)
            nz = [INF, INF, INF, INF]
            for s in range(4):
                cur = base[2 + s]
                if cur >= INF:
                    continue
                if cc[5] < INF:
                    nz[s] = min(nz[s], cur + cc[5])
                if cc[0] < INF:
                    nz[s | 1] = min(nz[s | 1], cur + cc[0])
                if cc[1] < INF:
                    nz[s | 2] = min(nz[s | 2], cur + cc[1])
            base[2:6] = nz
        cost[v] = base
    r = cost[root]
    return min(r[0], r[1], r[5], INF)


def _forest_weight(g: Graph, allowed: Sequence[frozenset]) -> int:
    total = 0
    for comp in g.components():
        w = _tree_component_weight(g, comp, allowed)
        if w >= INF:
            return INF
        total += w
    return total


# -- unicyclic components ------------------------------------------------------

def _find_cycle_edge(g: Graph) -> tuple[int, int]:
    seen = {}
    for s in range(g.n):
        if s in seen:
            continue
        stack = [(s, -1)]
        seen[s] = -1
        while stack:
            v, p = stack.pop()
            for w in g.adj[v]:
                if w == p:
                    p = -2  # consume the single parent slot (simple graphs)
                    continue
                if w in seen:
                    return (v, w)
                seen[w] = v
                stack.append((w, v))
    raise ValueError("graph is acyclic")


def _unicyclic_weight(g: Graph, allowed: Sequence[frozenset]) -> int:
    u, v = _find_cycle_edge(g)
    rest = [(e.u, e.v) for e in g.edges() if {e.u, e.v} != {u, v}]
    best = INF
    for cu in sorted(allowed[u]):
        for cv in sorted(allowed[v]):
            if cu and cu == cv:
                continue
            edges = list(rest)
            alw = list(allowed)
            alw[u] = frozenset({cu})
            alw[v] = frozenset({cv})
            n2 = g.n
            extra = 0
            # a pendant stand-in carries the deleted edge's coverage to a
            # 0-colored endpoint; its own +1 weight is subtracted afterwards
            if cu == 0 and cv != 0:
                edges.append((u, n2))
                alw.append(frozenset({cv}))
                n2 += 1
                extra += 1
            elif cv == 0 and cu != 0:
                edges.append((v, n2))
                alw.append(frozenset({cu}))
                n2 += 1
                extra += 1
            w = _forest_weight(Graph(n2, edges), alw)
            if w < INF:
                best = min(best, w - extra)
    return best


# -- dispatch ------------------------------------------------------------------

def gamma_weight(
    g: Graph,
    constraint: Optional[ColorConstraint] = None,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> int:
    """Minimum 2RiDF weight, or INF when infeasible under the constraint."""
    allowed = _allowed_sets(g, constraint)
    total = 0
    for comp in g.components():
        sub, relabel = induced_subgraph(g, comp)
        sub_allowed = [frozenset()] * sub.n
        for old, new in relabel.items():
            sub_allowed[new] = allowed[old]
        m = sub.edge_count()
        if m == sub.n - 1:
            w = _tree_component_weight(sub, list(range(sub.n)), sub_allowed)
        elif m == sub.n:
            w = _unicyclic_weight(sub, sub_allowed)
        else:
            if sub.n > brute_cap:
                raise CapExceeded(
                    f"cyclic component of order {sub.n} exceeds brute-force cap {brute_cap}"
                )
            w = _bb_min_weight(sub, sub_allowed)
        if w >= INF:
            return INF
        total += w
    return total


def _witness_by_fixing(
    g: Graph,
    allowed: list[frozenset],
    weight_fn: Callable[[list[frozenset]], int],
    target: int,
) -> tuple[int, ...]:
    """Lexicographically smallest optimum by fixing colors vertex by vertex."""
    alw = list(allowed)
    colors = []
    for v in range(g.n):
        for c in (0, 1, 2):
            if c not in alw[v]:
                continue
            saved = alw[v]
            alw[v] = frozenset({c})
            if weight_fn(alw) == target:
                colors.append(c)
                break
            alw[v] = saved
        else:
            raise AssertionError("no color preserves the optimum; solver bug")
    return tuple(colors)


def gamma(
    g: Graph,
    constraint: Optional[ColorConstraint] = None,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> SolveOutcome:
    """Exact solve: forests by DP, unicyclic by conditioning, else brute force."""
    w = gamma_weight(g, constraint, brute_cap)
    if w >= INF:
        return SolveOutcome(None)
    allowed = _allowed_sets(g, constraint)
    witness = _witness_by_fixing(
        g, allowed,
        lambda alw: gamma_weight(g, ColorConstraint(tuple(alw)), brute_cap),
        w,
    )
    return SolveOutcome(w, witness)


def gamma_tree_dp(
    g: Graph,
    constraint: Optional[ColorConstraint] = None,
) -> SolveOutcome:
    """Forest-only exact solve via the 6-state dynamic program."""
    if not g.is_forest():
        raise ValueError("input has a cycle; gamma_tree_dp needs a forest")
    allowed = _allowed_sets(g, constraint)
    w = _forest_weight(g, allowed)
    if w >= INF:
        return SolveOutcome(None)
    witness = _witness_by_fixing(
        g, allowed, lambda alw: _forest_weight(g, alw), w
    )
    return SolveOutcome(w, witness)


# -- derived quantities ----------------------------------------------------------

def w_zero(g: Graph, brute_cap: int = DEFAULT_BRUTE_CAP) -> set[int]:
    """Vertices assigned 0 by every minimum 2RiDF."""
    base = gamma_weight(g, None, brute_cap)
    if base >= INF:
        raise ValueError("graph admits no 2RiDF")
    out = set()
    cc = ColorConstraint.free(g.n)
    for v in range(g.n):
        if gamma_weight(g, cc.restrict(v, {1, 2}), brute_cap) > base:
            out.add(v)
    return out


def has_min_function_with_color(
    g: Graph, v: int, colors, brute_cap: int = DEFAULT_BRUTE_CAP
) -> bool:
    """Whether some minimum 2RiDF gives v a color from the given set."""
    base = gamma_weight(g, None, brute_cap)
    if base >= INF:
        raise ValueError("graph admits no 2RiDF")
    constrained = ColorConstraint.free(g.n).restrict(v, colors)
    return gamma_weight(g, constrained, brute_cap) == base


def independent_domination(g: Graph, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Exact i(G) by subset enumeration over bitmasks."""
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds subset-enumeration cap {cap}")
    if g.n == 0:
        return 0
    nbr = [0] * g.n
    for v in range(g.n):
        for w in g.adj[v]:
            nbr[v] |= 1 << w
    closed = [nbr[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    best = g.n + 1
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size >= best:
            continue
        cover = 0
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            if nbr[v] & mask:
                ok = False
                break
            cover |= closed[v]
            m &= m - 1
        if ok and cover == full:
            best = size
    if best > g.n:
        raise ValueError("no independent dominating set (unexpected)")
    return best
