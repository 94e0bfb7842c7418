"""Graph core: construction, editing, metrics, graph6 codec."""

import pytest
from hypothesis import given, strategies as st

from rainbowdom.graph import (
    Edge,
    Graph,
    Graph6Error,
    add_edge,
    cycle_graph,
    diameter,
    disjoint_union,
    double_star,
    emit_graph6,
    metrics,
    parse_graph6,
    path_graph,
    remove_edge,
    remove_vertex,
    remove_vertices,
    star_graph,
    subdivision,
)


def test_edge_normalizes_endpoints():
    e = Edge(5, 2)
    assert (e.u, e.v) == (2, 5)
    assert Edge(2, 5) == e
    with pytest.raises(ValueError):
        Edge(3, 3)


def test_basic_families():
    p = path_graph(4)
    assert p.n == 4 and p.edge_count() == 3 and p.is_tree()
    c = cycle_graph(5)
    assert c.edge_count() == 5 and not c.is_forest()
    s = star_graph(4)
    assert s.degree(0) == 4 and all(s.degree(v) == 1 for v in range(1, 5))
    ds = double_star(2, 3)
    assert ds.n == 7 and ds.is_tree()
    assert sorted((ds.degree(v) for v in range(ds.n)), reverse=True)[:2] == [4, 3]


def test_double_star_1_1_is_path():
    ds = double_star(1, 1)
    assert ds.n == 4 and ds.is_tree()
    assert metrics(ds).degree_sequence == [2, 2, 1, 1]


def test_remove_vertex_relabels():
    g = path_graph(5)
    h, relabel = remove_vertex(g, 2)
    assert h.n == 4
    assert relabel == {0: 0, 1: 1, 3: 2, 4: 3}
    assert h.has_edge(0, 1) and h.has_edge(2, 3) and not h.has_edge(1, 2)


def test_remove_vertices_and_edges():
    g = cycle_graph(6)
    h, _ = remove_vertices(g, [0, 3])
    assert h.n == 4 and h.edge_count() == 2
    g2 = remove_edge(g, Edge(0, 1))
    assert g2.is_tree()
    with pytest.raises(ValueError):
        remove_edge(g2, Edge(0, 1))
    g3 = add_edge(g2, 0, 1)
    assert g3 == g


def test_subdivision_and_union():
    s = subdivision(path_graph(3))
    assert s.n == 5 and s.is_tree() and diameter(s) == 4
    u = disjoint_union(path_graph(2), cycle_graph(3))
    assert u.n == 5 and len(u.components()) == 2


def test_metrics_on_cycle_and_tree():
    m = metrics(cycle_graph(5))
    assert m.diameter == 2 and m.girth == 5 and m.leaves == []
    m = metrics(path_graph(6))
    assert m.diameter == 5 and m.girth is None and m.leaves == [0, 5]
    m = metrics(disjoint_union(path_graph(2), path_graph(3)))
    assert m.diameter is None and m.component_diameters == [1, 2]


# -- graph6 -------------------------------------------------------------------

FROZEN_G6 = [
    (Graph(1), "@"),
    (Graph(2), "A?"),
    (path_graph(2), "A_"),
    (path_graph(3), "Bg"),
    (cycle_graph(5), "Dhc"),
]


@pytest.mark.parametrize("g,text", FROZEN_G6)
def test_graph6_frozen_values(g, text):
    assert emit_graph6(g) == text
    assert parse_graph6(text) == g


@pytest.mark.parametrize(
    "bad",
    [
        "",
        ">>graph6<<A?",         # headers not accepted
        "~??",                  # long form not supported
        "B" + chr(30),          # character below the alphabet
        "A" + chr(127),         # character above the alphabet
        "B",                    # missing data characters for n=3
        "A??",                  # too many data characters
        "A@",                   # nonzero padding bits for n=2
    ],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


@given(
    st.integers(min_value=0, max_value=20).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(
                    st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))
                ).filter(lambda p: p[0] != p[1]),
            ),
        )
    )
)
def test_graph6_round_trip(data):
    n, pairs = data
    g = Graph(n, pairs)
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_order_limit():
    emit_graph6(Graph(62))
    with pytest.raises(Graph6Error):
        emit_graph6(Graph(63))
