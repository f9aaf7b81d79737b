from fractions import Fraction
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddind import generators as gen
from oddind.graphs import (
    BadParam,
    Graph,
    IndexOutOfRange,
    SelfLoop,
    VertexSet,
    cartesian_product,
    complement,
    disjoint_union,
    from_edge_list,
    join,
    metrics,
    square,
    subdivide_all_edges,
    t_copies,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1)) if pairs else 0
    return from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_from_edge_list_basics():
    k1 = from_edge_list(1, [])
    assert k1.n == 1 and k1.edge_count() == 0
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert sorted(p3.degree(v) for v in range(3)) == [1, 1, 2]
    assert p3.degree(1) == 2
    dup = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert dup.edge_count() == 1


def test_from_edge_list_errors():
    with pytest.raises(IndexOutOfRange):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(SelfLoop):
        from_edge_list(2, [(1, 1)])


def test_vertex_set():
    s = VertexSet.from_ids(6, [0, 3, 5])
    assert len(s) == 3 and 3 in s and 1 not in s
    assert s.ids() == (0, 3, 5)
    with pytest.raises(IndexOutOfRange):
        VertexSet.from_ids(3, [3])


def test_complement_examples():
    assert complement(gen.complete(5)).edge_count() == 0
    c5 = gen.cycle(5)
    cc = complement(c5)
    assert cc.degree_sequence() == c5.degree_sequence()  # self-complementary
    from oddind.enumeration import are_isomorphic

    assert are_isomorphic(cc, c5)


def test_square_by_distance_oracle():
    # oracle: all-pairs BFS distances, then distance <= 2
    for g in (gen.path(5), gen.petersen(), gen.kbox(3, 4)):
        sq = square(g)
        for v in range(g.n):
            dist = g.bfs_levels(v)
            for u in range(g.n):
                if u != v:
                    assert sq.has_edge(u, v) == (0 < dist[u] <= 2 if dist[u] != -1 else False)
    assert square(gen.petersen()).edge_count() == 45  # complete


def test_square_p5_index_rule():
    sq = square(gen.path(5))
    for i in range(5):
        for j in range(i + 1, 5):
            assert sq.has_edge(i, j) == (j - i <= 2)


def test_cartesian_product_shape():
    q3 = cartesian_product(gen.hypercube(2), gen.complete(2))
    from oddind.enumeration import are_isomorphic

    assert are_isomorphic(q3, gen.hypercube(3))
    k33 = cartesian_product(gen.complete(3), gen.complete(3))
    assert k33.n == 9 and all(k33.degree(v) == 4 for v in range(9))


def test_join_and_union_and_copies():
    g = t_copies(gen.complete(2), 4)
    assert g.n == 8 and g.edge_count() == 4
    split = join(gen.complete(3), gen.empty(2))
    assert split.n == 5 and split.edge_count() == 3 + 6
    u = disjoint_union(gen.cycle(3), gen.cycle(4))
    assert u.n == 7 and u.edge_count() == 7 and not u.is_connected()


def test_subdivision_counts():
    s = subdivide_all_edges(gen.complete(4))
    assert s.n == 10
    assert sorted(s.degree(v) for v in range(s.n)) == [2] * 6 + [3] * 4


def test_metrics_named():
    m = metrics(gen.petersen())
    assert (m.girth, m.diameter, m.is_regular, m.max_degree) == (5, 2, True, 3)
    m = metrics(gen.hoffman_singleton())
    assert (m.girth, m.diameter, m.max_degree, m.min_degree) == (5, 2, 7, 7)
    m = metrics(gen.empty(3))
    assert m.girth == inf and m.diameter == inf
    m = metrics(gen.complete_bipartite(2, 3))
    assert m.is_bipartite and m.girth == 4 and m.diameter == 2
    a, b = m.bipartition
    assert len(a) + len(b) == 5


def test_claw_detection():
    assert not metrics(gen.star(4)).is_claw_free
    assert metrics(gen.kbox(3, 3)).is_claw_free
    assert metrics(gen.line_graph(gen.petersen())).is_claw_free
    assert not metrics(gen.petersen()).is_claw_free


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_complement_involution(g):
    assert complement(complement(g)) == g
    for v in range(g.n):
        assert complement(g).degree(v) == g.n - 1 - g.degree(v)


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_square_contains_graph(g):
    sq = square(g)
    for u, v in g.edges():
        assert sq.has_edge(u, v)


@given(graphs(max_n=5), graphs(max_n=5))
@settings(max_examples=60, deadline=None)
def test_product_degree_law(g, h):
    prod = cartesian_product(g, h)
    for u in range(g.n):
        for w in range(h.n):
            assert prod.degree(u * h.n + w) == g.degree(u) + h.degree(w)


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_metrics_consistency(g):
    m = metrics(g)
    # a graph is a forest iff it has no cycle iff girth is infinite
    comps = len(g.component_masks())
    is_forest = g.edge_count() == g.n - comps
    assert (m.girth == inf) == is_forest
    assert (m.diameter == inf) == (comps > 1 and g.n > 1)
    if m.is_bipartite:
        a, b = m.bipartition
        assert a.mask | b.mask == g.full_mask and a.mask & b.mask == 0
        for u, v in g.edges():
            assert (u in a) != (v in a)


def test_rejects_oversized():
    with pytest.raises(Exception):
        from_edge_list(5000, [])


def test_induced_subgraph():
    g = gen.cycle(6)
    sub, keep = g.induced(0b000111)
    assert keep == (0, 1, 2) and sub.edge_count() == 2
