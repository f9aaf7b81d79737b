from math import comb, inf

import pytest

from oddind import generators as gen
from oddind.enumeration import are_isomorphic
from oddind.graphs import BadParam, cartesian_product, metrics


def test_basic_families():
    assert gen.cycle(5).degree_sequence() == (2,) * 5
    assert metrics(gen.cycle(5)).girth == 5
    km = gen.complete_multipartite([3, 3, 3])
    assert km.n == 9 and all(km.degree(v) == 6 for v in range(9))
    s = gen.star(6)
    assert s.degree(0) == 5 and s.edge_count() == 5
    with pytest.raises(BadParam):
        gen.cycle(2)
    with pytest.raises(BadParam):
        gen.path(0)


def test_hypercube_labeling():
    q = gen.hypercube(4)
    assert q.labels[5] == "0101"
    for u in range(16):
        for v in range(u + 1, 16):
            assert q.has_edge(u, v) == ((u ^ v).bit_count() == 1)
    assert gen.hypercube(0).n == 1
    q3 = gen.hypercube(3)
    m = metrics(q3)
    assert m.is_bipartite and m.is_regular and m.max_degree == 3
    with pytest.raises(BadParam):
        gen.hypercube(13)


def test_kneser():
    pg = gen.kneser(5, 2)
    assert are_isomorphic(pg, gen.petersen())
    assert pg.labels[0] == "{0,1}"
    k62 = gen.kneser(6, 2)
    assert k62.n == 15 and all(k62.degree(v) == comb(4, 2) for v in range(15))
    # KG(2k, k) is a perfect matching
    for k in (2, 3):
        m = gen.kneser(2 * k, k)
        assert all(m.degree(v) == 1 for v in range(m.n))
    with pytest.raises(BadParam):
        gen.kneser(3, 2)


def test_petersen():
    g = gen.petersen()
    met = metrics(g)
    assert g.n == 10 and met.is_regular and met.max_degree == 3 and met.girth == 5


def test_hoffman_singleton_table():
    g = gen.hoffman_singleton()
    assert g.neighbors(0) == (1, 4, 13, 16, 26, 43, 49)
    # the +10 rotation is an automorphism: row of 10 is row of 0 shifted
    assert g.neighbors(10) == tuple(sorted((x + 10) % 50 for x in g.neighbors(0)))
    for v in range(50):
        shifted = {(x + 10) % 50 for x in g.neighbors(v)}
        assert set(g.neighbors((v + 10) % 50)) == shifted
    assert g.edge_count() == 175
    met = metrics(g)
    assert met.girth == 5 and met.diameter == 2 and met.max_degree == 7


def test_half_graph():
    g = gen.half_graph(3)
    assert g.degree(0) == 3  # u_1 sees every v_j
    assert g.degree(3) == 1  # v_1 sees only u_1
    for n in (1, 2, 4):
        h = gen.half_graph(n)
        assert h.edge_count() == n * (n + 1) // 2
        assert metrics(h).is_bipartite
    assert are_isomorphic(gen.half_graph(1), gen.complete(2))


def test_complete_subdivision():
    assert are_isomorphic(gen.complete_subdivision(2), gen.path(3))
    assert are_isomorphic(gen.complete_subdivision(3), gen.cycle(6))
    s4 = gen.complete_subdivision(4)
    assert s4.n == 10
    assert all(s4.degree(v) == 3 for v in range(4))
    assert all(s4.degree(v) == 2 for v in range(4, 10))
    assert gen.complete_subdivision(5).n == 15


def test_regular_tight():
    for t in (1, 2, 3, 5):
        g = gen.regular_tight(2, t)
        # connected 2-regular on 3t vertices is the 3t-cycle
        assert g.n == 3 * t and g.is_connected()
        assert all(g.degree(v) == 2 for v in range(g.n))
    g = gen.regular_tight(4, 2)
    assert g.n == 14 and all(g.degree(v) == 4 for v in range(14))
    gb = gen.regular_tight(4, 2, bipartite=True)
    assert metrics(gb).is_bipartite
    with pytest.raises(BadParam):
        gen.regular_tight(3, 2)
    with pytest.raises(BadParam):
        gen.regular_tight(4, 3, bipartite=True)


def test_feasible_combo_shapes():
    assert are_isomorphic(gen.feasible_combo(4, 2, "IV"), gen.path(4))
    g = gen.feasible_combo(9, 3, "III")
    assert g.n == 9 and all(g.degree(v) == 6 for v in range(9))
    g = gen.feasible_combo(10, 3, "II")
    assert g.is_connected()
    with pytest.raises(BadParam):
        gen.feasible_combo(10, 4, "II")
    with pytest.raises(BadParam):
        gen.feasible_combo(10, 9, "IV")


def test_trianglefree_diam():
    from oddind.bounds import _diameter
    from oddind.graphs import complement

    g = gen.trianglefree_diam("matching-deleted", 3, 2, 1)
    assert metrics(g).is_triangle_free
    assert _diameter(g) == 3 and _diameter(complement(g)) == 3
    g = gen.trianglefree_diam("subdivided-matching", 3, 2, 1)
    assert metrics(g).is_triangle_free
    assert _diameter(g) == 2 and _diameter(complement(g)) == 2
    g = gen.trianglefree_diam("box-k2", gen.cycle(5))
    assert metrics(g).is_triangle_free
    assert _diameter(g) == 3 and _diameter(complement(g)) == 2
    with pytest.raises(BadParam):
        gen.trianglefree_diam("box-k2", gen.complete(3))
    with pytest.raises(BadParam):
        gen.trianglefree_diam("matching-deleted", 3, 2, 2)


def test_line_graph():
    assert are_isomorphic(gen.line_graph(gen.complete(3)), gen.complete(3))
    assert are_isomorphic(gen.line_graph(gen.path(4)), gen.path(3))
    assert metrics(gen.line_graph(gen.petersen())).is_claw_free


def test_parse_family():
    assert gen.parse_family("kneser 5 2") == gen.kneser(5, 2)
    assert gen.parse_family("petersen") == gen.petersen()
    q6 = gen.parse_family("mu-product [hypercube 4] [hypercube 2]")
    assert q6 == cartesian_product(gen.hypercube(4), gen.hypercube(2))
    g = gen.parse_family("complement [cycle 5]")
    assert are_isomorphic(g, gen.cycle(5))
    g = gen.parse_family("trianglefree-diam box-k2 [cycle 5]")
    assert g.n == 10
    g = gen.parse_family("complete-multipartite 3 3 3")
    assert g.n == 9
    with pytest.raises(BadParam):
        gen.parse_family("kneser 5")
    with pytest.raises(BadParam):
        gen.parse_family("unknown-family 3")
    with pytest.raises(BadParam):
        gen.parse_family("mu-product [path 3] [path")
