from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddind import generators as gen
from oddind.graphs import VertexSet, complement, from_edge_list, square
from oddind.independence import (
    NotClawFree,
    alpha,
    alpha_od,
    alpha_od_bounded,
    alpha_od_bruteforce,
    alpha_od_clawfree,
    alpha_square,
    is_independent,
    is_odd_independent,
    odd_independent_set_masks,
    odd_profile,
    pair_classification,
)


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1)) if pairs else 0
    return from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_verifier_examples():
    en = gen.empty(4)
    assert is_odd_independent(en, range(4))  # no outside vertex at all
    pg = gen.petersen()
    for v in range(10):
        assert is_odd_independent(pg, pg.neighbors(v))
    c4 = gen.cycle(4)
    assert is_independent(c4, [0, 2])
    assert not is_odd_independent(c4, [0, 2])  # the other two see count 2
    assert odd_profile(c4, [0, 2]) == [0, 2, 0, 2]
    assert odd_profile(c4, []) == [0, 0, 0, 0]


def test_pair_classification_path():
    p3 = gen.path(3)
    pc = pair_classification(p3)
    assert (0, 2) in pc.forbidden
    # the two ends are also a forcing pair for the middle vertex (vacuously)
    assert ((0, 2), 1) in pc.forcing


def test_pair_classification_star():
    pc = pair_classification(gen.star(4))
    assert not pc.forbidden and not pc.forcing
    # the three leaves form a valid OIS
    assert is_odd_independent(gen.star(4), [1, 2, 3])


def test_clawfree_every_distance2_pair_forbidden():
    g = gen.line_graph(gen.petersen())
    pc = pair_classification(g)
    for u in range(g.n):
        dist = g.bfs_levels(u)
        for v in range(u + 1, g.n):
            if dist[v] == 2:
                assert (u, v) in pc.forbidden


def test_alpha_examples():
    assert alpha(gen.petersen()).value == 4
    assert alpha_square(gen.cycle(6)).value == 2
    res = alpha(gen.kneser(6, 2))
    assert res.value == 5 and is_independent(gen.kneser(6, 2), res.witness)


def test_alpha_od_recorded_values():
    assert alpha_od(gen.path(7)).value == 3
    assert alpha_od(gen.cycle(8)).value == 2
    assert alpha_od(gen.petersen()).value == 3
    assert alpha_od(gen.kbox(2, 3)).value == 1
    assert alpha_od(gen.half_graph(4)).value == 2
    assert alpha_od(gen.complete_subdivision(5)).value == 7
    assert alpha_od(gen.hypercube(4)).value == 6


def test_solver_equals_bruteforce_small():
    from oddind.enumeration import all_graphs

    for n in range(1, 7):
        for g in all_graphs(n):
            want = alpha_od_bruteforce(g)
            got = alpha_od(g)
            assert got.exact and got.value == want.value
            assert is_odd_independent(g, got.witness)


def test_witness_is_always_verified():
    for build in (gen.petersen, lambda: gen.kneser(7, 2), lambda: gen.half_graph(5)):
        g = build()
        res = alpha_od(g)
        assert is_odd_independent(g, res.witness)
        assert len(res.witness) == res.value


def test_odd_regular_bipartite_shortcut():
    for d in (1, 3, 5):
        g = gen.complete_bipartite(d, d)
        res = alpha_od(g)
        assert res.value == d and res.method == "odd-regular-bipartite"
    for d in (3, 5):
        q = gen.hypercube(d)
        res = alpha_od(q)
        assert res.value == 2 ** (d - 1) and res.method == "odd-regular-bipartite"


def test_alpha_od_bounded():
    assert alpha_od_bounded(gen.empty(5), 5).value == 5
    # a triangle-free graph of diameter 4: its complement has optimum 1
    p5 = gen.path(5)
    res = alpha_od_bounded(complement(p5), 2)
    assert res.value == 1 and res.exact
    # diameter-3 complement pair case
    g = gen.trianglefree_diam("matching-deleted", 3, 3, 1)  # K_{3,3} - e
    res = alpha_od_bounded(complement(g), 2)
    assert res.value == 2 and res.exact
    # exactness flag drops when larger independent sets exist
    res = alpha_od_bounded(gen.empty(5), 2)
    assert res.value == 2 and not res.exact


def test_clawfree_fast_path():
    c9 = gen.cycle(9)
    res = alpha_od_clawfree(c9)
    assert res.value == 3 == alpha_od(c9).value == ceil((9 - 2) / 3)
    assert res.method == "claw-free-reduction"
    assert alpha_od_clawfree(gen.kbox(3, 3)).value == 1
    with pytest.raises(NotClawFree):
        alpha_od_clawfree(gen.star(4))
    lg = gen.line_graph(gen.petersen())
    assert alpha_od_clawfree(lg).value == alpha_od(lg).value


def test_timeout_returns_interval():
    res = alpha_od(gen.hypercube(6), budget=0.5)
    if not res.exact:
        assert res.lower <= res.upper
        assert res.lower >= 1
        assert res.note
    # tiny instances always finish
    assert alpha_od(gen.cycle(5), budget=0.5).exact


def test_components_are_additive():
    from oddind.graphs import disjoint_union, t_copies

    g = disjoint_union(gen.petersen(), gen.path(7))
    assert alpha_od(g).value == 3 + 3
    assert alpha_od(t_copies(gen.complete(3), 4)).value == 4


@given(graphs(max_n=8))
@settings(max_examples=80, deadline=None)
def test_solver_matches_oracle(g):
    want = alpha_od_bruteforce(g).value
    got = alpha_od(g)
    assert got.exact and got.value == want


@given(graphs(max_n=8, min_n=1))
@settings(max_examples=60, deadline=None)
def test_sandwich_and_pairs(g):
    aod = alpha_od_bruteforce(g).value
    assert alpha(square(g)).value <= aod <= alpha(g).value
    pc = pair_classification(g)
    banned = set(pc.forbidden) | {p for p, _ in pc.forcing}
    for mask in odd_independent_set_masks(g):
        for u, v in banned:
            assert not (mask >> u & 1 and mask >> v & 1)


def test_profile_types():
    g = gen.petersen()
    s = VertexSet.from_ids(10, [0])
    assert odd_profile(g, s) == odd_profile(g, [0])


def test_path_and_cycle_recursions():
    path_vals = {n: alpha_od(gen.path(n)).value for n in range(1, 16)}
    for n in range(4, 16):
        assert path_vals[n] == path_vals[n - 3] + 1
    for n in range(6, 16):
        assert alpha_od(gen.cycle(n)).value == 1 + path_vals[n - 5]


def test_feasible_combos_hit_target():
    cases = [(7, 4, "I"), (6, 1, "I"), (10, 3, "II"), (7, 7, "II"),
             (9, 3, "III"), (10, 5, "III"), (4, 2, "IV"), (8, 4, "IV"),
             (10, 8, "IV")]
    for n, k, case in cases:
        g = gen.feasible_combo(n, k, case)
        assert alpha(g).value == k, (n, k, case)
        res = alpha_od(g)
        assert res.exact and res.value == k, (n, k, case)
