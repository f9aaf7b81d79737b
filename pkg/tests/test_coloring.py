import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddind import generators as gen
from oddind.coloring import (
    AlphaTooLarge,
    Coloring,
    chi_so_alpha2,
    chi_so_exact,
    chi_so_upper_from_partition,
    chi_square,
    chromatic_number,
    cube_chi_so,
    is_proper_coloring,
    is_strong_odd_coloring,
)
from oddind.graphs import complement, from_edge_list, square, t_copies
from oddind.independence import alpha_od_bruteforce, odd_independent_set_masks


def brute_chromatic(g, strong_odd=False) -> int:
    """Oracle: try every assignment with k colors, smallest k first."""
    from itertools import product

    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if len(set(colors)) != k:
                continue
            if strong_odd:
                if is_strong_odd_coloring(g, colors):
                    return k
            elif is_proper_coloring(g, colors):
                return k
    raise AssertionError


def test_verifier_examples():
    k33 = gen.complete_bipartite(3, 3)
    assert is_strong_odd_coloring(k33, [0, 0, 0, 1, 1, 1])
    assert not is_strong_odd_coloring(gen.cycle(4), [0, 1, 0, 1])
    # a partition into odd independent classes is always strong odd
    g = gen.petersen()
    coloring = [0] * 10
    cls = list(g.neighbors(0))
    nxt = 1
    for v in range(10):
        if v in cls:
            continue
        coloring[v] = nxt
        nxt += 1
    assert is_strong_odd_coloring(g, coloring)


def test_coloring_type():
    c = Coloring([0, 2, 0])
    assert c.num_colors == 2
    assert c.classes() == [0b101, 0b010]
    with pytest.raises(ValueError):
        Coloring([-1])


def test_chromatic_number():
    assert chromatic_number(gen.complete(4)).value == 4
    assert chromatic_number(gen.cycle(5)).value == 3
    assert chromatic_number(gen.complete_bipartite(3, 4)).value == 2
    for g in (gen.path(4), gen.cycle(5), gen.complete(4), gen.star(5)):
        assert chromatic_number(g).value == brute_chromatic(g)


def test_chi_square():
    assert chi_square(gen.petersen()).value == 10
    assert chi_square(gen.path(4)).value == 3


def test_chi_so_recorded_values():
    assert chi_so_exact(gen.cycle(5)).value == 5
    assert chi_so_exact(gen.petersen()).value == 6
    assert chi_so_exact(gen.complete_subdivision(4)).value == 5
    assert chi_so_exact(gen.half_graph(3)).value == 4
    assert chi_so_exact(gen.path(5)).value == 3
    assert chi_so_exact(gen.hypercube(2)).value == 4
    assert chi_so_exact(gen.empty(6)).value == 1
    assert chi_so_exact(gen.complete(6)).value == 6


def test_chi_so_witnesses_verify():
    for g in (gen.cycle(7), gen.petersen(), gen.half_graph(4),
              gen.complete_subdivision(4), t_copies(gen.complete(3), 2)):
        res = chi_so_exact(g)
        assert res.exact
        assert is_strong_odd_coloring(g, res.witness)
        assert res.witness.num_colors == res.value


def test_chi_so_exact_vs_bruteforce_small():
    from oddind.enumeration import all_graphs

    for n in range(1, 6):
        for g in all_graphs(n):
            assert chi_so_exact(g).value == brute_chromatic(g, strong_odd=True)


def test_alpha2_examples():
    assert chi_so_alpha2(gen.complete(5)).value == 5
    g = t_copies(gen.complete(3), 2)
    assert chi_so_alpha2(g).value == 3 == chi_so_exact(g).value
    with pytest.raises(AlphaTooLarge):
        chi_so_alpha2(gen.empty(3))
    with pytest.raises(AlphaTooLarge):
        chi_so_alpha2(gen.cycle(6))


def test_alpha2_equals_exact_on_small_cotrianglefree():
    from oddind.enumeration import triangle_free_upto

    for tf in triangle_free_upto(7):
        g = complement(tf)
        assert chi_so_alpha2(g).value == chi_so_exact(g).value


def test_upper_from_partition():
    g = gen.petersen()
    k, coloring = chi_so_upper_from_partition(g)
    assert is_strong_odd_coloring(g, coloring)
    assert k >= chi_so_exact(g).value
    # supplying explicit disjoint classes tightens the bound
    hs = gen.hoffman_singleton()
    from oddind.constructions import hs_rotation_classes

    k, coloring = chi_so_upper_from_partition(hs, hs_rotation_classes())
    assert k == 20
    assert is_strong_odd_coloring(hs, coloring)
    with pytest.raises(ValueError):
        chi_so_upper_from_partition(gen.cycle(4), [[0, 2]])  # not an OIS


def test_cube_chi_so():
    for d in range(1, 6):
        value, coloring = cube_chi_so(d)
        assert value == (2 if d % 2 else 4)
        assert is_strong_odd_coloring(gen.hypercube(d), coloring)
    assert cube_chi_so(2)[0] == chi_so_exact(gen.hypercube(2)).value


def test_clawfree_coloring_equality_small():
    from oddind.enumeration import graphs_upto
    from oddind.graphs import metrics

    for g in graphs_upto(6):
        if metrics(g).is_claw_free:
            assert chi_so_exact(g).value == chi_square(g).value


def test_quotient_relation_on_samples():
    for g in (gen.petersen(), gen.cycle(7), gen.half_graph(3)):
        aod = alpha_od_bruteforce(g).value
        cso = chi_so_exact(g).value
        assert aod * cso >= g.n


@given(st.integers(1, 7), st.data())
@settings(max_examples=60, deadline=None)
def test_chi_so_random_matches_oracle(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = data.draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    g = from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
    res = chi_so_exact(g)
    assert res.exact
    assert is_strong_odd_coloring(g, res.witness)
    # every color class of the witness is an odd independent set
    classes = res.witness.classes()
    ois = set(odd_independent_set_masks(g))
    assert all(c in ois for c in classes)
    assert res.value == brute_chromatic(g, strong_odd=True)
