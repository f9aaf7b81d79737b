"""Full 8-vertex sweep of the order relations between the parameters."""

import pytest

from oddind.coloring import chi_so_exact, chi_square
from oddind.enumeration import all_graphs
from oddind.graphs import square
from oddind.independence import alpha, alpha_od


@pytest.mark.slow
def test_sandwich_and_chain_on_all_8_vertex_graphs():
    sandwich_bad = []
    chain_bad = []
    for g in all_graphs(8):
        sq = square(g)
        a = alpha(g).value
        asq = alpha(sq).value
        aod = alpha_od(g)
        assert aod.exact
        if not asq <= aod.value <= a:
            sandwich_bad.append(g)
        cso = chi_so_exact(g).value
        csq = chi_square(g).value
        dsq = max(sq.degree(v) for v in range(8))
        delta = max(g.degree(v) for v in range(8))
        if not cso <= csq <= dsq + 1 <= delta * delta + 1:
            chain_bad.append(g)
    assert not sandwich_bad
    assert not chain_bad
