from itertools import combinations
from fractions import Fraction

import pytest

from spatialknots.constructors import build_theta_n, connected_sum, double_diagram
from spatialknots.diagram import DiagramError, EdgeLabel
from spatialknots.gamma import (GammaGraph, check_triangle_hypothesis, extremal_enumeration,
                                extremal_table, find_bicoloured_triangle, gamma, lemma_bound)

X = [EdgeLabel("x", i) for i in (1, 2, 3)]
Z = [EdgeLabel("z", i) for i in (1, 2, 3)]


def _brute_max(n):
    """Plain scan over every labelled graph on n blue and n red vertices."""
    verts = list(range(2 * n))
    pairs = list(combinations(verts, 2))
    tris = [t for t in combinations(verts, 3) if 0 < sum(v < n for v in t) < 3]
    best = 0
    for mask in range(1 << len(pairs)):
        es = {p for k, p in enumerate(pairs) if mask >> k & 1}
        if len(es) <= best:
            continue
        if any({(a, b), (a, c), (b, c)} <= es for a, b, c in tris):
            continue
        best = len(es)
    return best


def test_theta_n_gamma_is_complete():
    g = gamma(build_theta_n(2, "3_1", "4_1"))
    assert len(g.vertices) == 4 and len(g.edges) == 6
    assert find_bicoloured_triangle(g) == (X[0], X[1], Z[0])


def test_doubled_gamma_has_no_triangle():
    g = gamma(double_diagram(connected_sum("3_1", "4_1"), 2))
    assert find_bicoloured_triangle(g) is None


def test_triangle_search():
    # x1, x2, z2 pairwise free of crossings, z1 crossing everything
    g = GammaGraph.from_edges(X[:2] + Z[:2], [(X[0], X[1]), (X[0], Z[1]), (X[1], Z[1])])
    assert find_bicoloured_triangle(g) == (X[0], X[1], Z[1])
    mono = GammaGraph.from_edges(X + Z, [(X[0], X[1]), (X[0], X[2]), (X[1], X[2])])
    assert find_bicoloured_triangle(mono) is None
    assert find_bicoloured_triangle(GammaGraph.from_edges(X + Z, [])) is None


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 9)])
def test_extremal_values(n, expected):
    res = extremal_enumeration(n)
    assert res.max_edges == expected == _brute_max(n)
    assert find_bicoloured_triangle(res.witness) is None
    assert len(res.witness.edges) == expected
    # two vertices never form a triangle, so n = 1 sits above the bound
    assert (res.max_edges <= res.bound) == (n >= 2)


def test_bound():
    assert lemma_bound(2) == 4
    assert lemma_bound(3) == Fraction(21, 2)


def test_extremal_limit():
    with pytest.raises(DiagramError):
        extremal_enumeration(5)


def test_table_header():
    assert extremal_table((1,)).splitlines()[0] == "n, max_edges, bound_3n2/2-n, witness_edge_list"


def test_triangle_hypothesis_report():
    rep = check_triangle_hypothesis(build_theta_n(3, "3_1", "4_1"), "3_1", "4_1")
    assert rep.status == "consistent"
    assert rep.triangle is not None
    d = double_diagram(connected_sum("3_1", "4_1"), 2)
    rep = check_triangle_hypothesis(d, "3_1", "4_1")
    # 28 crossings exceed the 14 of the hypothesis, so no conclusion is drawn
    assert rep.within_bound is False
    assert rep.status == "consistent"
