import pytest

from spatialknots.constructors import (build_G, build_oplus, build_theta, build_theta_n,
                                       check_omega_membership, connected_sum, cut_vertical,
                                       recursion_parameter, resolve_nodes,
                                       theta_connected_sum, vertical_labels)
from spatialknots.diagram import (DiagramError, L, components, crossing_matrix,
                                  delete_edge, validate)
from spatialknots.invariants import identify, jones, jones_of_name
from spatialknots.knots import unknot
from spatialknots.moves import apply, enumerate_moves, simplify


def test_connected_sum_counts():
    assert len(connected_sum("3_1", "4_1").crossings) == 7
    assert len(connected_sum("5_2", unknot()).crossings) == 5


def test_theta_delete_y_gives_sum():
    d = build_theta("3_1", "4_1")
    assert identify(delete_edge(d, L("y1"))) == "3_1#4_1"
    assert len(build_theta("unknot", "unknot").crossings) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_theta_n_counts(n):
    d = build_theta_n(n, "3_1", "4_1")
    assert len(d.crossings) == 7 * n
    assert crossing_matrix(d).off_diagonal_total() == 0
    assert [v.valence for v in d.nodes] == [2 * n, 2 * n]


def test_theta_n_alternates_colours_at_nodes():
    d = build_theta_n(3, "3_1", "4_1")
    for v in d.nodes:
        fams = [d.label_of[h].family for h in v.rotation]
        assert all(a != b for a, b in zip(fams, fams[1:] + fams[:1]))


def test_resolve_theta_1_is_sum():
    r = resolve_nodes(build_theta_n(1, "3_1", "4_1"))
    assert len(r.crossings) == 7
    assert identify(r) == "3_1#4_1"


def test_resolve_theta_2_jones():
    r = resolve_nodes(build_theta_n(2, "3_1", "4_1"))
    assert len(components(r)) == 1
    assert jones(r) == jones_of_name("3_1") ** 2 * jones_of_name("4_1") ** 2


def test_resolve_planar_is_unknot():
    r = resolve_nodes(build_theta_n(3, "unknot", "unknot"))
    assert simplify(r, budget=5000).crossings == 0


def test_resolve_needs_equal_valences():
    d = build_oplus(1, 1, "3_1", "4_1")
    with pytest.raises(DiagramError):
        resolve_nodes(d)


def test_theta_connected_sum_matrix():
    s = theta_connected_sum(build_theta("3_1", "unknot"), build_theta("unknot", "4_1"))
    assert crossing_matrix(s) == crossing_matrix(build_theta("3_1", "4_1"))
    assert validate(s).ok


def test_theta_connected_sum_with_planar():
    a = build_theta("5_2", "3_1")
    s = theta_connected_sum(a, build_theta("unknot", "unknot"))
    assert len(s.crossings) == len(a.crossings)


def test_theta_connected_sum_degree_mismatch():
    with pytest.raises(DiagramError):
        theta_connected_sum(build_theta_n(2, "3_1", "4_1"), build_theta_n(3, "3_1", "4_1"))


def test_oplus_and_G_counts():
    assert len(build_oplus(1, 1, "3_1", "4_1").crossings) == 14
    for n, k in [(1, 2), (2, 2), (2, 3)]:
        d = build_oplus(n, k, "3_1", "4_1")
        assert len(d.crossings) == 7 * n * (k + 1)
        g = build_G(n, k, 1, "3_1", "4_1")
        assert len(g.crossings) == len(d.crossings)
        assert not set(vertical_labels(n, 1)) & set(g.edge_labels)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 3), (2, 2), (2, 3)])
def test_cut_vertical_additive(n, k):
    d = build_oplus(n, k, "3_1", "4_1")
    for i in range(1, k + 1):
        a, b = cut_vertical(d, i)
        assert len(a.crossings) == 7 * n * i
        assert len(b.crossings) == 7 * n * (k + 1 - i)
        assert validate(a).ok and validate(b).ok


def test_cut_vertical_needs_free_edge():
    d = build_oplus(1, 1, "unknot", "unknot")
    h = [m for m in enumerate_moves(d, kinds=("R2+",))]
    # put a clasp between the vertical edge and a horizontal one
    for m in h:
        e = apply(d, m)
        if crossing_matrix(e).row_sum(L("h1")):
            break
    with pytest.raises(DiagramError):
        cut_vertical(e, 1)


def test_recursion_parameter():
    assert recursion_parameter(5, 2) == 2
    assert recursion_parameter(5, 4) == 2
    with pytest.raises(DiagramError):
        recursion_parameter(5, 3)


def test_omega_membership():
    assert check_omega_membership(build_theta_n(2, "3_1", "4_1"), "3_1", "4_1").verdict == "member"
    rep = check_omega_membership(build_theta_n(2, "unknot", "unknot"), "3_1", "4_1")
    assert rep.verdict == "non-member"
