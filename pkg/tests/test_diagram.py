import pytest

from spatialknots.constructors import build_theta
from spatialknots.diagram import (Builder, DiagramError, EdgeLabel, Family,
                                  L, connecting_arc, crossing_matrix, delete_edge,
                                  faces, keep_edges, mirror, split_along, validate)
from spatialknots.knots import knot_diagram, unknot


def test_face_counts_match_euler():
    # V - E + F = 2 with V = crossings, E = 2 V for a knot diagram
    for name, f in [("3_1", 5), ("4_1", 6), ("5_1", 7), ("5_2", 7)]:
        d = knot_diagram(name)
        assert len(faces(d)) == f
        assert validate(d).ok


def test_unknot_marker():
    d = unknot()
    assert not d.crossings
    assert len(faces(d)) == 2


def test_nonplanar_rotation_is_rejected():
    b = Builder(Family("knot"))
    hs = b.new_half_edges(4)
    b.add_crossing(hs)
    # crossing slots joined as 0-2 and 1-3 cannot be drawn in the plane
    b.connect(hs[0], hs[2], L("x1"))
    b.connect(hs[1], hs[3], L("x1"))
    rep = validate(b.freeze())
    assert not rep.ok


def test_theta_crossing_matrix():
    d = build_theta("3_1", "4_1")
    m = crossing_matrix(d)
    assert (m["x1", "x1"], m["y1", "y1"], m["z1", "z1"]) == (3, 0, 4)
    assert m.off_diagonal_total() == 0
    assert m.total == 7


def test_delete_and_keep():
    d = build_theta("3_1", "4_1")
    k = delete_edge(d, L("y1"))
    assert len(k.crossings) == 7
    assert set(k.edge_labels) <= {L("x1"), L("z1")}
    assert len(keep_edges(d, [L("x1"), L("y1")]).crossings) == 3


def test_mirror_keeps_counts():
    d = knot_diagram("5_2")
    assert len(mirror(d).crossings) == 5
    assert validate(mirror(d)).ok


def test_connecting_arc_splits_theta():
    d = build_theta("3_1", "4_1")
    gamma = connecting_arc(d)
    parts = split_along(d, gamma)
    assert [len(p.crossings) for p in parts] == [3, 0, 4]
    assert all(validate(p).ok for p in parts)


def test_connecting_arc_needs_disjoint_edges():
    from spatialknots.moves import apply, enumerate_moves
    d = build_theta("unknot", "unknot")
    for m in enumerate_moves(d, kinds=("R2+",)):
        e = apply(d, m)
        if crossing_matrix(e).off_diagonal_total():
            break
    with pytest.raises(DiagramError):
        connecting_arc(e)


def test_connecting_arc_on_theta_n():
    from spatialknots.constructors import build_theta_n
    d = build_theta_n(2, "3_1", "4_1")
    parts = split_along(d, connecting_arc(d))
    assert sorted(len(p.crossings) for p in parts) == [3, 3, 4, 4]


def test_label_parse():
    assert EdgeLabel.parse("z12") == EdgeLabel("z", 12)
    with pytest.raises(ValueError):
        EdgeLabel.parse("q1")
