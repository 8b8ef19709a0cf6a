import random
from pathlib import Path

import pytest

from spatialknots.constructors import build_theta, build_theta_n
from spatialknots.diagram import validate
from spatialknots.invariants import jones, kauffman_bracket
from spatialknots.knots import knot_diagram, unknot
from spatialknots.moves import (apply, canonical_key, enumerate_moves, isomorphic,
                                scramble, simplify)
from spatialknots.sgd import load, parse, serialize

DATA = Path(__file__).parent / "data"


def test_move_kinds_present():
    d = knot_diagram("4_1")
    kinds = {m.kind for m in enumerate_moves(d)}
    assert {"R1+", "R2+"} <= kinds
    assert not kinds & {"R1-", "R2-"}
    e = apply(d, next(m for m in enumerate_moves(d) if m.kind == "R1+"))
    assert "R1-" in {m.kind for m in enumerate_moves(e)}


@pytest.mark.parametrize("seed", range(5))
def test_moves_keep_validity_and_bracket(seed):
    rng = random.Random(seed)
    d = knot_diagram(rng.choice(["3_1", "4_1", "5_2"]))
    b0 = kauffman_bracket(d)
    for _ in range(4):
        moves = list(enumerate_moves(d, kinds=("R2+", "R2-", "R3")))
        d = apply(d, rng.choice(moves))
        assert validate(d).ok
        assert kauffman_bracket(d) == b0


def test_r1_changes_bracket_by_a_unit():
    d = knot_diagram("3_1")
    m = next(iter(enumerate_moves(d, kinds=("R1+",))))
    e = apply(d, m)
    assert len(e.crossings) == 4
    assert jones(e) == jones(d)


def test_v_slide_keeps_theta_type():
    d = build_theta("3_1", "4_1")
    vs = list(enumerate_moves(d, kinds=("V",)))
    for m in vs[:6]:
        e = apply(d, m)
        assert validate(e).ok
        assert len(e.crossings) == len(d.crossings) + m.delta


def test_r2_is_undone_by_r2_minus():
    d = knot_diagram("3_1")
    m = next(iter(enumerate_moves(d, kinds=("R2+",))))
    e = apply(d, m)
    back = [apply(e, r) for r in enumerate_moves(e, kinds=("R2-",))]
    assert any(isomorphic(b, d) for b in back)


def test_canonical_key_ignores_numbering():
    d = build_theta_n(2, "3_1", "4_1")
    text = serialize(d)
    # shift every half-edge id; the key must not notice
    shifted = []
    for line in text.splitlines():
        tag, *rest = line.split()
        if tag in ("X", "V"):
            rest = [rest[0]] + [str(int(t) + 1000) for t in rest[1:]]
        elif tag == "P":
            rest = [str(int(t) + 1000) for t in rest]
        shifted.append(" ".join([tag, *rest]))
    e = parse("\n".join(shifted) + "\n")
    assert canonical_key(e) == canonical_key(d)
    assert not isomorphic(knot_diagram("3_1"), knot_diagram("3_1*"))


def test_simplify_stored_unknot():
    d = load(DATA / "scrambled_unknot_12.sgd")
    assert len(d.crossings) == 12
    res = simplify(d, budget=100_000)
    assert res.crossings == 0
    assert len(res.replay().crossings) == 0


def test_simplify_keeps_trefoil():
    res = simplify(knot_diagram("3_1"), budget=3000)
    assert res.crossings == 3


@pytest.mark.parametrize("seed", range(3))
def test_scramble_then_simplify_theta(seed):
    d, trace = scramble(build_theta("unknot", "unknot"), 5, seed=seed)
    assert len(trace) == 5
    assert simplify(d, budget=50_000).crossings == 0


def test_scramble_is_seeded():
    a, _ = scramble(unknot(), 4, seed=11)
    b, _ = scramble(unknot(), 4, seed=11)
    assert serialize(a) == serialize(b)
