from itertools import product

import pytest

from spatialknots.constructors import connected_sum
from spatialknots.invariants import (bracket_state_sum, crossing_number, identify,
                                     jones, kauffman_bracket, writhe)
from spatialknots.knots import PRIME_NAMES, knot_diagram, unknot
from spatialknots.moves import apply, enumerate_moves, scramble
from spatialknots.polynomial import LaurentPoly as P

# values as listed in the Knot Atlas
ATLAS = {
    "3_1": "-t^-4 + t^-3 + t^-1",
    "4_1": "t^-2 - t^-1 + 1 - t + t^2",
    "5_1": "-t^-7 + t^-6 - t^-5 + t^-4 + t^-2",
    "5_2": "-t^-6 + t^-5 - t^-4 + 2*t^-3 - t^-2 + t^-1",
}


def _flip(p):
    return P({-e: c for e, c in p.terms.items()})


@pytest.mark.parametrize("name", sorted(ATLAS))
def test_jones_matches_table(name):
    assert jones(knot_diagram(name)) == P.parse(ATLAS[name])


@pytest.mark.parametrize("name", sorted(ATLAS))
def test_mirror_inverts_t(name):
    assert jones(knot_diagram(name + "*")) == _flip(P.parse(ATLAS[name]))


def test_kinks():
    for m in enumerate_moves(unknot(), kinds=("R1+",)):
        k = apply(unknot(), m)
        b = kauffman_bracket(k)
        assert b in (P.parse("-A^3", "A"), P.parse("-A^-3", "A"))
        assert jones(k) == 1


def test_three_kinks_still_unknot():
    d = unknot()
    for _ in range(3):
        d = apply(d, next(iter(enumerate_moves(d, kinds=("R1+",)))))
    assert len(d.crossings) == 3
    assert jones(d) == 1


@pytest.mark.parametrize("seed", range(6))
def test_bracket_agrees_with_state_sum(seed):
    d, _ = scramble(knot_diagram(PRIME_NAMES[seed % len(PRIME_NAMES)]), 3, seed=seed)
    assert kauffman_bracket(d) == bracket_state_sum(d)


def test_writhe_of_trefoil():
    assert writhe(knot_diagram("3_1")) == -3
    assert writhe(knot_diagram("3_1*")) == 3


@pytest.mark.parametrize("a,b", list(product(["3_1", "4_1", "5_1", "5_2"], repeat=2)))
def test_jones_multiplicative(a, b):
    s = connected_sum(a, b)
    assert jones(s) == jones(knot_diagram(a)) * jones(knot_diagram(b))
    assert len(s.crossings) == crossing_number(a) + crossing_number(b)


def test_identify():
    for name in PRIME_NAMES:
        assert identify(knot_diagram(name)) == name
    assert identify(unknot()) == "unknot"
    assert identify(connected_sum("3_1", "4_1")) == "3_1#4_1"


def test_crossing_number_table():
    assert crossing_number("5_2*") == 5
    assert crossing_number("3_1#4_1#5_1") == 12
    assert crossing_number("unknot") == 0
    assert crossing_number("6_1") is None
