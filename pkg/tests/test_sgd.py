import pytest

from spatialknots.constructors import build_G, build_oplus, build_theta, build_theta_n
from spatialknots.knots import knot_diagram
from spatialknots.sgd import parse, serialize


@pytest.mark.parametrize("make", [
    lambda: knot_diagram("5_2"),
    lambda: build_theta("3_1", "4_1"),
    lambda: build_theta_n(3, "3_1", "5_1"),
    lambda: build_oplus(2, 2, "3_1", "4_1"),
    lambda: build_G(2, 3, 2, "4_1", "5_2"),
])
def test_round_trip(make):
    d = make()
    text = serialize(d)
    assert parse(text) == d
    assert serialize(parse(text)) == text


def test_bad_line():
    with pytest.raises(ValueError):
        parse("X 0 1 2\n")
