from spatialknots.polynomial import LaurentPoly as P


def test_arithmetic():
    a = P.parse("t + 1")
    assert a * a == P.parse("t^2 + 2*t + 1")
    assert a - a == 0
    assert (a ** 0) == 1


def test_format_parse_round_trip():
    for text in ["-t^-4 + t^-3 + t^-1", "t^-2 - t^-1 + 1 - t + t^2", "0", "3", "-2*t^5"]:
        assert P.parse(text).format() == text


def test_substitution():
    # A -> t^(-1/4) on A^-4 gives t
    assert P.parse("A^-4", "A").substitute_power(-1).rescale(4) == P.parse("t")
