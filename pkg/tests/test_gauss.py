import pytest

from spatialknots.constructors import connected_sum
from spatialknots.gauss import (GaussCode, brute_force_partitions, crossing_signs,
                                find_partition, from_diagram, is_double_run, traverse)
from spatialknots.invariants import writhe
from spatialknots.knots import knot_diagram


def _words(c):
    """Double-occurrence words on 1..c, labels numbered by first appearance."""
    def grow(word, counts, nxt):
        if len(word) == 2 * c:
            yield tuple(word)
            return
        for lab in range(1, nxt):
            if counts[lab] == 1:
                counts[lab] = 2
                yield from grow(word + [lab], counts, nxt)
                counts[lab] = 1
        if nxt <= c:
            counts[nxt] = 1
            yield from grow(word + [nxt], counts, nxt + 1)
            del counts[nxt]
    yield from grow([], {}, 1)


def test_trefoil_has_no_partition():
    code = from_diagram(knot_diagram("3_1"))
    assert code.abs_sequence == (1, 2, 3, 1, 2, 3)
    assert find_partition(code) is None
    assert is_double_run(code)


def test_partition_of_121323():
    code = GaussCode.from_abs([1, 2, 1, 3, 2, 3])
    p = find_partition(code)
    assert p is not None
    a1, a2 = p.alpha1(code), p.alpha2(code)
    assert len(set(a1)) < len(a1) and len(set(a2)) < len(a2)


@pytest.mark.parametrize("c", [1, 2, 3, 4, 5])
def test_agrees_with_brute_force(c):
    for word in _words(c):
        code = GaussCode.from_abs(word)
        cuts = brute_force_partitions(word)
        p = find_partition(code)
        if cuts:
            assert (p.start, p.end) == min(cuts)
        else:
            assert p is None
        # no partition exactly when the word is a doubled run
        assert (p is None) == is_double_run(code)


def test_connected_sum_is_not_a_double_run():
    code = from_diagram(connected_sum("3_1", "4_1"))
    assert not is_double_run(code)
    assert find_partition(code) is not None


def test_signs_sum_to_writhe():
    d = knot_diagram("5_2")
    assert sum(crossing_signs(d).values()) == writhe(d) == -5


def test_every_crossing_visited_twice():
    d = knot_diagram("4_1")
    visits = traverse(d)
    assert len(visits) == 8
    assert sorted(v.over for v in visits) == [False] * 4 + [True] * 4


def test_format_parse():
    code = from_diagram(knot_diagram("4_1"))
    assert GaussCode.parse(code.format()) == code

