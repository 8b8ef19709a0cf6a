"""Acceptance criteria, one test each.

Every test prints a single line
    ACCEPT <n> <PASS|FAIL> <title> (<seconds> s, limit <limit> s | no limit)
and then asserts both the property and the time limit.
"""

import subprocess
import sys
import time
from itertools import product

import pytest

from spatialknots.constructors import (build_oplus, build_theta, build_theta_n, connected_sum,
                                       cut_vertical, double_diagram, resolve_nodes)
from spatialknots.corpus import (constructor_corpus, scrambled_knots,
                                 scrambled_unknots, table_pairs)
from spatialknots.diagram import EdgeLabel, components, crossing_matrix, delete_edge, keep_edges
from spatialknots.gamma import extremal_enumeration, find_bicoloured_triangle, gamma, lemma_bound
from spatialknots.gauss import (GaussCode, brute_force_partitions, find_partition,
                                from_diagram)
from spatialknots.invariants import identify, jones, jones_of_name, kauffman_bracket
from spatialknots.knots import PRIME_NAMES, knot_diagram
from spatialknots.moves import apply, enumerate_moves, simplify
from spatialknots.sgd import parse, serialize
from spatialknots.verify import (verify_eq1, verify_ineq, verify_oplus, verify_square,
                                 verify_theta_n)


@pytest.fixture
def report(capsys):
    def emit(num, title, ok, elapsed, limit):
        ok_all = ok and (limit is None or elapsed < limit)
        lim = "no limit" if limit is None else f"limit {limit:g} s"
        with capsys.disabled():
            print(f"\nACCEPT {num} {'PASS' if ok_all else 'FAIL'} {title} "
                  f"({elapsed:.2f} s, {lim})")
        assert ok, title
        if limit is not None:
            assert elapsed < limit, f"{title} took {elapsed:.2f} s"
    return emit


def _norm(name):
    return "#".join(sorted(name.split("#")))


def _sum(*names):
    return _norm("#".join(n for n in names if n != "unknot"))


# ---------------------------------------------------------------------------


def test_1_construction_counts(report):
    t = time.perf_counter()
    theta = build_theta("3_1", "4_1")
    ok = len(theta.crossings) == 7 and crossing_matrix(theta).off_diagonal_total() == 0
    for n in range(1, 5):
        ok &= len(build_theta_n(n, "3_1", "4_1").crossings) == 7 * n
    base = connected_sum("3_1", "4_1")
    ok &= len(double_diagram(base, 2).crossings) == 28
    ok &= len(double_diagram(base, 3).crossings) == 63
    report(1, "construction counts", ok, time.perf_counter() - t, 1)


def test_2_inequality_suite(report):
    t = time.perf_counter()
    bad = []
    count = 0
    for k1, k2 in table_pairs():
        theta = build_theta(k1, k2)
        reps = [verify_eq1(theta, k1, k2), verify_ineq(theta, k1, k2)]
        for n in range(1, 4):
            reps.append(verify_theta_n(build_theta_n(n, k1, k2), k1, k2, n))
            reps.append(verify_square(k1, k2, n))
            for k in range(1, 4):
                reps += [verify_oplus(n, k, i, k1, k2) for i in range(1, k + 1)]
        count += len(reps)
        bad += [(k1, k2, r.line()) for r in reps if r.verdict == "fail"]
    assert count == 16 * 26
    report(2, f"inequality suite ({count} reports, {len(bad)} failed)", not bad,
           time.perf_counter() - t, 30)


def test_3_gamma_oracle(report):
    t = time.perf_counter()
    ok = True
    for k1, k2 in table_pairs():
        ok &= find_bicoloured_triangle(gamma(double_diagram(connected_sum(k1, k2), 2))) is None
        g = gamma(build_theta_n(2, k1, k2))
        ok &= len(g.vertices) == 4 and len(g.edges) == 6
    report(3, "gamma oracle", ok, time.perf_counter() - t, 1)


def test_4_extremal_enumeration(report):
    t = time.perf_counter()
    r2 = extremal_enumeration(2)
    ok = r2.max_edges == 4 == lemma_bound(2)
    ok &= find_bicoloured_triangle(r2.witness) is None
    r3 = extremal_enumeration(3)
    ok &= r3.graphs_checked == 2 ** 15 and r3.max_edges <= 10
    report(4, f"extremal enumeration (n=2: {r2.max_edges}, n=3: {r3.max_edges})", ok,
           time.perf_counter() - t, 10)


def _words(c):
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


def test_5_gauss_partition(report):
    t = time.perf_counter()
    ok = find_partition(from_diagram(knot_diagram("3_1"))) is None
    code = GaussCode.from_abs([1, 2, 1, 3, 2, 3])
    p = find_partition(code)
    ok &= p is not None
    if p is not None:
        a1, a2 = p.alpha1(code), p.alpha2(code)
        ok &= len(set(a1)) < len(a1) and len(set(a2)) < len(a2)
    checked = 0
    for c in range(1, 6):
        for word in _words(c):
            cuts = brute_force_partitions(word)
            q = find_partition(GaussCode.from_abs(word))
            ok &= (q is None) if not cuts else ((q.start, q.end) == min(cuts))
            checked += 1
    report(5, f"gauss partition ({checked} codes)", ok, time.perf_counter() - t, 10)


def test_6_resolution(report):
    t = time.perf_counter()
    ok = True
    for n in range(1, 5):
        r = resolve_nodes(build_theta_n(n, "3_1", "4_1"))
        ok &= len(components(r)) == 1
        if n <= 2:
            ok &= jones(r) == jones_of_name("3_1") ** n * jones_of_name("4_1") ** n
    report(6, "node resolution", ok, time.perf_counter() - t, 60)


def test_7_invariant_suite(report):
    import random

    t = time.perf_counter()
    ok = True
    rng = random.Random(7)
    corpus = scrambled_knots(50, steps=3, seed=100)
    for d in corpus:
        b0 = kauffman_bracket(d)
        for _ in range(2):
            moves = list(enumerate_moves(d, kinds=("R2+", "R2-", "R3")))
            d = apply(d, rng.choice(moves))
            ok &= kauffman_bracket(d) == b0
    for a, b in table_pairs():
        ok &= jones(connected_sum(a, b)) == jones_of_name(a) * jones_of_name(b)
    for name in PRIME_NAMES:
        ok &= identify(knot_diagram(name)) == name
    x1, y1, z1 = EdgeLabel("x", 1), EdgeLabel("y", 1), EdgeLabel("z", 1)
    checked = 0
    for a, b in table_pairs():
        theta = build_theta(a, b)
        for gone, want in ((x1, _sum(b)), (y1, _sum(a, b)), (z1, _sum(a))):
            ok &= _norm(identify(delete_edge(theta, gone))) == want
            checked += 1
        for n in (1, 2):
            d = build_theta_n(n, a, b)
            xs = [EdgeLabel("x", i + 1) for i in range(n)]
            zs = [EdgeLabel("z", i + 1) for i in range(n)]
            for e, f in product(xs, zs):
                ok &= _norm(identify(keep_edges(d, [e, f]))) == _sum(a, b)
                checked += 1
            if n == 2:
                ok &= _norm(identify(keep_edges(d, xs))) == _sum(a, a)
                ok &= _norm(identify(keep_edges(d, zs))) == _sum(b, b)
                checked += 2
        dd = double_diagram(connected_sum(a, b), 2)
        for i, j in product((1, 2), repeat=2):
            ok &= _norm(identify(keep_edges(dd, [EdgeLabel("x", i), EdgeLabel("z", j)]))) == _sum(a, b)
            checked += 1
    report(7, f"invariant suite ({checked} constituents)", ok, time.perf_counter() - t, 120)


def test_8_simplifier(report):
    t = time.perf_counter()
    corpus = scrambled_unknots(20, steps=8, seed=0)
    results = [simplify(d, budget=100_000) for d in corpus]
    ok = all(r.crossings == 0 for r in results)
    ok &= max(len(d.crossings) for d in corpus) > 0
    report(8, f"simplifier (max start {max(len(d.crossings) for d in corpus)} crossings)", ok,
           time.perf_counter() - t, 60)


def test_9_cut_reglue(report):
    t = time.perf_counter()
    ok = True
    for n in (1, 2):
        for k in (1, 2, 3):
            d = build_oplus(n, k, "3_1", "4_1")
            for i in range(1, k + 1):
                a, b = cut_vertical(d, i)
                ok &= len(a.crossings) + len(b.crossings) == len(d.crossings)
                ok &= len(a.crossings) == 7 * n * i
    report(9, "cut and reglue", ok, time.perf_counter() - t, 5)


def test_10_round_trip_and_exit_codes(report, tmp_path):
    t = time.perf_counter()
    diagrams = [d for _tag, d in constructor_corpus()]
    diagrams += scrambled_unknots(20) + scrambled_knots(50)
    ok = all(parse(serialize(d)) == d for d in diagrams)

    def run(*args):
        proc = subprocess.run([sys.executable, "-m", "spatialknots.cli", *args],
                              capture_output=True, text=True)
        return proc.returncode

    out = tmp_path / "t.sgd"
    ok &= run("build", "theta", "--k1", "3_1", "--k2", "4_1", "-o", str(out)) == 0
    ok &= run("verify", "all", "--k1", "3_1", "--k2", "4_1", "--n", "2") == 0
    wrong = tmp_path / "w.sgd"
    run("build", "theta", "--k1", "3_1", "--k2", "3_1", "-o", str(wrong))
    ok &= run("verify", "eq1", "--k1", "3_1", "--k2", "4_1", "--input", str(wrong)) == 1
    ok &= run("verify", "everything") == 2
    ok &= run("build", "oplus", "--k1", "3_1", "--k2", "4_1", "--n", "1") == 2
    report(10, f"round trip ({len(diagrams)} diagrams) and exit codes", ok,
           time.perf_counter() - t, None)
