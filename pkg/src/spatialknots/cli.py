"""Command line front end.

Exit status: 0 when every check passes, 1 when one fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import product
from pathlib import Path

from . import constructors as C
from .diagram import DiagramError, crossing_matrix, faces, validate
from .sgd import load, serialize

TABLE = ("3_1", "4_1", "5_1", "5_2")


class UsageError(Exception):
    pass


def _diagram(arg: str):
    """A .sgd file or a knot table name (sums joined by '#')."""
    if Path(arg).is_file():
        return load(arg)
    try:
        return C.resolve_spec(arg).diagram
    except (KeyError, DiagramError) as exc:
        raise UsageError(f"cannot read diagram {arg!r}: {exc}") from None


def _spec(arg: str | None, flag: str):
    if arg is None:
        raise UsageError(f"{flag} is required")
    try:
        return C.resolve_spec(arg)
    except (KeyError, DiagramError, OSError) as exc:
        raise UsageError(f"{flag} {arg}: {exc}") from None


def _need(value, flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_build(a) -> int:
    k1 = _spec(a.k1, "--k1")
    if a.what == "sum":
        d = C.connected_sum(k1, _spec(a.k2, "--k2"))
    else:
        k2 = _spec(a.k2, "--k2")
        if a.what == "theta":
            d = C.build_theta(k1, k2)
        elif a.what == "theta-n":
            d = C.build_theta_n(_need(a.n, "--n"), k1, k2)
        elif a.what == "double":
            d = C.double_diagram(C.connected_sum(k1, k2), _need(a.n, "--n"))
        elif a.what == "oplus":
            d = C.build_oplus(_need(a.n, "--n"), _need(a.k, "--k"), k1, k2)
        else:
            d = C.build_G(_need(a.n, "--n"), _need(a.k, "--k"), _need(a.i, "--i"), k1, k2)
    _emit(serialize(d), a.out)
    return 0


def cmd_analyze(a) -> int:
    d = _diagram(a.input)
    lines = []
    if a.what == "matrix":
        m = crossing_matrix(d)
        lines.append(f"crossings {len(d.crossings)}")
        for (p, q), v in m.nonzero().items():
            lines.append(f"{p} {q} {v}")
    elif a.what == "gamma":
        from .gamma import find_bicoloured_triangle, gamma
        g = gamma(d)
        tri = find_bicoloured_triangle(g)
        lines.append("vertices " + " ".join(map(str, g.vertices)))
        lines.append("edges " + (g.format() or "none"))
        lines.append("triangle " + ("none" if tri is None else ",".join(map(str, tri))))
    elif a.what == "faces":
        rep = validate(d)
        fs = faces(d)
        lines.append(f"faces {len(fs)} valid {rep.ok}")
        lines += [" ".join(map(str, f)) for f in fs]
        lines += [f"problem {p}" for p in rep.problems]
    else:
        from .gauss import find_partition, from_diagram
        code = from_diagram(d)
        part = find_partition(code)
        lines.append(code.format())
        lines.append("partition none" if part is None
                     else f"partition {part.start} {part.end}")
    _emit("\n".join(lines) + "\n", a.out)
    return 0


def cmd_verify(a) -> int:
    from . import verify as V

    if a.what == "all":
        n = a.n if a.n is not None else 2
        if a.k1 is None and a.k2 is None:
            pairs = list(product(TABLE, repeat=2))
        else:
            pairs = [(_spec(a.k1, "--k1"), _spec(a.k2, "--k2"))]
        tasks = [t for k1, k2 in pairs for t in V.verify_tasks(k1, k2, n, a.k)]
        reports = V.run_tasks(tasks, a.workers)
    else:
        k1, k2 = _spec(a.k1, "--k1"), _spec(a.k2, "--k2")
        if a.what == "eq1":
            d = _diagram(a.input) if a.input else C.build_theta(k1, k2)
            reports = [V.verify_eq1(d, k1, k2)]
        elif a.what == "ineq":
            d = _diagram(a.input) if a.input else C.build_theta(k1, k2)
            reports = [V.verify_ineq(d, k1, k2)]
        elif a.what == "theta-n":
            n = _need(a.n, "--n")
            d = _diagram(a.input) if a.input else C.build_theta_n(n, k1, k2)
            reports = [V.verify_theta_n(d, k1, k2, n)]
        elif a.what == "square":
            reports = [V.verify_square(k1, k2, _need(a.n, "--n"))]
        else:
            reports = [V.verify_oplus(_need(a.n, "--n"), _need(a.k, "--k"),
                                      _need(a.i, "--i"), k1, k2)]
    lines = [line for r in reports for line in r.lines()]
    failed = sum(r.verdict == "fail" for r in reports)
    lines.append(f"# {len(reports)} reports, {failed} failed")
    _emit("\n".join(lines) + "\n", a.out)
    return 1 if failed else 0


def cmd_simplify(a) -> int:
    from .moves import simplify
    d = _diagram(a.input)
    res = simplify(d, budget=a.budget, depth=a.depth)
    print(f"crossings {len(d.crossings)} -> {res.crossings} explored {res.explored} "
          f"exhausted {res.exhausted}", file=sys.stderr)
    print("moves " + " ".join(m.kind for m in res.trace), file=sys.stderr)
    _emit(serialize(res.diagram), a.out)
    return 0


def cmd_resolve(a) -> int:
    _emit(serialize(C.resolve_nodes(_diagram(a.input))), a.out)
    return 0


def cmd_identify(a) -> int:
    from .invariants import identify
    _emit(identify(_diagram(a.input)) + "\n", a.out)
    return 0


def cmd_extremal(a) -> int:
    from .gamma import extremal_enumeration, extremal_table
    n = _need(a.n, "--n")
    res = extremal_enumeration(n)
    text = extremal_table((n,)) + "\n"
    text += f"max={res.max_edges} method={res.method} graphs={res.graphs_checked}\n"
    _emit(text, a.out)
    return 0


def cmd_export_svg(a) -> int:
    from .svg import to_svg
    _emit(to_svg(_diagram(a.input)), a.out)
    return 0


def cmd_corpus(a) -> int:
    """Scrambled crossing-free diagrams for exercising the simplifier."""
    from .knots import unknot
    from .moves import scramble
    out = Path(_need(a.out, "-o"))
    out.mkdir(parents=True, exist_ok=True)
    count = a.n if a.n is not None else 20
    for j in range(count):
        d, _trace = scramble(unknot(), a.steps, seed=a.seed + j)
        (out / f"scrambled_{j:02d}.sgd").write_text(serialize(d), encoding="utf-8")
    print(f"wrote {count} diagrams to {out}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spatialknots",
                                description="Knot and theta-curve diagram toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, knots=True, nki=True):
        if knots:
            sp.add_argument("--k1", help="table name, sum like 3_1#4_1, or .sgd path")
            sp.add_argument("--k2")
        if nki:
            sp.add_argument("--n", type=int)
            sp.add_argument("--k", type=int)
            sp.add_argument("--i", type=int)
        sp.add_argument("-o", "--out", help="output file (default stdout)")

    sp = sub.add_parser("build", help="construct a diagram")
    sp.add_argument("what", choices=["sum", "theta", "theta-n", "double", "oplus", "G"])
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("analyze", help="crossing matrix, Γ, faces or Gauss code")
    sp.add_argument("what", choices=["matrix", "gamma", "faces", "gauss"])
    sp.add_argument("input")
    common(sp, knots=False, nki=False)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="crossing number inequalities")
    sp.add_argument("what", choices=["eq1", "ineq", "theta-n", "square", "oplus", "all"])
    sp.add_argument("--input", help="check this diagram instead of the constructed one")
    sp.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("simplify", help="search for a diagram with fewer crossings")
    sp.add_argument("input")
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--depth", type=int, default=0)
    common(sp, knots=False, nki=False)
    sp.set_defaults(func=cmd_simplify)

    for name, func, text in (("resolve", cmd_resolve, "resolve the two nodes of a θ^n diagram"),
                             ("identify", cmd_identify, "name a knot diagram"),
                             ("export-svg", cmd_export_svg, "draw a diagram")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("input")
        common(sp, knots=False, nki=False)
        sp.set_defaults(func=func)

    sp = sub.add_parser("extremal", help="largest triangle-free Γ for small n")
    sp.add_argument("--n", type=int)
    sp.add_argument("-o", "--out")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("corpus", help="write scrambled unknot diagrams")
    sp.add_argument("--n", type=int, help="number of diagrams (default 20)")
    sp.add_argument("--steps", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--out")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spatialknots: error: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, KeyError, ValueError, OSError) as exc:
        print(f"spatialknots: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
