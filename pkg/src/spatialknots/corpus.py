"""Reproducible diagram collections for tests and demos."""

from __future__ import annotations

from itertools import product

from .constructors import (build_G, build_oplus, build_theta, build_theta_n,
                           connected_sum, double_diagram)
from .diagram import SpatialDiagram
from .knots import knot_diagram, unknot

__all__ = ["TABLE", "table_pairs", "constructor_corpus", "scrambled_unknots",
           "scrambled_knots"]

TABLE = ("3_1", "4_1", "5_1", "5_2")


def table_pairs() -> list[tuple[str, str]]:
    return list(product(TABLE, repeat=2))


def constructor_corpus(pairs=None, n_max: int = 2, k_max: int = 2) -> list[tuple[str, SpatialDiagram]]:
    """(tag, diagram) for every builder over the given knot pairs."""
    out = []
    for k1, k2 in pairs or table_pairs():
        out.append((f"sum {k1} {k2}", connected_sum(k1, k2)))
        out.append((f"theta {k1} {k2}", build_theta(k1, k2)))
        for n in range(1, n_max + 1):
            out.append((f"theta-n {n} {k1} {k2}", build_theta_n(n, k1, k2)))
            for k in range(1, k_max + 1):
                out.append((f"oplus {n} {k} {k1} {k2}", build_oplus(n, k, k1, k2)))
                for i in range(1, k + 1):
                    out.append((f"G {n} {k} {i} {k1} {k2}", build_G(n, k, i, k1, k2)))
        out.append((f"double 2 {k1} {k2}", double_diagram(connected_sum(k1, k2), 2)))
    return out


def scrambled_unknots(count: int = 20, steps: int = 8, seed: int = 0) -> list[SpatialDiagram]:
    """Crossing-free diagrams (unknot, θ, θ^2, ⊕^{1,1}) after random moves."""
    from .moves import scramble

    bases = [unknot(), build_theta("unknot", "unknot"), build_theta_n(2, "unknot", "unknot"),
             build_oplus(1, 1, "unknot", "unknot"), build_theta_n(3, "unknot", "unknot")]
    return [scramble(bases[j % len(bases)], steps, seed=seed + j)[0] for j in range(count)]


def scrambled_knots(count: int = 50, steps: int = 3, seed: int = 0) -> list[SpatialDiagram]:
    """Table knots and their sums pushed around by a few random moves."""
    from .moves import scramble

    names = list(TABLE) + [a + "*" for a in TABLE if a != "4_1"] + ["3_1#4_1", "3_1#3_1*"]
    out = []
    for j in range(count):
        name = names[j % len(names)]
        d = knot_diagram(name) if "#" not in name else connected_sum(*name.split("#"))
        out.append(scramble(d, steps, seed=seed + j)[0])
    return out
