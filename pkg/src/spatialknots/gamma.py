"""Non-crossing graph of a θ^n diagram and bicoloured triangles.

Γ has one vertex per edge of the diagram (x edges blue, z edges red) and
joins two vertices when the corresponding edges never cross each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .diagram import DiagramError, EdgeLabel, SpatialDiagram, crossing_matrix

__all__ = [
    "GammaGraph",
    "gamma",
    "find_bicoloured_triangle",
    "ExtremalResult",
    "extremal_enumeration",
    "extremal_table",
    "lemma_bound",
    "TriangleReport",
    "check_triangle_hypothesis",
]


@dataclass(frozen=True)
class GammaGraph:
    vertices: tuple[EdgeLabel, ...]
    edges: frozenset[tuple[EdgeLabel, EdgeLabel]]

    def colour(self, v: EdgeLabel) -> str:
        return "blue" if v.family == "x" else "red"

    def adjacent(self, a: EdgeLabel, b: EdgeLabel) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    @classmethod
    def from_edges(cls, vertices, edges) -> "GammaGraph":
        vs = tuple(sorted(vertices))
        es = frozenset((min(a, b), max(a, b)) for a, b in edges)
        return cls(vs, es)

    def format(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in sorted(self.edges))


def gamma(d: SpatialDiagram) -> GammaGraph:
    labels = [e for e in d.edge_labels if e.family in ("x", "z")]
    if not labels:
        raise DiagramError("Γ needs x and z edges")
    m = crossing_matrix(d)
    edges = [(a, b) for a, b in combinations(sorted(labels), 2) if m[a, b] == 0]
    return GammaGraph.from_edges(labels, edges)


def find_bicoloured_triangle(g: GammaGraph):
    """Lexicographically first triangle using both colours, or None."""
    for a, b, c in combinations(g.vertices, 3):
        if len({a.family, b.family, c.family}) < 2:
            continue
        if g.adjacent(a, b) and g.adjacent(a, c) and g.adjacent(b, c):
            return a, b, c
    return None


# ---------------------------------------------------------------------------
# extremal enumeration


def lemma_bound(n: int) -> Fraction:
    return Fraction(3, 2) * n * n - n


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    max_edges: int
    witness: GammaGraph
    method: str
    graphs_checked: int

    @property
    def bound(self) -> Fraction:
        return lemma_bound(self.n)

    def row(self) -> str:
        b = self.bound
        bs = str(b.numerator) if b.denominator == 1 else f"{float(b):g}"
        return f"{self.n}, {self.max_edges}, {bs}, {self.witness.format()}"


def _setup(n: int):
    verts = [EdgeLabel("x", i + 1) for i in range(n)] + [EdgeLabel("z", i + 1) for i in range(n)]
    pairs = list(combinations(range(2 * n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    tri = []
    for a, b, c in combinations(range(2 * n), 3):
        cols = {a < n, b < n, c < n}
        if len(cols) == 2:
            tri.append((index[a, b], index[a, c], index[b, c]))
    return verts, pairs, tri


def _lex_key(bits) -> tuple[int, ...]:
    return tuple(sorted(bits))


def _exhaustive(n: int):
    verts, pairs, tri = _setup(n)
    E = len(pairs)
    masks = np.arange(1 << E, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for t in tri:
        t_mask = sum(1 << i for i in t)
        ok &= (masks & t_mask) != t_mask
    counts = np.zeros(masks.shape, dtype=np.int64)
    for i in range(E):
        counts += (masks >> i) & 1
    counts = np.where(ok, counts, -1)
    best = int(counts.max())
    cand = masks[counts == best]
    witness = min((tuple(i for i in range(E) if int(m) >> i & 1) for m in cand))
    return verts, pairs, best, witness, 1 << E


def _graph_classes(size: int) -> list[tuple[tuple[int, int], ...]]:
    """One edge set per isomorphism class of graphs on ``size`` vertices."""
    from itertools import permutations

    pairs = list(combinations(range(size), 2))
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        canon = min(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in es))
            for p in permutations(range(size))
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    return reps


def _symmetric(n: int):
    """Fix the blue and red graphs up to relabelling within each colour,
    then enumerate every set of blue-red edges with numpy."""
    verts, pairs, _tri = _setup(n)
    classes = _graph_classes(n)
    cross = [(i, n + j) for i in range(n) for j in range(n)]
    cidx = {p: k for k, p in enumerate(cross)}
    C = len(cross)
    masks = np.arange(1 << C, dtype=np.int64)
    pop = np.zeros(masks.shape, dtype=np.int64)
    for i in range(C):
        pop += (masks >> i) & 1
    best, witness, checked = -1, None, 0
    for blue in classes:
        for red in classes:
            ok = np.ones(masks.shape, dtype=bool)
            forb = []
            for a, b in blue:
                for z in range(n, 2 * n):
                    forb.append((cidx[a, z], cidx[b, z]))
            for a, b in red:
                for x in range(n):
                    forb.append((cidx[x, n + a], cidx[x, n + b]))
            for i, j in forb:
                ok &= ((masks >> i) & (masks >> j) & 1) == 0
            checked += 1 << C
            total = np.where(ok, pop, -1) + len(blue) + len(red)
            top = int(total.max())
            if top < best:
                continue
            for m in masks[total == top]:
                es = [p for p in blue] + [(n + a, n + b) for a, b in red]
                es += [cross[k] for k in range(C) if int(m) >> k & 1]
                key = _lex_key(pairs.index(p) for p in es)
                if top > best or key < witness:
                    best, witness = top, key
    return verts, pairs, best, witness, checked


MAX_N = 4


def extremal_enumeration(n: int) -> ExtremalResult:
    """Largest Γ on n blue and n red vertices with no bicoloured triangle.

    n <= 3 scans every labelled graph; n = 4 fixes the two single-colour
    subgraphs up to isomorphism and scans all blue-red edge sets.
    """
    if n < 1:
        raise DiagramError("n must be positive")
    if n > MAX_N:
        raise DiagramError(f"exhaustive search is limited to n <= {MAX_N} "
                           f"(2^{n * (2 * n - 1)} graphs)")
    if n <= 3:
        verts, pairs, best, wit, checked = _exhaustive(n)
        method = "exhaustive"
    else:
        verts, pairs, best, wit, checked = _symmetric(n)
        method = "colour-class symmetry"
    edges = [(verts[pairs[i][0]], verts[pairs[i][1]]) for i in wit]
    return ExtremalResult(n, best, GammaGraph.from_edges(verts, edges), method, checked)


def extremal_table(ns=(1, 2, 3)) -> str:
    lines = ["n, max_edges, bound_3n2/2-n, witness_edge_list"]
    lines += [extremal_enumeration(n).row() for n in ns]
    return "\n".join(lines)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleReport:
    n: int
    crossings: int
    bound: int | None
    threshold: int | None
    triangle: tuple[EdgeLabel, EdgeLabel, EdgeLabel] | None
    status: str  # "consistent", "counterexample" or "unknown"

    @property
    def within_bound(self) -> bool | None:
        return None if self.bound is None else self.crossings <= self.bound

    @property
    def lemma_applies(self) -> bool | None:
        return None if self.threshold is None else self.n > self.threshold

    def lines(self) -> list[str]:
        tri = "none" if self.triangle is None else "(" + ",".join(map(str, self.triangle)) + ")"
        return [
            f"n {self.n}",
            f"crossings {self.crossings} bound {self.bound} within {self.within_bound}",
            f"threshold {self.threshold} applies {self.lemma_applies}",
            f"triangle {tri}",
            f"status {self.status}",
        ]


def check_triangle_hypothesis(d: SpatialDiagram, k1: str, k2: str) -> TriangleReport:
    """Test a θ^n diagram against the large-n bicoloured triangle statement.

    Only reports; a diagram with few crossings, large n and triangle-free Γ
    is flagged as a counterexample, never raised.
    """
    from .invariants import crossing_number

    if d.family.kind != "theta-n":
        raise DiagramError("expected a theta-n diagram")
    n = d.family.params[0]
    g = gamma(d)
    tri = find_bicoloured_triangle(g)
    c1, c2 = crossing_number(k1), crossing_number(k2)
    c12 = crossing_number(f"{k1}#{k2}")
    if c1 is None or c2 is None or c12 is None:
        return TriangleReport(n, len(d.crossings), None, None, tri, "unknown")
    bound = n * (c1 + c2)
    threshold = 2 * (c1 + c2 - c12) + 1
    bad = len(d.crossings) <= bound and n > threshold and tri is None
    return TriangleReport(n, len(d.crossings), bound, threshold, tri,
                          "counterexample" if bad else "consistent")
