"""Small table of knot diagrams given by planar diagram codes."""

from __future__ import annotations

from .diagram import (KNOT, Builder, DiagramError, EdgeLabel, SpatialDiagram,
                      mirror, validate)

__all__ = ["PD_CODES", "PRIME_NAMES", "from_pd", "unknot", "knot_diagram"]

PD_CODES: dict[str, tuple[tuple[int, int, int, int], ...]] = {
    "3_1": ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)),
    "4_1": ((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)),
    "5_1": ((1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)),
    "5_2": ((1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7), (7, 2, 8, 3)),
}

# 4_1 is amphichiral, the others come with a starred mirror image
PRIME_NAMES = ("3_1", "3_1*", "4_1", "5_1", "5_1*", "5_2", "5_2*")


def from_pd(code, label: EdgeLabel | str = "x1") -> SpatialDiagram:
    """Diagram from a PD code, every arc carrying ``label``."""
    if isinstance(label, str):
        label = EdgeLabel.parse(label)
    if not code:
        return unknot(label)
    b = Builder(KNOT)
    ends: dict[int, list[int]] = {}
    for quad in code:
        hs = b.new_half_edges(4)
        b.add_crossing(hs)
        for h, a in zip(hs, quad):
            ends.setdefault(a, []).append(h)
    for a, hs in ends.items():
        if len(hs) != 2:
            raise DiagramError(f"PD arc {a} occurs {len(hs)} times")
        b.connect(hs[0], hs[1], label)
    d = b.freeze()
    rep = validate(d)
    if not rep.ok:
        raise DiagramError("; ".join(rep.problems))
    return d


def unknot(label: EdgeLabel | str = "x1") -> SpatialDiagram:
    """Crossing-free circle: one marker node closing up on itself."""
    if isinstance(label, str):
        label = EdgeLabel.parse(label)
    b = Builder(KNOT)
    p, q = b.new_half_edges(2)
    b.add_node([p, q])
    b.connect(p, q, label)
    return b.freeze()


def knot_diagram(name: str, label: EdgeLabel | str = "x1") -> SpatialDiagram:
    """Table knot by name; a trailing '*' selects the mirror image."""
    if name in ("unknot", "0_1"):
        return unknot(label)
    base = name.rstrip("*")
    if base not in PD_CODES:
        raise KeyError(f"unknown knot {name!r}")
    d = from_pd(PD_CODES[base], label)
    return mirror(d) if name.endswith("*") else d
