"""Line-based ``.sgd`` text format for diagrams.

::

    # comment
    F theta-n 2
    X <id> <h0> <h1> <h2> <h3>
    V <id> <h1> ... <hk>
    P <ha> <hb>
    L <arc-index> <label>

Arc indices count ``P`` lines from zero in file order.
"""

from __future__ import annotations

from pathlib import Path

from .diagram import (Crossing, DiagramError, EdgeLabel, Family, GraphNode,
                      SpatialDiagram)

__all__ = ["serialize", "parse", "load", "save"]


def serialize(d: SpatialDiagram) -> str:
    lines = [f"F {d.family}"]
    for c in d.crossings:
        lines.append("X %d %d %d %d %d" % (c.id, *c.slots))
    for v in d.nodes:
        lines.append("V %d %s" % (v.id, " ".join(map(str, v.rotation))))
    for a, b in d.arcs:
        lines.append(f"P {a} {b}")
    for i, lab in enumerate(d.labels):
        if lab is not None:
            lines.append(f"L {i} {lab}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> SpatialDiagram:
    family = Family()
    crossings, nodes, arcs, labels = [], [], [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            if tag == "F":
                family = Family.parse(" ".join(rest))
            elif tag == "X":
                nums = [int(t) for t in rest]
                if len(nums) != 5:
                    raise ValueError("crossing needs an id and 4 half-edges")
                crossings.append(Crossing(nums[0], tuple(nums[1:])))
            elif tag == "V":
                nums = [int(t) for t in rest]
                nodes.append(GraphNode(nums[0], tuple(nums[1:])))
            elif tag == "P":
                a, b = (int(t) for t in rest)
                arcs.append((min(a, b), max(a, b)))
            elif tag == "L":
                idx, lab = rest
                labels[int(idx)] = EdgeLabel.parse(lab)
            else:
                raise ValueError(f"unknown record {tag!r}")
        except ValueError as exc:
            raise DiagramError(f"line {lineno}: {exc}") from None
    for i in labels:
        if not 0 <= i < len(arcs):
            raise DiagramError(f"label refers to missing arc {i}")
    order = sorted(range(len(arcs)), key=lambda i: arcs[i])
    return SpatialDiagram(
        crossings=tuple(sorted(crossings, key=lambda c: c.id)),
        nodes=tuple(sorted(nodes, key=lambda v: v.id)),
        arcs=tuple(arcs[i] for i in order),
        labels=tuple(labels.get(i) for i in order),
        family=family,
    )


def load(path) -> SpatialDiagram:
    return parse(Path(path).read_text(encoding="utf-8"))


def save(d: SpatialDiagram, path) -> None:
    Path(path).write_text(serialize(d), encoding="utf-8")
