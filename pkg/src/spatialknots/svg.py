"""Straight-line SVG drawing of a diagram.

Every arc is subdivided twice so the underlying plane graph is simple, the
largest face is pinned to a circle and the remaining points sit at the
barycentre of their neighbours (Tutte's spring embedding).  The drawing is
purely cosmetic; nothing in the library reads it back.
"""

from __future__ import annotations

import math
from html import escape

import numpy as np

from .diagram import SpatialDiagram, components, faces

__all__ = ["layout", "to_svg", "export_svg"]

COLOURS = {"x": "#1f5fbf", "z": "#c0392b", "y": "#333333", "h": "#777777"}
GAP = 0.22  # fraction of the first segment left out at an under-crossing


def _points(d: SpatialDiagram):
    """Vertices of the subdivided graph and its edges."""
    verts = [("X", c.id) for c in d.crossings] + [("V", v.id) for v in d.nodes]
    edges = []
    for i, (a, b) in enumerate(d.arcs):
        p, q = ("A", i, 0), ("A", i, 1)
        verts += [p, q]
        ka, kb = d.location[a][:2], d.location[b][:2]
        edges += [(ka, p), (p, q), (q, kb)]
    return verts, edges


def _arc_points(d: SpatialDiagram, h: int) -> list:
    """Subdivision points met when leaving along dart ``h``."""
    i = d.arc_index[h]
    pts = [("A", i, 0), ("A", i, 1)]
    return pts if d.arcs[i][0] == h else pts[::-1]


def layout(d: SpatialDiagram) -> dict:
    """Coordinates for crossings, nodes and arc subdivision points."""
    verts, edges = _points(d)
    pos = {}
    offset = 0.0
    comps = components(d)
    all_faces = faces(d)
    for comp in comps:
        cverts = [v for v in verts if (v[0] != "A" and v in comp)
                  or (v[0] == "A" and d.location[d.arcs[v[1]][0]][:2] in comp)]
        cfaces = [f for f in all_faces if d.location[f[0]][:2] in comp]
        outer = max(cfaces, key=len)
        cycles = {}
        for f in cfaces:
            cyc = []
            for h in f:
                cyc.append(d.location[h][:2])
                cyc += _arc_points(d, h)
            cycles[f] = cyc
        cycle = cycles[outer]
        # a hidden centre per inner face keeps parallel arcs of bigons apart
        extra = []
        for fi, f in enumerate(cfaces):
            if f is not outer:
                centre = ("F", fi)
                cverts.append(centre)
                extra += [(centre, v) for v in cycles[f]]
        idx = {v: i for i, v in enumerate(cverts)}
        fixed = {}
        for j, v in enumerate(cycle):
            if v not in fixed:
                # the walk keeps the outer region on its right: go clockwise
                t = -2 * math.pi * j / len(cycle)
                fixed[v] = (math.cos(t), math.sin(t))
        n = len(cverts)
        lap = np.zeros((n, n))
        for a, b in edges + extra:
            if a in idx and b in idx:
                i, j = idx[a], idx[b]
                lap[i, j] -= 1
                lap[j, i] -= 1
                lap[i, i] += 1
                lap[j, j] += 1
        rhs = np.zeros((n, 2))
        for v, xy in fixed.items():
            i = idx[v]
            lap[i, :] = 0
            lap[i, i] = 1
            rhs[i] = xy
        xy = np.linalg.solve(lap, rhs)
        for v, i in idx.items():
            if v[0] == "F":
                continue
            pos[v] = (float(xy[i, 0]) + offset, float(xy[i, 1]))
        offset += 2.5
    return pos


def to_svg(d: SpatialDiagram, size: int = 480, labels: bool = True) -> str:
    pos = layout(d)
    xs = [p[0] for p in pos.values()] or [0.0]
    ys = [p[1] for p in pos.values()] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 20
    scale = (size - 2 * pad) / span
    width = int((x1 - x0) * scale + 2 * pad)
    height = int((y1 - y0) * scale + 2 * pad)

    def sc(p):
        # flip y so the picture keeps its orientation on screen
        return (pad + (p[0] - x0) * scale, pad + (y1 - p[1]) * scale)

    under = {c.slots[0] for c in d.crossings} | {c.slots[2] for c in d.crossings}
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    for i, ((a, b), lab) in enumerate(zip(d.arcs, d.labels)):
        pts = [sc(pos[d.location[a][:2]]), sc(pos["A", i, 0]),
               sc(pos["A", i, 1]), sc(pos[d.location[b][:2]])]
        if a in under:
            pts[0] = _towards(pts[0], pts[1], GAP)
        if b in under:
            pts[-1] = _towards(pts[-1], pts[-2], GAP)
        colour = COLOURS.get(lab.family, "#000000")
        path = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="{colour}" '
                   f'stroke-width="2"/>')
        if labels:
            mx = (pts[1][0] + pts[2][0]) / 2
            my = (pts[1][1] + pts[2][1]) / 2
            out.append(f'<text x="{mx:.2f}" y="{my:.2f}" font-size="9" '
                       f'fill="{colour}">{escape(str(lab))}</text>')
    for v in d.nodes:
        x, y = sc(pos["V", v.id])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _towards(p, q, t):
    return (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def export_svg(d: SpatialDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_svg(d))
