"""Builders for the knot and spatial graph families.

Knots are tied into an edge by splicing a 1-string tangle: the stored knot
diagram is cut open at the arc entering slot 0 of its lowest crossing and
the two loose ends are joined to the two halves of the host arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .diagram import (KNOT, THETA, Builder, DiagramError, EdgeLabel, Family,
                      SpatialDiagram, components, crossing_matrix, delete_edges,
                      keep_edges, relabel, validate)
from .knots import knot_diagram

__all__ = [
    "KnotSpec",
    "resolve_spec",
    "tie",
    "connected_sum",
    "build_theta",
    "build_theta_n",
    "build_oplus",
    "build_G",
    "vertical_labels",
    "resolve_nodes",
    "theta_connected_sum",
    "cut_vertical",
    "recursion_parameter",
    "graph_nodes",
    "OmegaReport",
    "check_omega_membership",
]


@dataclass(frozen=True)
class KnotSpec:
    """A knot given by table name (sums joined by '#') or by a diagram."""

    name: str | None
    diagram: SpatialDiagram

    @property
    def crossings(self) -> int:
        return len(self.diagram.crossings)


def resolve_spec(spec) -> KnotSpec:
    """Accepts a ``KnotSpec``, a diagram, a table name or a ``.sgd`` path."""
    if isinstance(spec, KnotSpec):
        return spec
    if isinstance(spec, SpatialDiagram):
        return KnotSpec(None, spec)
    if isinstance(spec, Path) or (isinstance(spec, str) and spec.endswith(".sgd")):
        from .sgd import load
        d = load(spec)
        if any(v.valence != 2 for v in d.nodes) or len(components(d)) != 1:
            raise DiagramError(f"{spec} is not a knot diagram")
        return KnotSpec(None, d)
    if isinstance(spec, str):
        parts = spec.split("#")
        d = knot_diagram(parts[0])
        for p in parts[1:]:
            d = connected_sum(d, knot_diagram(p))
        return KnotSpec(spec, d)
    raise TypeError(f"cannot interpret {spec!r} as a knot")


def _check(d: SpatialDiagram) -> SpatialDiagram:
    rep = validate(d)
    if not rep.ok:
        raise DiagramError("; ".join(rep.problems))
    return d


def _cut_arc(k: SpatialDiagram) -> tuple[int, int]:
    """The arc of a knot diagram entering slot 0 of its lowest crossing."""
    h = k.crossings[0].slots[0]
    return k.pair[h], h


def tie(d: SpatialDiagram, h: int, knot, check: bool = True) -> SpatialDiagram:
    """Tie ``knot`` into the arc of ``d`` containing half-edge ``h``.

    The inserted strand inherits the host arc's label.  Cutting one arc of
    a knot diagram leaves both loose ends in a single face, so the splice
    is planar; ``check=False`` skips the validation for bulk builders.
    """
    k = resolve_spec(knot).diagram
    if not k.crossings:
        return d
    b = Builder.from_diagram(d)
    lab = b.label[h]
    off = b._next_h
    for c in k.crossings:
        b.add_crossing([s + off for s in c.slots])
    for v in k.nodes:
        b.add_node([s + off for s in v.rotation])
    for x, y in k.arcs:
        b.connect(x + off, y + off, lab)
    b._next_h = off + max(k.pair) + 1
    u, v = h, b.pair[h]
    a, c = (t + off for t in _cut_arc(k))
    del b.pair[u], b.pair[v], b.pair[a], b.pair[c]
    b.connect(u, a, lab)
    b.connect(c, v, lab)
    out = b.freeze()
    return _check(out) if check else out


def _arc_with(d: SpatialDiagram, label: EdgeLabel) -> int:
    for (x, _y), lab in zip(d.arcs, d.labels):
        if lab == label:
            return x
    raise DiagramError(f"no arc carries {label}")


def connected_sum(a, b) -> SpatialDiagram:
    """Knot diagram of a # b; no crossings are added."""
    da = relabel(resolve_spec(a).diagram, lambda _l: EdgeLabel("x", 1), KNOT)
    db = resolve_spec(b).diagram
    if not da.crossings:
        return relabel(db, lambda _l: EdgeLabel("x", 1), KNOT)
    return tie(da, _cut_arc(da)[1], db)


def build_theta(k1, k2) -> SpatialDiagram:
    """θ with K1 tied into edge x, K2 into z and y left unknotted."""
    b = Builder(THETA)
    x1, x2, y1, y2, z1, z2 = b.new_half_edges(6)
    b.add_node([x1, y1, z1])
    b.add_node([z2, y2, x2])
    b.connect(x1, x2, EdgeLabel("x", 1))
    b.connect(y1, y2, EdgeLabel("y", 1))
    b.connect(z1, z2, EdgeLabel("z", 1))
    d = b.freeze()
    d = tie(d, _arc_with(d, EdgeLabel("x", 1)), k1, check=False)
    d = tie(d, _arc_with(d, EdgeLabel("z", 1)), k2, check=False)
    return _check(d)


def _ladder(n: int, k: int, k1, k2) -> SpatialDiagram:
    """⊕^{n,k}: k+1 columns of 2n horizontal edges between the outer nodes.

    Rows run top to bottom.  Row r of column c carries K1 (an x edge) when
    r + c is even and K2 (a z edge) otherwise.
    """
    if n < 1 or k < 0:
        raise DiagramError("need n >= 1 and k >= 0")
    s1, s2 = resolve_spec(k1), resolve_spec(k2)
    rows = 2 * n
    b = Builder(Family("oplus", (n, k)))
    hor = {(c, r): b.new_half_edges(2) for c in range(k + 1) for r in range(rows)}
    b.add_node([hor[k, r][1] for r in range(rows)])
    b.add_node([hor[0, r][0] for r in reversed(range(rows))])
    for v in range(1, k + 1):
        seg = [b.new_half_edges(2) for _ in range(rows - 1)]
        for r in range(rows):
            up = seg[r - 1][1] if r > 0 else None
            down = seg[r][0] if r < rows - 1 else None
            rot = [hor[v, r][0], up, hor[v - 1, r][1], down]
            b.add_node([t for t in rot if t is not None])
        for r, (p, q) in enumerate(seg):
            b.connect(p, q, EdgeLabel("h", (v - 1) * (rows - 1) + r + 1))
    for (c, r), (p, q) in hor.items():
        fam = "x" if (r + c) % 2 == 0 else "z"
        b.connect(p, q, EdgeLabel(fam, c * n + r // 2 + 1))
    d = b.freeze()
    for c in range(k + 1):
        for m in range(1, n + 1):
            d = tie(d, _arc_with(d, EdgeLabel("x", c * n + m)), s1, check=False)
            d = tie(d, _arc_with(d, EdgeLabel("z", c * n + m)), s2, check=False)
    return _check(d)


def build_theta_n(n: int, k1, k2) -> SpatialDiagram:
    """θ^n: K1 tied into x_1..x_n and K2 into z_1..z_n, alternating at the nodes."""
    d = _ladder(n, 0, k1, k2)
    return SpatialDiagram(d.crossings, d.nodes, d.arcs, d.labels, Family("theta-n", (n,)))


def build_oplus(n: int, k: int, k1, k2) -> SpatialDiagram:
    return _ladder(n, k, k1, k2)


def vertical_labels(n: int, i: int) -> list[EdgeLabel]:
    """The h segments making up the i-th vertical edge of ⊕^{n,k}."""
    base = (i - 1) * (2 * n - 1)
    return [EdgeLabel("h", base + r + 1) for r in range(2 * n - 1)]


def _oplus_params(d: SpatialDiagram) -> tuple[int, int]:
    if d.family.kind == "oplus":
        return d.family.params
    if d.family.kind == "theta-n":
        return d.family.params[0], 0
    raise DiagramError(f"expected an oplus diagram, got family {d.family}")


def build_G(n: int, k: int, i: int, k1, k2) -> SpatialDiagram:
    """G^{n,k,i}: ⊕^{n,k} with its i-th vertical edge deleted."""
    if not 1 <= i <= k:
        raise DiagramError(f"vertical edge {i} out of range 1..{k}")
    d = build_oplus(n, k, k1, k2)
    return delete_edges(d, vertical_labels(n, i), Family("G", (n, k, i)))


def graph_nodes(d: SpatialDiagram) -> list:
    """Nodes that are genuine graph vertices, not marker points on one edge."""
    out = []
    for v in d.nodes:
        if v.valence != 2 or len({d.label_of[h] for h in v.rotation}) > 1:
            out.append(v)
    return out


def resolve_nodes(d: SpatialDiagram) -> SpatialDiagram:
    """Knot diagram obtained by pairing off the edge ends at both nodes.

    Ends are paired with their counterclockwise neighbour at each node, the
    pairing parity chosen so that the strands close up into a single curve.
    No crossings are added.
    """
    nodes = graph_nodes(d)
    if len(nodes) != 2:
        raise DiagramError("resolve_nodes needs exactly two graph nodes")
    n1, n2 = nodes
    if n1.valence != n2.valence or n1.valence % 2:
        raise DiagramError("node valences must be equal and even")
    m = n1.valence
    for p1 in (0, 1):
        for p2 in (0, 1):
            through = {}
            for v, par in ((n1, p1), (n2, p2)):
                r = v.rotation
                for j in range(par, par + m, 2):
                    a, c = r[j % m], r[(j + 1) % m]
                    through[a], through[c] = c, a
            b = Builder.from_diagram(d)
            del b.nodes[n1.id], b.nodes[n2.id]
            b.splice(list(n1.rotation) + list(n2.rotation), through)
            out = b.freeze()
            if len(components(out)) == 1:
                out = relabel(out, lambda _l: EdgeLabel("x", 1), KNOT)
                return _check(out)
    raise DiagramError("no resolution of the nodes gives a single curve")


def theta_connected_sum(a: SpatialDiagram, b: SpatialDiagram) -> SpatialDiagram:
    """Join the second node of ``a`` to the first node of ``b`` edge by edge.

    Edges are matched by label; the result keeps the labels of ``a``.
    """
    na, nb = graph_nodes(a), graph_nodes(b)
    if len(na) != 2 or len(nb) != 2:
        raise DiagramError("theta connected sum needs two graph nodes on each side")
    sink, source = na[1], nb[0]
    if sink.valence != source.valence:
        raise DiagramError(f"degree mismatch: {sink.valence} and {source.valence}")
    bl = Builder.from_diagram(a)
    off = bl._next_h
    xoff, voff = bl._next_x, bl._next_v
    for c in b.crossings:
        bl.crossings[c.id + xoff] = [s + off for s in c.slots]
    for v in b.nodes:
        bl.nodes[v.id + voff] = [s + off for s in v.rotation]
    for (x, y), lab in zip(b.arcs, b.labels):
        bl.connect(x + off, y + off, lab)
    bl._next_h = off + max(b.pair) + 1
    bl._next_x = xoff + max((c.id for c in b.crossings), default=-1) + 1
    bl._next_v = voff + max(v.id for v in b.nodes) + 1
    ends_a = {a.label_of[h]: h for h in sink.rotation}
    ends_b = {b.label_of[h]: h + off for h in source.rotation}
    if set(ends_a) != set(ends_b) or len(ends_a) != sink.valence:
        raise DiagramError("edge labels at the joined nodes do not match")
    del bl.nodes[sink.id], bl.nodes[source.id + voff]
    for lab, ha in ends_a.items():
        hb = ends_b[lab]
        oa, ob = bl.pair.pop(ha), bl.pair.pop(hb)
        del bl.pair[oa], bl.pair[ob]
        bl.label.pop(ha), bl.label.pop(hb)
        bl.connect(oa, ob, lab)
    out = bl.freeze()
    out = SpatialDiagram(out.crossings, out.nodes, out.arcs, out.labels, a.family)
    rep = validate(out)
    if not rep.ok:
        raise DiagramError("node rotations are not compatible for the sum: "
                           + "; ".join(rep.problems))
    return out


def _sub_diagram(d: SpatialDiagram, comp, family: Family) -> SpatialDiagram:
    xs = {i for kind, i in comp if kind == "X"}
    vs = {i for kind, i in comp if kind == "V"}
    crossings = tuple(c for c in d.crossings if c.id in xs)
    nodes = tuple(v for v in d.nodes if v.id in vs)
    hs = {h for c in crossings for h in c.slots} | {h for v in nodes for h in v.rotation}
    keep = [i for i, (x, _y) in enumerate(d.arcs) if x in hs]
    return SpatialDiagram(crossings, nodes, tuple(d.arcs[i] for i in keep),
                          tuple(d.labels[i] for i in keep), family)


def cut_vertical(d: SpatialDiagram, i: int) -> tuple[SpatialDiagram, SpatialDiagram]:
    """Cut ⊕^{n,k} along its i-th vertical edge and close both sides.

    The vertical edge must be crossing-free.  The loose horizontal ends on
    each side are gathered, in order along the cut, into one new node, so
    the closing arcs run parallel to the deleted edge and add no crossings.
    Returns (⊕^{n,i-1}, ⊕^{n,k-i}).
    """
    n, k = _oplus_params(d)
    if not 1 <= i <= k:
        raise DiagramError(f"vertical edge {i} out of range 1..{k}")
    segs = vertical_labels(n, i)
    m = crossing_matrix(d)
    for s in segs:
        if m.row_sum(s):
            raise DiagramError(f"vertical edge {i} is involved in crossings ({s})")
    seg_set = set(segs)
    on_path = {}
    for v in d.nodes:
        if any(d.label_of[h] in seg_set for h in v.rotation):
            on_path[v.id] = v
    # walk the vertical path from the end at its first segment
    first = [v for v in on_path.values()
             if sum(d.label_of[h] in seg_set for h in v.rotation) == 1
             and any(d.label_of[h] == segs[0] for h in v.rotation)]
    if not first:
        raise DiagramError("cannot locate the end of the vertical edge")
    # with a single segment both ends qualify; start at its lower half-edge
    first.sort(key=lambda v: min(h for h in v.rotation if d.label_of[h] == segs[0]))
    left, right, dead = [], [], set()
    cur, back = first[0], None
    while True:
        rot = cur.rotation
        fwd = next((h for h in rot if d.label_of[h] in seg_set and h != back), None)
        side = [h for h in rot if d.label_of[h] not in seg_set]
        if len(side) != 2:
            raise DiagramError("vertical path node does not meet two horizontal ends")
        j = rot.index(fwd) if fwd is not None else rot.index(back)
        lft = rot[(j - 1) % len(rot)] if fwd is not None else rot[(j + 1) % len(rot)]
        left.append(lft)
        right.append(side[0] if side[1] == lft else side[1])
        dead.update(h for h in rot if d.label_of[h] in seg_set)
        if fwd is None:
            break
        nxt = d.pair[fwd]
        cur, back = on_path[d.location[nxt][1]], nxt
    b = Builder.from_diagram(d)
    for vid in on_path:
        del b.nodes[vid]
    for h in dead:
        b.pair.pop(h, None)
        b.label.pop(h, None)
    b.add_node(left)
    b.add_node(list(reversed(right)))
    whole = b.freeze()
    comps = components(whole)
    if len(comps) != 2:
        raise DiagramError("cutting the vertical edge did not separate the diagram")
    x1 = EdgeLabel("x", 1)
    parts = [_sub_diagram(whole, c, Family()) for c in comps]
    parts.sort(key=lambda p: x1 not in p.edge_labels)
    p1 = SpatialDiagram(*_fields(parts[0]), Family("oplus", (n, i - 1)))
    shift = {"x": i * n, "z": i * n, "h": i * (2 * n - 1)}
    p2 = relabel(parts[1], lambda l: EdgeLabel(l.family, l.index - shift[l.family]),
                 Family("oplus", (n, k - i)))
    return _check(p1), _check(p2)


def _fields(d: SpatialDiagram):
    return d.crossings, d.nodes, d.arcs, d.labels


def recursion_parameter(k: int, i: int) -> int:
    """Index of the vertical edge to delete in the smaller G of the recursion."""
    if 2 * i == k + 1:
        raise DiagramError("i = (k+1)/2 has no recursion parameter")
    if not 1 <= i <= k:
        raise DiagramError(f"i must lie in 1..{k}")
    return i if i - 1 < k - i else i - (k - i) - 1


# ---------------------------------------------------------------------------
# membership in Ω^n


@dataclass(frozen=True)
class PairResult:
    edges: tuple[EdgeLabel, EdgeLabel]
    identified: str
    status: str  # "ok", "bad" or "unknown"


@dataclass(frozen=True)
class OmegaReport:
    pairs: tuple[PairResult, ...]
    verdict: str  # "member", "non-member" or "unknown"

    def lines(self) -> list[str]:
        return [f"{a} {b} {p.identified} {p.status}" for p in self.pairs
                for a, b in [p.edges]] + [f"verdict {self.verdict}"]


def _is_unknot(k: SpatialDiagram) -> bool:
    """Certify an unknot by simplifying to a crossing-free diagram."""
    if not k.crossings:
        return True
    from .moves import simplify
    return not simplify(k, depth=2, budget=20000).diagram.crossings


def check_omega_membership(d: SpatialDiagram, k1, k2) -> OmegaReport:
    """Identify all pairwise constituents of a θ^n-type diagram.

    Cross-colour pairs (x_i, z_j) must be K1#K2; same-colour pairs must be
    neither the unknot nor K1#K2#K1#K2.  A Jones value different from the
    target already refutes a knot type; agreement only counts when the
    table names the knot uniquely.
    """
    from .invariants import identify_jones, jones

    s1, s2 = resolve_spec(k1), resolve_spec(k2)
    js = jones(connected_sum(s1.diagram, s2.diagram))
    target_name = identify_jones(js) if s1.name and s2.name else "unknown"
    xs = sorted(e for e in d.edge_labels if e.family == "x")
    zs = sorted(e for e in d.edge_labels if e.family == "z")
    pairs = [(a, b) for a in xs for b in zs]
    pairs += [(a, b) for fam in (xs, zs) for idx, a in enumerate(fam) for b in fam[idx + 1:]]
    results = []
    for a, b in pairs:
        k = keep_edges(d, [a, b])
        j = jones(k)
        name = identify_jones(j)
        if a.family != b.family:
            if j != js:
                status = "bad"
            elif target_name != "unknown" and name == target_name:
                status = "ok"
            else:
                status = "unknown"
        else:
            if j == 1:
                status = "bad" if _is_unknot(k) else "unknown"
            elif j == js * js:
                status = "unknown"
            else:
                status = "ok"
        results.append(PairResult((a, b), name, status))
    if any(r.status == "bad" for r in results):
        verdict = "non-member"
    elif all(r.status == "ok" for r in results):
        verdict = "member"
    else:
        verdict = "unknown"
    return OmegaReport(tuple(results), verdict)


from .doubling import double_diagram  # noqa: E402,F401

__all__.append("double_diagram")
