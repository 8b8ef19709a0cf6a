"""Combinatorial diagrams of knots and spatial graphs.

A diagram is a set of vertices joined by arcs.  Vertices are either
crossings (four half-edges, counterclockwise, slot 0 on the under-strand,
PD convention) or graph nodes (any valence, counterclockwise rotation).
Every half-edge is paired with exactly one other half-edge by an arc.
There are no coordinates: the embedding in the sphere is encoded entirely
by the rotation at each vertex.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

__all__ = [
    "EdgeLabel",
    "Crossing",
    "GraphNode",
    "Family",
    "SpatialDiagram",
    "CrossingMatrix",
    "ArcPath",
    "ValidationReport",
    "DiagramError",
    "LemmaViolation",
    "validate",
    "crossing_matrix",
    "delete_edge",
    "delete_edges",
    "keep_edges",
    "faces",
    "components",
    "connecting_arc",
    "split_along",
    "relabel",
    "strip_basepoints",
    "mirror",
]


class DiagramError(ValueError):
    """Raised when an operation's precondition on a diagram fails."""


class LemmaViolation(RuntimeError):
    """A situation that a proven statement rules out has been observed."""


_LABEL_RE = re.compile(r"^([xyzh])([0-9]+)$")


@dataclass(frozen=True, order=True)
class EdgeLabel:
    family: str
    index: int

    def __post_init__(self):
        if self.family not in ("x", "y", "z", "h") or self.index < 0:
            raise ValueError(f"bad edge label {self.family}{self.index}")

    @classmethod
    def parse(cls, text: str) -> "EdgeLabel":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad edge label {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.index}"

    __repr__ = __str__


def L(text: str) -> EdgeLabel:
    return EdgeLabel.parse(text)


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class GraphNode:
    id: int
    rotation: tuple[int, ...]

    @property
    def valence(self) -> int:
        return len(self.rotation)


@dataclass(frozen=True)
class Family:
    kind: str = "raw"
    params: tuple[int, ...] = ()

    KINDS = ("knot", "theta", "theta-n", "oplus", "G", "raw")

    def __str__(self):
        return " ".join([self.kind, *map(str, self.params)])

    @classmethod
    def parse(cls, text: str) -> "Family":
        parts = text.split()
        if not parts or parts[0] not in cls.KINDS:
            raise ValueError(f"unknown family {text!r}")
        return cls(parts[0], tuple(int(p) for p in parts[1:]))


KNOT = Family("knot")
THETA = Family("theta")


@dataclass(frozen=True)
class SpatialDiagram:
    """Immutable diagram value.

    ``arcs`` is sorted, each arc stored as ``(a, b)`` with ``a < b``;
    ``labels[i]`` is the graph-edge label of ``arcs[i]`` (or None).
    """

    crossings: tuple[Crossing, ...] = ()
    nodes: tuple[GraphNode, ...] = ()
    arcs: tuple[tuple[int, int], ...] = ()
    labels: tuple[EdgeLabel | None, ...] = ()
    family: Family = field(default_factory=Family)

    # derived lookups -------------------------------------------------

    @cached_property
    def pair(self) -> dict[int, int]:
        p = {}
        for a, b in self.arcs:
            p[a] = b
            p[b] = a
        return p

    @cached_property
    def label_of(self) -> dict[int, EdgeLabel | None]:
        out = {}
        for (a, b), lab in zip(self.arcs, self.labels):
            out[a] = lab
            out[b] = lab
        return out

    @cached_property
    def arc_index(self) -> dict[int, int]:
        out = {}
        for i, (a, b) in enumerate(self.arcs):
            out[a] = i
            out[b] = i
        return out

    @cached_property
    def location(self) -> dict[int, tuple[str, int, int]]:
        """half-edge -> (kind, vertex id, position in the vertex)."""
        loc = {}
        for c in self.crossings:
            for i, h in enumerate(c.slots):
                loc[h] = ("X", c.id, i)
        for v in self.nodes:
            for i, h in enumerate(v.rotation):
                loc[h] = ("V", v.id, i)
        return loc

    @cached_property
    def crossing_by_id(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    @cached_property
    def node_by_id(self) -> dict[int, GraphNode]:
        return {v.id: v for v in self.nodes}

    def rotation_of(self, kind: str, vid: int) -> tuple[int, ...]:
        if kind == "X":
            return self.crossing_by_id[vid].slots
        return self.node_by_id[vid].rotation

    def rot_next(self, h: int) -> int:
        """Next half-edge counterclockwise around the vertex of ``h``."""
        kind, vid, i = self.location[h]
        rot = self.rotation_of(kind, vid)
        return rot[(i + 1) % len(rot)]

    def rot_prev(self, h: int) -> int:
        kind, vid, i = self.location[h]
        rot = self.rotation_of(kind, vid)
        return rot[(i - 1) % len(rot)]

    def opposite(self, h: int) -> int:
        """The half-edge across a crossing on the same strand."""
        kind, vid, i = self.location[h]
        if kind != "X":
            raise DiagramError(f"half-edge {h} is not at a crossing")
        return self.crossing_by_id[vid].slots[(i + 2) % 4]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def edge_labels(self) -> tuple[EdgeLabel, ...]:
        return tuple(sorted({lab for lab in self.labels if lab is not None}))

    def __repr__(self):
        return (f"SpatialDiagram({self.family}, crossings={len(self.crossings)}, "
                f"nodes={len(self.nodes)}, arcs={len(self.arcs)})")


# ---------------------------------------------------------------------------
# mutable builder used by every construction


class Builder:
    """Mutable scratch form of a diagram; labels live on half-edges."""

    def __init__(self, family: Family | None = None):
        self.crossings: dict[int, list[int]] = {}
        self.nodes: dict[int, list[int]] = {}
        self.pair: dict[int, int] = {}
        self.label: dict[int, EdgeLabel | None] = {}
        self.family = family or Family()
        self._next_h = 0
        self._next_x = 0
        self._next_v = 0

    @classmethod
    def from_diagram(cls, d: SpatialDiagram) -> "Builder":
        b = cls(d.family)
        for c in d.crossings:
            b.crossings[c.id] = list(c.slots)
        for v in d.nodes:
            b.nodes[v.id] = list(v.rotation)
        for (x, y), lab in zip(d.arcs, d.labels):
            b.pair[x], b.pair[y] = y, x
            b.label[x] = b.label[y] = lab
        hs = list(b.pair)
        b._next_h = max(hs, default=-1) + 1
        b._next_x = max(b.crossings, default=-1) + 1
        b._next_v = max(b.nodes, default=-1) + 1
        return b

    def new_half_edges(self, k: int) -> list[int]:
        out = list(range(self._next_h, self._next_h + k))
        self._next_h += k
        return out

    def add_crossing(self, slots) -> int:
        cid = self._next_x
        self._next_x += 1
        self.crossings[cid] = list(slots)
        return cid

    def add_node(self, rotation) -> int:
        vid = self._next_v
        self._next_v += 1
        self.nodes[vid] = list(rotation)
        return vid

    def connect(self, a: int, b: int, label: EdgeLabel | None = None):
        if a == b:
            raise DiagramError("cannot pair a half-edge with itself")
        self.pair[a], self.pair[b] = b, a
        self.label[a] = self.label[b] = label

    def set_label(self, a: int, label):
        self.label[a] = self.label[self.pair[a]] = label

    def merge_labels(self, a: EdgeLabel | None, b: EdgeLabel | None):
        if a == b or a is None or b is None:
            return
        keep, drop = min(a, b), max(a, b)
        for h, lab in self.label.items():
            if lab == drop:
                self.label[h] = keep

    def splice(self, removed: Iterable[int], through: dict[int, int]):
        """Delete half-edges ``removed`` whose strands continue via ``through``.

        ``through`` is an involution on ``removed``: a path entering the
        vertex at ``u`` leaves at ``through[u]``.  Outer partners of each
        resulting path are joined by a single arc.  Closed paths made only
        of removed half-edges become a crossing-free loop carrying a
        valence-2 marker node.
        """
        removed = set(removed)
        done: set[int] = set()
        joins = []
        for r in sorted(removed):
            if r in done or self.pair[r] in removed:
                continue
            labels = [self.label[r]]
            cur = r
            done.add(cur)
            while True:
                t = through[cur]
                done.add(t)
                labels.append(self.label[t])
                p = self.pair[t]
                if p not in removed:
                    joins.append((self.pair[r], p, labels))
                    break
                cur = p
                done.add(cur)
        loops = []
        for r in sorted(removed - done):
            if r in done:
                continue
            labels = []
            cur = r
            while cur not in done:
                done.add(cur)
                t = through[cur]
                done.add(t)
                labels.append(self.label[cur])
                cur = self.pair[t]
            loops.append(labels)
        for h in removed:
            self.pair.pop(h, None)
            self.label.pop(h, None)
        for x, y, labels in joins:
            lx, ly = self.label[x], self.label[y]
            self.connect(x, y, lx)
            self.label[y] = lx
            for lab in [ly, *labels]:
                self.merge_labels(self.label[x], lab)
        for labels in loops:
            lab = min((l for l in labels if l is not None), default=None)
            p, q = self.new_half_edges(2)
            self.add_node([p, q])
            self.connect(p, q, lab)

    def remove_crossing_through(self, cid: int):
        """Delete a crossing, both strands passing straight through."""
        s = self.crossings.pop(cid)
        self.splice(s, {s[0]: s[2], s[2]: s[0], s[1]: s[3], s[3]: s[1]})

    def erase_node(self, vid: int) -> bool:
        """Erase a valence-2 node unless it is the only vertex on its loop."""
        rot = self.nodes[vid]
        if len(rot) != 2:
            raise DiagramError("only valence-2 nodes can be erased")
        u, v = rot
        if self.pair[u] == v:
            return False
        del self.nodes[vid]
        self.splice([u, v], {u: v, v: u})
        return True

    def freeze(self) -> SpatialDiagram:
        arcs = sorted({(min(a, b), max(a, b)) for a, b in self.pair.items()})
        return SpatialDiagram(
            crossings=tuple(Crossing(i, tuple(s)) for i, s in sorted(self.crossings.items())),
            nodes=tuple(GraphNode(i, tuple(r)) for i, r in sorted(self.nodes.items())),
            arcs=tuple(arcs),
            labels=tuple(self.label.get(a) for a, _ in arcs),
            family=self.family,
        )


# ---------------------------------------------------------------------------
# structure


def faces(d: SpatialDiagram) -> list[tuple[int, ...]]:
    """Face boundary walks, each a tuple of darts (half-edges).

    The successor of dart ``h`` is the counterclockwise neighbour of its
    partner.  Walks start at their smallest dart and are listed in order of
    that dart.
    """
    seen = set()
    out = []
    for h in sorted(d.pair):
        if h in seen:
            continue
        walk = []
        cur = h
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            cur = d.rot_next(d.pair[cur])
        out.append(tuple(walk))
    return out


def components(d: SpatialDiagram) -> list[set[tuple[str, int]]]:
    """Vertex sets of connected components, ordered by smallest vertex."""
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        parent[("X", c.id)] = ("X", c.id)
    for v in d.nodes:
        parent[("V", v.id)] = ("V", v.id)
    for a, b in d.arcs:
        ka, kb = d.location[a][:2], d.location[b][:2]
        ra, rb = find(ka), find(kb)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = defaultdict(set)
    for x in parent:
        groups[find(x)].add(x)
    return [groups[k] for k in sorted(groups)]


@dataclass
class ValidationReport:
    problems: list[str]
    n_faces: int = 0
    euler: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.ok


def validate(d: SpatialDiagram) -> ValidationReport:
    """Check every structural invariant; an empty problem list means valid."""
    problems = []
    seen = defaultdict(int)
    for c in d.crossings:
        if len(c.slots) != 4:
            problems.append(f"crossing {c.id} does not have 4 slots")
        for h in c.slots:
            seen[h] += 1
    for v in d.nodes:
        if not v.rotation:
            problems.append(f"node {v.id} has valence 0")
        for h in v.rotation:
            seen[h] += 1
    for h, k in sorted(seen.items()):
        if k > 1:
            problems.append(f"duplicate half-edge {h}")
    paired = defaultdict(int)
    for a, b in d.arcs:
        if a == b:
            problems.append(f"arc pairs half-edge {a} with itself")
        paired[a] += 1
        paired[b] += 1
    for h in sorted(set(seen) | set(paired)):
        if paired[h] != 1:
            problems.append(f"half-edge {h} appears in {paired[h]} arcs")
        if seen[h] == 0:
            problems.append(f"half-edge {h} is not attached to any vertex")
    if len(d.labels) != len(d.arcs):
        problems.append("label table does not match arcs")
    if problems:
        return ValidationReport(problems)

    fs = faces(d)
    comps = components(d)
    face_comp = defaultdict(int)
    vertex_comp = {}
    for i, comp in enumerate(comps):
        for v in comp:
            vertex_comp[v] = i
    for f in fs:
        face_comp[vertex_comp[d.location[f[0]][:2]]] += 1
    arc_comp = defaultdict(int)
    for a, _ in d.arcs:
        arc_comp[vertex_comp[d.location[a][:2]]] += 1
    euler = []
    for i, comp in enumerate(comps):
        chi = len(comp) - arc_comp[i] + face_comp[i]
        euler.append(chi)
        if chi != 2:
            problems.append(f"component {i} is not spherical (V-E+F={chi})")

    problems.extend(_label_problems(d))
    return ValidationReport(problems, len(fs), euler)


def _label_problems(d: SpatialDiagram) -> list[str]:
    if all(lab is None for lab in d.labels):
        return []
    out = []
    lab = d.label_of
    for c in d.crossings:
        s = c.slots
        if lab[s[0]] != lab[s[2]] or lab[s[1]] != lab[s[3]]:
            out.append(f"label changes along a strand at crossing {c.id}")
    if any(v is None for v in d.labels):
        out.append("diagram is only partially labeled")
    if out:
        return out
    parent = {h: h for h in d.pair}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for a, b in d.arcs:
        union(a, b)
    for c in d.crossings:
        union(c.slots[0], c.slots[2])
        union(c.slots[1], c.slots[3])
    ends = defaultdict(int)
    for v in d.nodes:
        if v.valence == 2 and lab[v.rotation[0]] == lab[v.rotation[1]]:
            union(*v.rotation)
        else:
            for h in v.rotation:
                ends[lab[h]] += 1
    roots = defaultdict(set)
    for h in d.pair:
        roots[lab[h]].add(find(h))
    for l in sorted(roots):
        if len(roots[l]) != 1:
            out.append(f"edge {l} is not a single path")
        elif ends[l] not in (0, 2):
            out.append(f"edge {l} has {ends[l]} node ends")
    return out


# ---------------------------------------------------------------------------
# crossing bookkeeping


class CrossingMatrix:
    """Symmetric crossing counts per pair of edge labels."""

    def __init__(self, counts: dict[tuple[EdgeLabel, EdgeLabel], int], labels):
        self.counts = dict(counts)
        self.labels = tuple(labels)

    def __getitem__(self, key) -> int:
        a, b = key
        if isinstance(a, str):
            a = L(a)
        if isinstance(b, str):
            b = L(b)
        return self.counts.get((min(a, b), max(a, b)), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def row_sum(self, e) -> int:
        return sum(self[e, b] for b in self.labels)

    def off_diagonal_total(self) -> int:
        return sum(v for (a, b), v in self.counts.items() if a != b)

    def nonzero(self) -> dict[tuple[EdgeLabel, EdgeLabel], int]:
        return {k: v for k, v in sorted(self.counts.items()) if v}

    def __eq__(self, other):
        return isinstance(other, CrossingMatrix) and self.nonzero() == other.nonzero()

    def __repr__(self):
        body = ", ".join(f"{a}{b}={v}" for (a, b), v in self.nonzero().items())
        return f"CrossingMatrix({body})"


def crossing_matrix(d: SpatialDiagram) -> CrossingMatrix:
    lab = d.label_of
    counts = defaultdict(int)
    for c in d.crossings:
        a, b = lab[c.slots[0]], lab[c.slots[1]]
        if a is None or b is None:
            raise DiagramError("unlabeled arc at crossing %d" % c.id)
        counts[(min(a, b), max(a, b))] += 1
    return CrossingMatrix(counts, d.edge_labels)


# ---------------------------------------------------------------------------
# edge deletion


def infer_family(d: SpatialDiagram) -> Family:
    big = [v for v in d.nodes if v.valence != 2]
    if not big:
        return KNOT if len(components(d)) == 1 else Family()
    if len(big) == 2 and len(d.nodes) == 2 and big[0].valence == big[1].valence:
        k = big[0].valence
        if k == 3:
            return THETA
        if k % 2 == 0:
            return Family("theta-n", (k // 2,))
    return Family()


def delete_edges(d: SpatialDiagram, edges, family: Family | None = None) -> SpatialDiagram:
    """Remove every arc carrying one of ``edges``; smooth away its crossings."""
    edges = {L(e) if isinstance(e, str) else e for e in edges}
    present = set(d.edge_labels)
    for e in edges:
        if e not in present:
            raise DiagramError(f"edge {e} not present")
    b = Builder.from_diagram(d)
    dead = {h for h, lab in b.label.items() if lab in edges}
    for cid in sorted(b.crossings):
        s = b.crossings[cid]
        k = sum(h in dead for h in s)
        if k == 4:
            del b.crossings[cid]
        elif k == 2:
            live = [h for h in s if h not in dead]
            del b.crossings[cid]
            b.splice(live, {live[0]: live[1], live[1]: live[0]})
    for h in dead:
        b.pair.pop(h, None)
        b.label.pop(h, None)
    changed = []
    for vid in sorted(b.nodes):
        rot = b.nodes[vid]
        new = [h for h in rot if h not in dead]
        if len(new) != len(rot):
            changed.append(vid)
            b.nodes[vid] = new
            if not new:
                del b.nodes[vid]
    for vid in changed:
        if vid in b.nodes and len(b.nodes[vid]) == 2:
            b.erase_node(vid)
    out = b.freeze()
    out = SpatialDiagram(out.crossings, out.nodes, out.arcs, out.labels,
                         family if family is not None else infer_family(out))
    rep = validate(out)
    if not rep.ok:
        raise DiagramError("deletion produced an invalid diagram: " + "; ".join(rep.problems))
    return out


def delete_edge(d: SpatialDiagram, e, family: Family | None = None) -> SpatialDiagram:
    return delete_edges(d, [e], family)


def keep_edges(d: SpatialDiagram, keep) -> SpatialDiagram:
    """The sub-diagram formed by the listed edges only."""
    keep = {L(e) if isinstance(e, str) else e for e in keep}
    return delete_edges(d, [e for e in d.edge_labels if e not in keep])


def strip_basepoints(d: SpatialDiagram) -> SpatialDiagram:
    """Erase marker nodes (valence 2, one label) wherever another vertex
    keeps the loop anchored."""
    b = Builder.from_diagram(d)
    for vid in sorted(b.nodes):
        rot = b.nodes[vid]
        if len(rot) == 2 and b.label[rot[0]] == b.label[rot[1]]:
            b.erase_node(vid)
    out = b.freeze()
    return SpatialDiagram(out.crossings, out.nodes, out.arcs, out.labels, d.family)


def relabel(d: SpatialDiagram, mapping, family: Family | None = None) -> SpatialDiagram:
    """Rename edge labels; ``mapping`` is a dict or a callable."""
    f = mapping if callable(mapping) else (lambda l: mapping.get(l, l))
    return SpatialDiagram(d.crossings, d.nodes, d.arcs,
                          tuple(None if l is None else f(l) for l in d.labels),
                          d.family if family is None else family)


def mirror(d: SpatialDiagram) -> SpatialDiagram:
    """Switch every crossing."""
    xs = tuple(Crossing(c.id, c.slots[1:] + c.slots[:1]) for c in d.crossings)
    return SpatialDiagram(xs, d.nodes, d.arcs, d.labels, d.family)


# ---------------------------------------------------------------------------
# the connecting arc between the two nodes of a theta diagram


@dataclass(frozen=True)
class ArcPath:
    """A crossing-free path between two nodes, running inside faces.

    ``corners[i] = (node, dart)`` places the path end at ``node`` just
    counterclockwise after ``dart`` in the rotation.
    """

    faces: tuple[int, ...]
    endpoints: tuple[int, int]
    corners: tuple[tuple[int, int], tuple[int, int]]


def _two_nodes(d: SpatialDiagram) -> tuple[GraphNode, GraphNode]:
    big = sorted((v for v in d.nodes if v.valence > 2), key=lambda v: v.id)
    if len(big) != 2:
        raise DiagramError("expected a diagram with exactly two graph nodes")
    return big[0], big[1]


def connecting_arc(d: SpatialDiagram) -> ArcPath:
    """A path from node n1 to node n2 that crosses no arc of ``d``.

    Requires all crossings to be self-crossings of single edges.  Such a
    path runs inside one face meeting both nodes; its existence is
    guaranteed, so failure raises ``LemmaViolation``.
    """
    m = crossing_matrix(d)
    if m.off_diagonal_total():
        raise DiagramError("connecting arc needs zero crossings between distinct edges")
    n1, n2 = _two_nodes(d)
    for fi, walk in enumerate(faces(d)):
        corner = {}
        for h in walk:
            p = d.pair[h]
            kind, vid, _ = d.location[p]
            if kind == "V" and vid in (n1.id, n2.id):
                corner.setdefault(vid, p)
        if n1.id in corner and n2.id in corner:
            return ArcPath((fi,), (n1.id, n2.id),
                           ((n1.id, corner[n1.id]), (n2.id, corner[n2.id])))
    raise LemmaViolation("no face meets both nodes although no two edges cross")


def split_along(d: SpatialDiagram, gamma: ArcPath) -> tuple[SpatialDiagram, ...]:
    """The knot diagrams e ∪ gamma for each edge e of ``d``, in label order."""
    b = Builder.from_diagram(d)
    g1, g2 = b.new_half_edges(2)
    tag = EdgeLabel("h", 10 ** 6)
    for (vid, dart), g in zip(gamma.corners, (g1, g2)):
        rot = b.nodes[vid]
        rot.insert(rot.index(dart) + 1, g)
    b.connect(g1, g2, tag)
    with_gamma = b.freeze()
    if not validate(with_gamma).ok:
        raise LemmaViolation("inserting the connecting arc broke planarity")
    out = []
    for e in d.edge_labels:
        k = keep_edges(with_gamma, [e, tag])
        out.append(relabel(k, lambda _l, e=e: e, KNOT))
    return tuple(out)
