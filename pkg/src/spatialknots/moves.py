"""Reidemeister moves on diagrams, canonical keys and a bounded search.

Move sites refer to half-edges of the diagram the move was enumerated on.
A dart ``h`` of a face walk stands for the arc from ``h`` to its partner,
with the face on its right-hand side.

Graph nodes are rigid: a V-slide carries a strand across a node, trading
the crossings with one block of consecutive edges for crossings with the
complementary block, and never changes the cyclic order at the node.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from itertools import combinations

from .diagram import (Builder, DiagramError, SpatialDiagram, faces,
                      strip_basepoints, validate)

__all__ = [
    "Move",
    "apply",
    "enumerate_moves",
    "canonical_key",
    "isomorphic",
    "SearchResult",
    "simplify",
    "scramble",
    "KINDS",
]

KINDS = ("R1-", "R2-", "V", "R3", "R1+", "R2+")


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple[int, ...]
    delta: int = 0

    def __str__(self):
        return f"{self.kind}{list(self.site)}"


def _slot(d: SpatialDiagram, h: int) -> tuple[int, int]:
    kind, cid, i = d.location[h]
    if kind != "X":
        raise DiagramError(f"half-edge {h} is not at a crossing")
    return cid, i


def _is_x(d: SpatialDiagram, h: int) -> bool:
    return d.location[h][0] == "X"


# ---------------------------------------------------------------------------
# enumeration


def _r1_minus(d):
    for c in d.crossings:
        s = c.slots
        for i in range(4):
            if d.pair[s[i]] == s[(i + 1) % 4]:
                yield Move("R1-", (c.id, i), -1)
                break


def _r1_plus(d):
    for a, _b in d.arcs:
        for s in range(4):
            yield Move("R1+", (a, s), 1)


def _r2_minus(d, face_list):
    for walk in face_list:
        if len(walk) != 2:
            continue
        h1, h2 = walk
        if not (_is_x(d, h1) and _is_x(d, h2)):
            continue
        c1, i1 = _slot(d, h1)
        c2, j1 = _slot(d, d.pair[h1])
        if c1 == c2:
            continue
        if i1 % 2 == j1 % 2:
            yield Move("R2-", (h1,), -2)


def _r2_plus(d, face_list):
    for walk in face_list:
        for g1, g2 in combinations(walk, 2):
            if d.arc_index[g1] == d.arc_index[g2]:
                continue
            for over in (1, 0):
                yield Move("R2+", (g1, g2, over), 2)


def _r3(d, face_list):
    for walk in face_list:
        if len(walk) != 3 or not all(_is_x(d, h) for h in walk):
            continue
        vs = {_slot(d, h)[0] for h in walk}
        if len(vs) != 3:
            continue
        if any(_slot(d, h)[1] % 2 == _slot(d, d.pair[h])[1] % 2 for h in walk):
            yield Move("R3", (min(walk),), 0)


def _v_blocks(d, v):
    """Blocks of consecutive edges at node v crossed in turn by one strand."""
    rot = v.rotation
    k = len(rot)
    for j in range(k):
        run = []
        for m in range(k - 1):
            n_h = rot[(j + m) % k]
            x = d.pair[n_h]
            if not _is_x(d, x):
                break
            cid, t = _slot(d, x)
            if run:
                pcid, pt = run[-1]
                if t % 2 != pt % 2:
                    break
                out = d.crossing_by_id[pcid].slots[(pt + 3) % 4]
                if d.pair[out] != d.crossing_by_id[cid].slots[(t + 1) % 4]:
                    break
                if cid in {c for c, _ in run}:
                    break
            run.append((cid, t))
            yield j, len(run)


def _v_slides(d, nodes):
    for v in nodes:
        k = v.valence
        for j, m in _v_blocks(d, v):
            try:
                _v_site(d, v.id, j, m)
            except DiagramError:
                continue
            yield Move("V", (v.id, j, m), k - 2 * m)


def _graph_nodes(d):
    out = []
    for v in d.nodes:
        if v.valence != 2 or d.label_of[v.rotation[0]] != d.label_of[v.rotation[1]]:
            out.append(v)
    return out


def enumerate_moves(d: SpatialDiagram, max_delta: int = 2, kinds=KINDS):
    """All move sites of ``d`` changing the crossing count by at most max_delta."""
    fl = faces(d)
    gens = {
        "R1-": lambda: _r1_minus(d),
        "R2-": lambda: _r2_minus(d, fl),
        "V": lambda: _v_slides(d, _graph_nodes(d)),
        "R3": lambda: _r3(d, fl),
        "R1+": lambda: _r1_plus(d),
        "R2+": lambda: _r2_plus(d, fl),
    }
    for kind in kinds:
        if kind in ("R1+",) and max_delta < 1:
            continue
        if kind in ("R2+",) and max_delta < 2:
            continue
        for m in gens[kind]():
            if m.delta <= max_delta:
                yield m


# ---------------------------------------------------------------------------
# application


def _remove_crossings(b: Builder, cids):
    removed, through = [], {}
    for cid in cids:
        s = b.crossings.pop(cid)
        removed += s
        for i in range(4):
            through[s[i]] = s[(i + 2) % 4]
    b.splice(removed, through)


def _apply_r1_minus(d, cid, i):
    s = d.crossing_by_id[cid].slots
    if d.pair[s[i]] != s[(i + 1) % 4]:
        raise DiagramError("no kink at this site")
    b = Builder.from_diagram(d)
    _remove_crossings(b, [cid])
    return b.freeze()


def _apply_r1_plus(d, h, s):
    b = Builder.from_diagram(d)
    lab = b.label[h]
    other = b.pair[h]
    q = b.new_half_edges(4)
    b.add_crossing(q)
    del b.pair[h], b.pair[other]
    b.connect(q[s % 4], q[(s + 1) % 4], lab)
    b.connect(h, q[(s + 3) % 4], lab)
    b.connect(q[(s + 2) % 4], other, lab)
    return b.freeze()


def _apply_r2_minus(d, h1):
    walk = next((w for w in faces(d) if h1 in w), None)
    if walk is None or len(walk) != 2:
        raise DiagramError("not a bigon")
    c1, i1 = _slot(d, h1)
    c2, j1 = _slot(d, d.pair[h1])
    if c1 == c2 or i1 % 2 != j1 % 2:
        raise DiagramError("bigon does not bound an R2 move")
    b = Builder.from_diagram(d)
    _remove_crossings(b, [c1, c2])
    return b.freeze()


def _apply_r2_plus(d, g1, g2, over):
    a, a2 = g1, d.pair[g1]
    bb, b2 = g2, d.pair[g2]
    if d.arc_index[a] == d.arc_index[bb]:
        raise DiagramError("R2 needs two different arcs")
    b = Builder.from_diagram(d)
    la, lb = b.label[a], b.label[bb]
    for t in (a, a2, bb, b2):
        del b.pair[t]
    # c1 on A's way down through the face, c2 on its way back
    p = b.new_half_edges(4)  # c1: A_in, A_out, B_in, B_out
    q = b.new_half_edges(4)  # c2
    a_in1, a_out1, b_in1, b_out1 = p
    a_in2, a_out2, b_in2, b_out2 = q
    if over:
        b.add_crossing([b_in1, a_in1, b_out1, a_out1])
        b.add_crossing([b_in2, a_out2, b_out2, a_in2])
    else:
        b.add_crossing([a_in1, b_out1, a_out1, b_in1])
        b.add_crossing([a_in2, b_in2, a_out2, b_out2])
    b.connect(a, a_in1, la)
    b.connect(a_out1, a_in2, la)
    b.connect(a_out2, a2, la)
    b.connect(bb, b_in2, lb)
    b.connect(b_out2, b_in1, lb)
    b.connect(b_out1, b2, lb)
    return b.freeze()


def _apply_r3(d, h0):
    walk = next((w for w in faces(d) if h0 in w), None)
    if walk is None or len(walk) != 3:
        raise DiagramError("not a triangle")
    i0 = walk.index(h0)
    hs = [walk[(i0 + t) % 3] for t in range(3)]
    vs = [_slot(d, h)[0] for h in hs]
    if len(set(vs)) != 3:
        raise DiagramError("triangle vertices must be distinct crossings")
    if not any(_slot(d, h)[1] % 2 == _slot(d, d.pair[h])[1] % 2 for h in hs):
        raise DiagramError("cyclic triangle")
    # strand i runs along arc i: enters the triangle region at P_i (opposite
    # hs[i]) and leaves at Q_i (opposite of the partner of hs[i])
    P = [d.opposite(h) for h in hs]
    Q = [d.opposite(d.pair[h]) for h in hs]
    labels = [d.label_of[h] for h in hs]
    under_next = [_slot(d, hs[(i + 1) % 3])[1] % 2 == 0 for i in range(3)]
    b = Builder.from_diagram(d)
    old_slots = set()
    for v in vs:
        old_slots.update(b.crossings.pop(v))
    ext = {}
    # new crossing u_i joins strands i and i+1
    u = [b.new_half_edges(4) for _ in range(3)]  # int_{i+1}, ext_P_i, ext_Q_{i+1}, int_i
    for i in range(3):
        j = (i + 1) % 3
        si1_int, si_ext, si1_ext, si_int = u[i]
        rot = [si1_int, si_ext, si1_ext, si_int]
        b.add_crossing(rot if under_next[i] else rot[1:] + rot[:1])
        ext[P[i]] = si_ext
        ext[Q[j]] = si1_ext
    for i in range(3):
        # strand i: u_i -> u_{i-1}; its internal end at u_i is slot 3,
        # at u_{i-1} (where it is the "i+1" strand) slot 0
        b.connect(u[i][3], u[(i - 1) % 3][0], labels[i])
    outer = {}
    for t in P + Q:
        outer[t] = d.pair[t]
    for t in old_slots:
        b.pair.pop(t, None)
        b.label.pop(t, None)
    done = set()
    for t, partner in outer.items():
        if t in done:
            continue
        lab = d.label_of[t]
        if partner in ext:
            b.connect(ext[t], ext[partner], lab)
            done.add(partner)
        else:
            b.connect(ext[t], partner, lab)
        done.add(t)
    return b.freeze()


def _v_site(d, vid, j, m):
    """Validate a V-slide site; returns the data needed to perform it."""
    v = d.node_by_id[vid]
    rot = v.rotation
    k = len(rot)
    if not 1 <= m < k:
        raise DiagramError("bad V-slide block")
    block = [rot[(j + t) % k] for t in range(m)]
    rest = [rot[(j - 1 - t) % k] for t in range(k - m)]  # order met by the slid strand
    cs = []
    for t, n_h in enumerate(block):
        x = d.pair[n_h]
        if not _is_x(d, x):
            raise DiagramError("block edge does not start at a crossing")
        cs.append(_slot(d, x))
    for (c0, t0), (c1, t1) in zip(cs, cs[1:]):
        out = d.crossing_by_id[c0].slots[(t0 + 3) % 4]
        if t0 % 2 != t1 % 2 or d.pair[out] != d.crossing_by_id[c1].slots[(t1 + 1) % 4]:
            raise DiagramError("strand does not run along the block")
    cids = [c for c, _ in cs]
    if len(set(cids)) != len(cids):
        raise DiagramError("block crossings repeat")
    first_in = d.crossing_by_id[cs[0][0]].slots[(cs[0][1] + 1) % 4]
    last_out = d.crossing_by_id[cs[-1][0]].slots[(cs[-1][1] + 3) % 4]
    removed = {h for c in cids for h in d.crossing_by_id[c].slots}
    b_from, b_to = d.pair[first_in], d.pair[last_out]
    if b_from in removed or b_to in removed:
        raise DiagramError("slid strand re-enters the block")
    if any(d.pair[n_h] in removed for n_h in rest):
        raise DiagramError("complementary edge runs into the block")
    return rest, cs, cids, first_in, b_from, b_to


def _apply_v(d, vid, j, m):
    rest, cs, cids, first_in, b_from, b_to = _v_site(d, vid, j, m)
    b_over = cs[0][1] % 2 == 0  # the node edge sits on an under slot
    lab_b = d.label_of[first_in]
    b = Builder.from_diagram(d)
    _remove_crossings(b, cids)
    if b.pair.get(b_from) != b_to:
        raise DiagramError("slid strand did not close up")
    del b.pair[b_from], b.pair[b_to]
    prev = b_from
    for n_h in rest:
        x = b.pair[n_h]
        lab = b.label[n_h]
        h_in, h_out, h_f, h_t = b.new_half_edges(4)
        if b_over:
            b.add_crossing([h_in, h_t, h_out, h_f])
        else:
            b.add_crossing([h_f, h_in, h_t, h_out])
        del b.pair[n_h], b.pair[x]
        b.connect(n_h, h_in, lab)
        b.connect(h_out, x, lab)
        b.connect(prev, h_f, lab_b)
        prev = h_t
    b.connect(prev, b_to, lab_b)
    return b.freeze()


_APPLY = {
    "R1-": _apply_r1_minus,
    "R1+": _apply_r1_plus,
    "R2-": _apply_r2_minus,
    "R2+": _apply_r2_plus,
    "R3": _apply_r3,
    "V": _apply_v,
}


def apply(d: SpatialDiagram, m: Move, check: bool = True) -> SpatialDiagram:
    """Diagram after move ``m``; raises DiagramError for an invalid site."""
    try:
        fn = _APPLY[m.kind]
    except KeyError:
        raise DiagramError(f"unknown move {m.kind}") from None
    try:
        out = fn(d, *m.site)
    except KeyError as exc:
        raise DiagramError(f"site {m} does not exist: {exc}") from None
    if check:
        rep = validate(out)
        if not rep.ok:
            raise DiagramError(f"{m} gave an invalid diagram: " + "; ".join(rep.problems))
    return out


# ---------------------------------------------------------------------------
# canonical form


def _dart_sig(d, h):
    kind, _vid, i = d.location[h]
    lab = d.label_of[h]
    lab = "" if lab is None else str(lab)
    if kind == "X":
        return (0, i % 2, lab)
    return (1, d.node_by_id[_vid].valence, lab)


def canonical_key(d: SpatialDiagram) -> tuple:
    """Invariant of the labelled diagram up to renumbering.

    Darts are numbered breadth-first from a start dart following partner
    and counterclockwise-next links; the key is the least resulting
    encoding over all start darts of least local signature, per connected
    component.
    """
    pair = d.pair
    nxt = {}
    for c in d.crossings:
        s = c.slots
        for i in range(4):
            nxt[s[i]] = s[(i + 1) % 4]
    for v in d.nodes:
        r = v.rotation
        for i in range(len(r)):
            nxt[r[i]] = r[(i + 1) % len(r)]
    sig0 = {h: _dart_sig(d, h) for h in pair}
    # a sharper local signature narrows down the start darts
    sig = {h: (sig0[h], sig0[pair[h]], sig0[nxt[h]], sig0[nxt[pair[h]]]) for h in pair}
    seen = set()
    comp_keys = []
    for h0 in sorted(pair):
        if h0 in seen:
            continue
        comp = []
        stack = [h0]
        seen.add(h0)
        while stack:
            h = stack.pop()
            comp.append(h)
            for nb in (pair[h], nxt[h]):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        low = min(sig[h] for h in comp)
        best = None
        for start in comp:
            if sig[start] != low:
                continue
            num = {start: 0}
            order = [start]
            for h in order:
                for nb in (pair[h], nxt[h]):
                    if nb not in num:
                        num[nb] = len(order)
                        order.append(nb)
            enc = tuple((num[pair[h]], num[nxt[h]], sig0[h]) for h in order)
            if best is None or enc < best:
                best = enc
        comp_keys.append(best)
    return tuple(sorted(comp_keys))


def isomorphic(a: SpatialDiagram, b: SpatialDiagram) -> bool:
    return canonical_key(a) == canonical_key(b)


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchResult:
    diagram: SpatialDiagram
    crossings: int
    trace: list[Move] = field(default_factory=list)
    explored: int = 0
    exhausted: bool = False
    start: SpatialDiagram | None = None

    def replay(self) -> SpatialDiagram:
        d = self.start
        for m in self.trace:
            d = strip_basepoints(apply(d, m))
        return d


def simplify(d: SpatialDiagram, budget: int = 100_000, depth: int = 0) -> SearchResult:
    """Best-first search for a diagram with fewer crossings.

    States are expanded lowest crossing count first (ties in discovery
    order) and never exceed the start count plus ``depth``.  ``budget``
    caps the number of distinct diagrams generated.  The result is an
    upper bound only.
    """
    start = strip_basepoints(d)
    limit = len(start.crossings) + depth
    k0 = canonical_key(start)
    store = {k0: (start, None, None)}
    heap = [(len(start.crossings), 0, k0)]
    serial = 1
    best_key = k0
    exhausted = False
    while heap:
        n, _s, key = heapq.heappop(heap)
        cur = store[key][0]
        if n < len(store[best_key][0].crossings):
            best_key = key
        if n == 0:
            best_key = key
            break
        for m in enumerate_moves(cur, max_delta=limit - n):
            try:
                nxt = strip_basepoints(apply(cur, m, check=False))
            except DiagramError:
                continue
            k = canonical_key(nxt)
            if k in store:
                continue
            store[k] = (nxt, key, m)
            heapq.heappush(heap, (len(nxt.crossings), serial, k))
            serial += 1
            if len(store) >= budget:
                exhausted = True
                break
        if exhausted:
            break
    if exhausted:
        for n, _s, key in heap:
            if n < len(store[best_key][0].crossings):
                best_key = key
    trace = []
    k = best_key
    while store[k][1] is not None:
        trace.append(store[k][2])
        k = store[k][1]
    trace.reverse()
    best = store[best_key][0]
    return SearchResult(best, len(best.crossings), trace, len(store), exhausted, start)


def scramble(d: SpatialDiagram, steps: int, seed: int = 0,
             kinds=("R1+", "R2+", "R3", "V")) -> tuple[SpatialDiagram, list[Move]]:
    """Apply random moves that never lower the crossing count."""
    rng = random.Random(seed)
    trace = []
    for _ in range(steps):
        cand = [m for m in enumerate_moves(d, 2, kinds) if m.delta >= 0]
        rng.shuffle(cand)
        for m in cand:
            try:
                d = apply(d, m)
            except DiagramError:
                continue
            trace.append(m)
            break
    return d, trace
