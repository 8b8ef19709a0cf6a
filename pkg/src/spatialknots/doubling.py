"""n parallel copies of a knot diagram glued into a θ^n diagram.

Every crossing of the knot becomes an n-by-n grid.  In cell coordinates the
under-strand runs south to north through columns and the over-strand west
to east through rows (slots 0, 1, 2, 3 of the original are S, E, N, W).
Copy k of a strand runs at offset k to the left of copy 0.
"""

from __future__ import annotations

from .diagram import (Builder, DiagramError, EdgeLabel, Family, LemmaViolation,
                      SpatialDiagram, keep_edges, validate)
from .gauss import find_partition, from_diagram, traverse

__all__ = ["double_diagram", "DoublingPlan", "plan_doubling"]

S, E, N, W = 0, 1, 2, 3
# direction of travel when leaving through a side / entering through it
_EXIT_DIR = {S: "s", N: "n", E: "e", W: "w"}
_ENTRY_DIR = {S: "n", N: "s", E: "w", W: "e"}


def _index(direction: str, k: int, n: int) -> int:
    """Column (for n/s) or row (for e/w) of copy k."""
    return n - 1 - k if direction in ("n", "w") else k


class DoublingPlan:
    """Traversal data shared by the builder and the sign search."""

    def __init__(self, knot: SpatialDiagram, n: int):
        code = from_diagram(knot)
        part = find_partition(code)
        if part is None:
            raise DiagramError("both-alternating obstruction: every partition "
                               "leaves one arc without a self-crossing")
        self.n = n
        self.partition = part
        self.visits = traverse(knot)
        self.length = len(self.visits)
        self.alpha1 = set(range(part.start, part.end))
        self.under_pos: dict[int, int] = {}
        self.over_pos: dict[int, int] = {}
        for pos, v in enumerate(self.visits):
            (self.over_pos if v.over else self.under_pos)[v.crossing] = pos
        self.crossing_ids = sorted(self.under_pos)

    def colour(self, pos: int) -> str:
        return "x" if pos in self.alpha1 else "z"

    def cell(self, cid: int, under_copy: int, over_copy: int) -> tuple[int, int, int]:
        n = self.n
        eu = self.visits[self.under_pos[cid]].entry_slot
        eo = self.visits[self.over_pos[cid]].entry_slot
        a = _index("n" if eu == 0 else "s", under_copy, n)
        b = _index("e" if eo == 3 else "w", over_copy, n)
        return cid, a, b

    def first_self_crossing(self, positions: list[int]) -> int:
        seen = set()
        for pos in positions:
            c = self.visits[pos].crossing
            if c in seen:
                return c
            seen.add(c)
        raise LemmaViolation("partition arc has no self-crossing")

    def arcs(self) -> tuple[list[int], list[int]]:
        p = self.partition
        a1 = list(range(p.start, p.end))
        a2 = [i % self.length for i in range(p.end, p.start + self.length)]
        return a1, a2


def plan_doubling(knot: SpatialDiagram, n: int) -> DoublingPlan:
    return DoublingPlan(knot, n)


def _build(plan: DoublingPlan, flips: set[tuple[int, int, int]]) -> SpatialDiagram:
    n, visits, L = plan.n, plan.visits, plan.length
    b = Builder(Family("theta-n", (n,)))
    cells = {}
    for cid in plan.crossing_ids:
        for a in range(n):
            for bb in range(n):
                hs = b.new_half_edges(4)
                cells[cid, a, bb] = hs
                s_, e_, n_, w_ = hs
                if (cid, a, bb) in flips:
                    b.add_crossing([w_, s_, e_, n_])
                else:
                    b.add_crossing([s_, e_, n_, w_])

    def copy_index(pos: int, k: int) -> int:
        v = visits[pos]
        return _index(_ENTRY_DIR[v.entry_slot], k, n)

    def lab(pos: int, k: int) -> EdgeLabel:
        return EdgeLabel(plan.colour(pos), k + 1)

    # arcs inside each grid
    for cid in plan.crossing_ids:
        pu, po = plan.under_pos[cid], plan.over_pos[cid]
        for a in range(n):
            for bb in range(n):
                s_, e_, n_, w_ = cells[cid, a, bb]
                if bb + 1 < n:
                    k = next(k for k in range(n) if copy_index(pu, k) == a)
                    b.connect(n_, cells[cid, a, bb + 1][S], lab(pu, k))
                if a + 1 < n:
                    k = next(k for k in range(n) if copy_index(po, k) == bb)
                    b.connect(e_, cells[cid, a + 1, bb][W], lab(po, k))

    def boundary(pos: int, k: int, exiting: bool) -> int:
        v = visits[pos]
        side = (v.entry_slot + 2) % 4 if exiting else v.entry_slot
        i = _index((_EXIT_DIR if exiting else _ENTRY_DIR)[side], k, n)
        if side == S:
            return cells[v.crossing, i, 0][S]
        if side == N:
            return cells[v.crossing, i, n - 1][N]
        if side == E:
            return cells[v.crossing, n - 1, i][E]
        return cells[v.crossing, 0, i][W]

    cuts = {plan.partition.start, plan.partition.end % L}
    node_of_cut = {}
    for cut in (plan.partition.start, plan.partition.end % L):
        ends = b.new_half_edges(2 * n)
        node_of_cut[cut] = ends
        b.add_node(ends)
    for pos in range(L):
        nxt = (pos + 1) % L
        for k in range(n):
            out_h = boundary(pos, k, True)
            in_h = boundary(nxt, k, False)
            if nxt in cuts:
                ends = node_of_cut[nxt]
                # node rotation: B_0..B_{n-1}, A_{n-1}..A_0
                b.connect(ends[k], in_h, lab(nxt, k))
                b.connect(ends[2 * n - 1 - k], out_h, lab(pos, k))
            else:
                b.connect(out_h, in_h, lab(pos, k))
    d = b.freeze()
    rep = validate(d)
    if not rep.ok:
        raise LemmaViolation("doubled diagram is not planar: " + "; ".join(rep.problems))
    return d


def double_diagram(knot: SpatialDiagram, n: int) -> SpatialDiagram:
    """θ^n diagram with n² crossings per crossing of ``knot``.

    Each (x_i, z_j) constituent reproduces ``knot``.  For every same-colour
    pair (p, q) the crossing where copy p passes under copy q is switched at
    the first self-crossing of that colour's arc; if the pair still bounds
    an unknot diagram by its Jones polynomial, the partner crossing is
    switched as well.
    """
    from .invariants import jones

    if n < 1:
        raise DiagramError("n must be positive")
    if n == 1:
        return knot
    plan = plan_doubling(knot, n)
    flips = set()
    a1, a2 = plan.arcs()
    firsts = {"x": plan.first_self_crossing(a1), "z": plan.first_self_crossing(a2)}
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    for cid in firsts.values():
        for p, q in pairs:
            flips.add(plan.cell(cid, p, q))
    d = _build(plan, flips)
    extra = []
    for fam, cid in firsts.items():
        for p, q in pairs:
            sub = keep_edges(d, [EdgeLabel(fam, p + 1), EdgeLabel(fam, q + 1)])
            if jones(sub) == 1:
                extra.append((fam, p, q))
                flips.add(plan.cell(cid, q, p))
    if extra:
        d = _build(plan, flips)
        for fam, p, q in extra:
            sub = keep_edges(d, [EdgeLabel(fam, p + 1), EdgeLabel(fam, q + 1)])
            if jones(sub) == 1:
                raise LemmaViolation(f"{fam}{p + 1} and {fam}{q + 1} still look unknotted")
    return d
