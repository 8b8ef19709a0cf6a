"""Kauffman bracket, writhe, Jones polynomial and table identification."""

from __future__ import annotations

from functools import lru_cache

from .diagram import DiagramError, SpatialDiagram, components
from .gauss import _step, crossing_signs
from .polynomial import LaurentPoly

__all__ = [
    "BRACKET_LIMIT",
    "kauffman_bracket",
    "bracket_state_sum",
    "writhe",
    "jones",
    "identify",
    "identify_jones",
    "knot_table",
    "jones_of_name",
    "crossing_number",
]

BRACKET_LIMIT = 60

A = LaurentPoly.monomial(1, 1)
DELTA = LaurentPoly({2: -1, -2: -1})


def _strand_successor(d: SpatialDiagram) -> dict[int, int]:
    """Each crossing half-edge -> the crossing half-edge at the other end of
    its arc, passing straight through valence-2 nodes."""
    nxt = {}
    for c in d.crossings:
        for h in c.slots:
            nxt[h] = _step(d, h)
    return nxt


def _free_loops(d: SpatialDiagram) -> int:
    """Components that carry no crossing (closed loops through marker nodes)."""
    n = 0
    for comp in components(d):
        if all(kind == "V" for kind, _ in comp):
            if any(d.node_by_id[v].valence != 2 for _, v in comp):
                raise DiagramError("bracket is only defined for knot and link diagrams")
            n += 1
    return n


def _order(d: SpatialDiagram, nxt) -> list[int]:
    """Crossing order keeping the open boundary small (greedy, ties by id)."""
    owner = {h: c.id for c in d.crossings for h in c.slots}
    slots = {c.id: c.slots for c in d.crossings}
    done: set[int] = set()
    order = []
    remaining = sorted(slots)
    while remaining:
        best, key = None, None
        for cid in remaining:
            links = sum(owner[nxt[h]] in done for h in slots[cid])
            k = (-links, cid)
            if key is None or k < key:
                best, key = cid, k
        order.append(best)
        done.add(best)
        remaining.remove(best)
    return order


def kauffman_bracket(d: SpatialDiagram) -> LaurentPoly:
    """Bracket polynomial in A, normalised so a crossing-free loop gives 1.

    Smoothings follow the PD rule  X[a,b,c,d] -> A (a b)(c d) + A^-1 (a d)(b c).
    The state sum is evaluated crossing by crossing, carrying the pairing of
    open strand ends and the count of closed loops as the DP state.
    """
    if any(v.valence != 2 for v in d.nodes):
        raise DiagramError("bracket is only defined for knot and link diagrams")
    if len(d.crossings) > BRACKET_LIMIT:
        raise DiagramError(f"bracket limited to {BRACKET_LIMIT} crossings")
    free = _free_loops(d)
    if not d.crossings:
        return DELTA ** (free - 1) if free else LaurentPoly.const(1)
    nxt = _strand_successor(d)
    slots = {c.id: c.slots for c in d.crossings}
    # states: (sorted tuple of matched boundary pairs, loops) -> poly in A
    states: dict[tuple[tuple[tuple[int, int], ...], int], LaurentPoly] = {((), 0): LaurentPoly.const(1)}
    boundary: set[int] = set()
    for cid in _order(d, nxt):
        s = slots[cid]
        sset = set(s)
        glue = {}
        for h in s:
            p = nxt[h]
            if p in boundary or p in sset:
                glue[h] = p
                glue[p] = h
        new_boundary = (boundary - set(glue)) | {h for h in s if h not in glue}
        new_states: dict = {}
        for smooth, w in (((s[0], s[1]), (s[2], s[3])), 1), (((s[0], s[3]), (s[1], s[2])), -1):
            for (match, loops), coef in states.items():
                key = _combine(match, smooth, glue)
                key = (key[0], loops + key[1])
                term = coef.shift(w)
                prev = new_states.get(key)
                new_states[key] = term if prev is None else prev + term
        states = {k: v for k, v in new_states.items() if not v.is_zero()}
        boundary = new_boundary
    total = LaurentPoly()
    for (match, loops), coef in states.items():
        if match:
            raise DiagramError("open strands left after the state sum")
        total = total + coef * DELTA ** (loops + free - 1)
    return total


def _combine(match, smooth, glue):
    """Merge boundary pairing, a smoothing and the new arcs.

    Returns the induced pairing of the remaining free ends and the number of
    loops that closed up.  Only pairs meeting a glued end can change.
    """
    keep = []
    partner = {}
    touched = []
    for a, b in match:
        if a in glue or b in glue:
            partner[a] = b
            partner[b] = a
            touched += (a, b)
        else:
            keep.append((a, b))
    for a, b in smooth:
        partner[a] = b
        partner[b] = a
        touched += (a, b)
    seen = set()
    for v in touched:
        if v in glue or v in seen:
            continue
        seen.add(v)
        w = partner[v]
        while w in glue:
            seen.add(w)
            g = glue[w]
            seen.add(g)
            w = partner[g]
        seen.add(w)
        keep.append((v, w) if v < w else (w, v))
    loops = 0
    for v in touched:
        if v in seen:
            continue
        # every end on this path is glued, so it closes into a loop
        cur = v
        while cur not in seen:
            seen.add(cur)
            w = partner[cur]
            seen.add(w)
            cur = glue[w]
        loops += 1
    keep.sort()
    return tuple(keep), loops


def bracket_state_sum(d: SpatialDiagram) -> LaurentPoly:
    """Plain 2^c enumeration of smoothing states (reference implementation)."""
    if len(d.crossings) > 16:
        raise DiagramError("state enumeration limited to 16 crossings")
    nxt = _strand_successor(d)
    free = _free_loops(d)
    cs = [c.slots for c in d.crossings]
    total = LaurentPoly()
    for mask in range(1 << len(cs)):
        parent = {h: h for s in cs for h in s}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        a_count = 0
        for i, s in enumerate(cs):
            if mask >> i & 1:
                union(s[0], s[1]); union(s[2], s[3])
                a_count += 1
            else:
                union(s[0], s[3]); union(s[1], s[2])
        for h, p in nxt.items():
            union(h, p)
        loops = len({find(h) for h in parent}) + free
        b_count = len(cs) - a_count
        total = total + DELTA ** (loops - 1) * LaurentPoly.monomial(1, a_count - b_count)
    if not cs:
        return DELTA ** (free - 1) if free else LaurentPoly.const(1)
    return total


def writhe(d: SpatialDiagram) -> int:
    return sum(crossing_signs(d).values())


def jones(d: SpatialDiagram) -> LaurentPoly:
    """Jones polynomial in t = A^-4 via the writhe-normalised bracket."""
    w = writhe(d)
    f = LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w) * kauffman_bracket(d)
    try:
        return f.substitute_power(-1).rescale(4)
    except ValueError:
        raise DiagramError("Jones polynomial of a link has half-integer powers") from None


# ---------------------------------------------------------------------------
# identification against the built-in table


@lru_cache(maxsize=None)
def knot_table():
    """name -> (crossing number, Jones) for prime table knots and mirrors."""
    from .knots import PRIME_NAMES, knot_diagram

    table = {"unknot": (0, LaurentPoly.const(1))}
    for name in PRIME_NAMES:
        d = knot_diagram(name)
        table[name] = (len(d.crossings), jones(d))
    return table


@lru_cache(maxsize=None)
def _sum_closure(max_summands: int = 4):
    from itertools import combinations_with_replacement

    table = knot_table()
    prime = sorted(n for n in table if n != "unknot")
    by_jones: dict[LaurentPoly, list[str]] = {table["unknot"][1]: ["unknot"]}
    for k in range(1, max_summands + 1):
        for combo in combinations_with_replacement(prime, k):
            p = LaurentPoly.const(1)
            for n in combo:
                p = p * table[n][1]
            by_jones.setdefault(p, []).append("#".join(combo))
    return by_jones


def jones_of_name(name: str) -> LaurentPoly:
    """Jones polynomial of a '#'-joined sum of table names."""
    table = knot_table()
    p = LaurentPoly.const(1)
    for part in name.split("#"):
        if part not in table:
            raise KeyError(f"{part!r} is not in the knot table")
        p = p * table[part][1]
    return p


def identify_jones(p: LaurentPoly) -> str:
    names = _sum_closure().get(p, [])
    return names[0] if len(names) == 1 else "unknown"


def identify(d: SpatialDiagram) -> str:
    """Name of the knot among sums of at most four table knots, or 'unknown'."""
    return identify_jones(jones(d))


def crossing_number(name: str) -> int | None:
    """Crossing number of a '#'-joined sum of table knots.

    Every table knot is alternating, and crossing number is additive over
    sums of alternating knots.  Names outside the table give None.
    """
    table = knot_table()
    total = 0
    for part in name.split("#"):
        if part not in table:
            return None
        total += table[part][0]
    return total
