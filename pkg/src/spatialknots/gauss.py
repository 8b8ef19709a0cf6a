"""Gauss codes of knot diagrams and the partition search."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import DiagramError, SpatialDiagram, components

__all__ = [
    "Visit",
    "GaussCode",
    "Partition",
    "traverse",
    "crossing_signs",
    "from_diagram",
    "find_partition",
    "is_double_run",
    "brute_force_partitions",
]


@dataclass(frozen=True)
class Visit:
    crossing: int
    entry_slot: int

    @property
    def over(self) -> bool:
        return self.entry_slot % 2 == 1


def _step(d: SpatialDiagram, h: int) -> int:
    """From an outgoing crossing half-edge, the next incoming crossing half-edge."""
    p = d.pair[h]
    while d.location[p][0] == "V":
        v = d.node_by_id[d.location[p][1]]
        if v.valence != 2:
            raise DiagramError("strand runs into a graph node")
        p = d.pair[v.rotation[1] if v.rotation[0] == p else v.rotation[0]]
    return p


def traverse(d: SpatialDiagram, start: int | None = None) -> list[Visit]:
    """Walk a single closed strand starting at slot 0 of the lowest crossing.

    ``start`` overrides the incoming half-edge where the walk begins.
    """
    if not d.crossings:
        return []
    if start is None:
        start = d.crossings[0].slots[0]
    visits = []
    h = start
    while True:
        _, cid, slot = d.location[h]
        visits.append(Visit(cid, slot))
        h = _step(d, d.crossing_by_id[cid].slots[(slot + 2) % 4])
        if h == start:
            return visits
        if len(visits) > 2 * len(d.crossings):
            raise DiagramError("strand does not close up")


def _strand_cover(d: SpatialDiagram) -> list[list[Visit]]:
    """Traverse every closed strand (link components) of a crossing diagram."""
    seen = set()
    out = []
    for c in d.crossings:
        for s in (0, 1):
            h = c.slots[s]
            if h in seen:
                continue
            vs = traverse(d, h)
            for v in vs:
                sl = d.crossing_by_id[v.crossing].slots
                seen.add(sl[v.entry_slot])
                seen.add(sl[(v.entry_slot + 2) % 4])
            out.append(vs)
    return out


def crossing_signs(d: SpatialDiagram) -> dict[int, int]:
    """Sign of every crossing for the traversal orientation.

    With the under-strand running from slot 0 to slot 2 the crossing is
    positive when the over-strand runs from slot 3 to slot 1.
    """
    under, over = {}, {}
    for comp in _strand_cover(d):
        for v in comp:
            (over if v.over else under)[v.crossing] = v.entry_slot
    return {cid: (1 if (under[cid] == 0) == (over[cid] == 3) else -1) for cid in under}


@dataclass(frozen=True)
class GaussCode:
    """Cyclic sequence of (label, over?, sign) visits."""

    visits: tuple[tuple[int, bool, int], ...]

    def __post_init__(self):
        seen: dict[int, list[tuple[bool, int]]] = {}
        for lab, ov, sg in self.visits:
            if lab <= 0 or sg not in (1, -1):
                raise ValueError(f"bad visit {(lab, ov, sg)}")
            seen.setdefault(lab, []).append((ov, sg))
        for lab, occ in seen.items():
            if len(occ) != 2 or occ[0][0] == occ[1][0] or occ[0][1] != occ[1][1]:
                raise ValueError(f"label {lab} is not visited once over and once under with one sign")

    @classmethod
    def from_abs(cls, seq) -> "GaussCode":
        """Code with the given label sequence; first visit over, signs +."""
        seen = set()
        out = []
        for lab in seq:
            out.append((lab, lab not in seen, 1))
            seen.add(lab)
        return cls(tuple(out))

    @property
    def abs_sequence(self) -> tuple[int, ...]:
        return tuple(v[0] for v in self.visits)

    def __len__(self):
        return len(self.visits)

    def format(self) -> str:
        return ",".join(f"{'O' if o else 'U'}{k}{'+' if s > 0 else '-'}"
                        for k, o, s in self.visits)

    __str__ = format

    @classmethod
    def parse(cls, text: str) -> "GaussCode":
        text = text.strip()
        if not text:
            return cls(())
        out = []
        for tok in text.split(","):
            m = re.fullmatch(r"\s*([OU])(\d+)([+-])\s*", tok)
            if not m:
                raise ValueError(f"bad Gauss token {tok!r}")
            out.append((int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
        return cls(tuple(out))


def from_diagram(d: SpatialDiagram) -> GaussCode:
    """Gauss code from the lowest crossing, entering on its under-strand.

    Crossings are renumbered 1, 2, ... in order of first visit.
    """
    if d.crossings and len(components(d)) != 1:
        raise DiagramError("Gauss codes are defined for single-component knot diagrams")
    if any(v.valence != 2 for v in d.nodes):
        raise DiagramError("Gauss codes need a knot diagram without graph nodes")
    visits = traverse(d)
    if len(visits) != 2 * len(d.crossings):
        raise DiagramError("diagram has more than one strand")
    signs = crossing_signs(d)
    names: dict[int, int] = {}
    out = []
    for v in visits:
        names.setdefault(v.crossing, len(names) + 1)
        out.append((names[v.crossing], v.over, signs[v.crossing]))
    return GaussCode(tuple(out))


@dataclass(frozen=True)
class Partition:
    """Cut points placed just before visits ``start`` and ``end``.

    ``alpha1`` covers visits start..end-1, ``alpha2`` the rest cyclically.
    """

    start: int
    end: int

    def arcs(self, length: int) -> tuple[range, list[int]]:
        a1 = range(self.start, self.end)
        a2 = [i % length for i in range(self.end, self.start + length)]
        return a1, a2

    def alpha1(self, code: GaussCode) -> tuple[int, ...]:
        return code.abs_sequence[self.start:self.end]

    def alpha2(self, code: GaussCode) -> tuple[int, ...]:
        s = code.abs_sequence
        return s[self.end:] + s[:self.start]


def find_partition(code: GaussCode) -> Partition | None:
    """First cut pair (lexicographic) where both arcs revisit some crossing."""
    seq = code.abs_sequence
    n = len(seq)
    for i in range(n):
        # first position where the arc starting at i has a repeat
        seen = set()
        first_rep = None
        for j in range(i, n):
            if seq[j] in seen:
                first_rep = j
                break
            seen.add(seq[j])
        if first_rep is None:
            continue
        for j in range(first_rep + 1, n):
            rest = seq[j:] + seq[:i]
            if len(set(rest)) < len(rest):
                return Partition(i, j)
    return None


def brute_force_partitions(seq) -> list[tuple[int, int]]:
    """Every cut pair whose two arcs both contain a repeated label."""
    n = len(seq)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = seq[i:j], seq[j:] + seq[:i]
            if len(set(a)) < len(a) and len(set(b)) < len(b):
                out.append((i, j))
    return out


def is_double_run(code: GaussCode) -> bool:
    """Whether the label sequence reads 1..c,1..c after rotation and renaming."""
    seq = code.abs_sequence
    n = len(seq)
    if n == 0:
        return True
    c = n // 2
    return all(seq[i] == seq[i + c] for i in range(c)) and len(set(seq[:c])) == c
