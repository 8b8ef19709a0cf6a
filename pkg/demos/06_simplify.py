"""Scramble crossing-free diagrams with random moves, then undo the damage.

The search only knows Reidemeister moves and the slide of a strand across
a graph node; it never looks at the scrambling trace.
"""

import time

from spatialknots.corpus import scrambled_unknots
from spatialknots.knots import knot_diagram
from spatialknots.moves import simplify

t0 = time.perf_counter()
for j, d in enumerate(scrambled_unknots(10, steps=8, seed=3)):
    t = time.perf_counter()
    r = simplify(d, budget=100_000)
    moves = " ".join(m.kind for m in r.trace)
    print(f"{j:2d} {d.family!s:10} {len(d.crossings):2d} -> {r.crossings} "
          f"({r.explored} diagrams, {time.perf_counter() - t:.2f} s) {moves}")
print(f"total {time.perf_counter() - t0:.1f} s")

# a trefoil has nowhere to go
print("trefoil:", simplify(knot_diagram("3_1"), budget=2000).crossings)
