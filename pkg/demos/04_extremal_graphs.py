"""Largest graphs on n blue and n red vertices without a bicoloured triangle.

The counting bound 3n²/2 - n is compared with exact maxima found by
enumeration.  The maxima are n²: both colour classes complete plus a
perfect matching between them.
"""

import time

from spatialknots.gamma import extremal_enumeration, lemma_bound

print("n, max_edges, bound_3n2/2-n, witness_edge_list")
for n in range(1, 5):
    t = time.perf_counter()
    r = extremal_enumeration(n)
    print(r.row())
    print(f"   {r.method}, {r.graphs_checked} graphs, {time.perf_counter() - t:.2f} s")

# n = 1 sits above the bound, n = 2 meets it, larger n stay below
print([(n, extremal_enumeration(n).max_edges <= lemma_bound(n)) for n in range(1, 5)])
