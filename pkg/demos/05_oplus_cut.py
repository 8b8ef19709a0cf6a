"""⊕^{n,k}: a ladder of 2n rows with k vertical rungs.

When a rung carries no crossings the diagram can be cut along it and each
side closed up without new crossings, so the crossing count splits
exactly.
"""

from spatialknots.constructors import (build_G, build_oplus, cut_vertical,
                                       recursion_parameter)
from spatialknots.verify import verify_oplus

n, k = 2, 3
d = build_oplus(n, k, "3_1", "4_1")
print(f"⊕^{{{n},{k}}}: {len(d.crossings)} crossings, {len(d.nodes)} nodes")
for i in range(1, k + 1):
    left, right = cut_vertical(d, i)
    g = build_G(n, k, i, "3_1", "4_1")
    print(f"  cut at {i}: {len(left.crossings)} + {len(right.crossings)}, "
          f"G has {len(g.crossings)}")
    print("   ", verify_oplus(n, k, i, "3_1", "4_1").lines()[0])

for k, i in [(5, 1), (5, 2), (5, 4), (6, 2)]:
    print(f"s(k={k}, i={i}) = {recursion_parameter(k, i)}")
