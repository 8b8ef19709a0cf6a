"""A theta-curve with a trefoil in one edge and a figure-eight in another.

Walks through the crossing bookkeeping for θ_{3_1,4_1}: the crossing
matrix, the crossing-free path between the two nodes, the three knots it
splits into, and the two counting bounds for theta diagrams.
"""

from spatialknots.constructors import build_theta
from spatialknots.diagram import L, connecting_arc, crossing_matrix, delete_edge, split_along
from spatialknots.invariants import identify
from spatialknots.verify import verify_eq1, verify_ineq

theta = build_theta("3_1", "4_1")
print("crossings:", len(theta.crossings))

m = crossing_matrix(theta)
for a in ("x1", "y1", "z1"):
    print("  ", a, [m[a, b] for b in ("x1", "y1", "z1")])

# deleting y leaves x ∪ z, a diagram of the connected sum
print("x ∪ z is", identify(delete_edge(theta, L("y1"))))

# no two edges cross, so a path from one node to the other avoids every arc
gamma = connecting_arc(theta)
print("connecting path runs in face", gamma.faces[0])
for e, k in zip(theta.edge_labels, split_along(theta, gamma)):
    print(f"  {e} ∪ γ: {len(k.crossings)} crossings, {identify(k)}")

for rep in (verify_eq1(theta, "3_1", "4_1"), verify_ineq(theta, "3_1", "4_1")):
    print("\n".join(rep.lines()))
