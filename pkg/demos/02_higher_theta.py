"""Theta-curves of degree 2n.

θ^n joins n copies of K1 (blue, x edges) and n copies of K2 (red, z edges)
between two nodes, colours alternating around each node.  Resolving the
nodes gives one knot, K1^n # K2^n.
"""

from spatialknots.constructors import build_theta_n, check_omega_membership, resolve_nodes
from spatialknots.gamma import find_bicoloured_triangle, gamma
from spatialknots.invariants import identify
from spatialknots.verify import verify_resolution, verify_theta_n

for n in range(1, 4):
    d = build_theta_n(n, "3_1", "4_1")
    r = resolve_nodes(d)
    # past four summands the table gives up; the Jones check still applies
    print(f"n={n}: {len(d.crossings)} crossings, resolves to {identify(r)}")
    print("   ", verify_theta_n(d, "3_1", "4_1", n).lines()[0])
    print("   ", verify_resolution("3_1", "4_1", n).lines()[0])

d = build_theta_n(2, "3_1", "4_1")
print("\nconstituents of θ^2:")
print("\n".join("  " + line for line in check_omega_membership(d, "3_1", "4_1").lines()))

# every pair of edges is crossing-free, so Γ is complete
g = gamma(d)
print("Γ edges:", g.format())
print("first bicoloured triangle:", find_bicoloured_triangle(g))
