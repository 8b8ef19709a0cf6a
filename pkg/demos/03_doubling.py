"""n parallel copies of a knot diagram glued into one θ^n diagram.

Each crossing of the 7-crossing diagram of 3_1 # 4_1 turns into an n × n
grid, so the doubled diagram has 7n² crossings.  Signs at one grid per arc
are switched so no two copies of the same colour form an unknot.
"""

from spatialknots.constructors import check_omega_membership, connected_sum, double_diagram
from spatialknots.gamma import find_bicoloured_triangle, gamma
from spatialknots.gauss import find_partition, from_diagram
from spatialknots.knots import knot_diagram
from spatialknots.verify import verify_square

base = connected_sum("3_1", "4_1")
code = from_diagram(base)
print("Gauss code:", code.format())
p = find_partition(code)
print("partition:", code.abs_sequence[p.start:p.end], "|", p.alpha2(code))

# a prime alternating diagram reads 1..c,1..c and admits no partition
print("trefoil partition:", find_partition(from_diagram(knot_diagram("3_1"))))

for n in (2, 3):
    d = double_diagram(base, n)
    rep = check_omega_membership(d, "3_1", "4_1")
    tri = find_bicoloured_triangle(gamma(d))
    print(f"\nn={n}: {len(d.crossings)} crossings, {rep.verdict}, triangle {tri}")
    print("   ", verify_square("3_1", "4_1", n).lines()[0])
