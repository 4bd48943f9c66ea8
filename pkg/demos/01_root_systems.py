"""Walk the four marked diagrams: sizes, orders, and orbits.

Each del Pezzo degree d = 5, 4, 3, 2 corresponds to a simply-laced root
system of rank r = 9 - d with one marked node.  This script prints the
basic combinatorial dictionary that everything else builds on.
"""

from dptorsor import (SYSTEMS, build_root_system, degree_of, weyl_group_order,
                      weyl_orbit)

for system in SYSTEMS:
    rs = build_root_system(system)
    omega = rs.highest_weight()            # fundamental weight at the marked node
    omega1 = rs.first_fundamental_weight()
    print(f"{system}: rank {rs.rank}, degree {degree_of(system)}, "
          f"marked node {rs.marked}")
    print(f"  positive roots : {len(rs.positive_roots)}")
    print(f"  Weyl order     : {weyl_group_order(rs)}")
    print(f"  |W.omega|      : {len(weyl_orbit(rs, omega))}   (weights of V)")
    print(f"  |W.omega_1|    : {len(weyl_orbit(rs, omega1))}   (quadric labels)")

# the marked weight orbit sizes 10 / 16 / 27 / 56 are the dimensions of the
# minuscule representations; the first-fundamental orbits 5 / 10 / 27 / 126
# count the quadratic equations of the cone built in demo 04.

rs = build_root_system("a4")
print("\na4 Cartan matrix:")
for row in rs.cartan:
    print("  " + " ".join(f"{v:2d}" for v in row))

# reflections are exact involutions on the weight lattice
lam = (1, 2, 3, 4)
for node in range(1, 5):
    assert rs.reflect(rs.reflect(lam, node), node) == lam
print("\nsimple reflections square to the identity: checked on", lam)
