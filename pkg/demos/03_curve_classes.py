"""Curve classes on del Pezzo surfaces, found by pure lattice search.

Pic X = Z^(r+1) with the intersection form diag(1, -1, ..., -1) in the
basis (hyperplane; blow-up classes) and K = (-3; -1, ..., -1).  Solving
C.C = -1, C.K = -1 enumerates the exceptional curves; C.C = 0, C.K = -2
the conic pencils.  Nothing here touches root systems -- this is the
independent oracle the representation-theoretic side is checked against.
"""

from dptorsor import (build_minuscule_rep, canonical_class, conic_classes,
                      conic_dictionary, exceptional_classes,
                      graph_automorphism_order, incidence_graph, intersect,
                      weight_curve_bijection)

for r in (4, 5, 6, 7):
    exc = exceptional_classes(r)
    con = conic_classes(r)
    order = graph_automorphism_order(incidence_graph(r))
    print(f"rank {r} (degree {9 - r}): {len(exc):3d} exceptional, "
          f"{len(con):3d} conic, graph automorphisms {order}")

# degree 5: the ten (-1)-classes are the 4 blow-up classes, the 6 lines
# through point pairs -- in multiplicity coordinates (a; b) with
# C = a*line - sum b_i * points
print("\ndegree-5 exceptional classes:")
for c in exceptional_classes(4):
    print(f"  ({c[0]}; {' '.join(str(b) for b in c[1:])})")

k = canonical_class(7)
print(f"\nK.K for rank 7: {intersect(k, k)}  (the del Pezzo degree 2)")

# the weight <-> curve dictionary: weights of the 56-dim representation
# biject with the 56 exceptional classes of the degree-2 surface so that
# weight inner products translate affinely into intersection numbers
for system in ("a4", "d5", "e6", "e7"):
    rep = build_minuscule_rep(system)
    bij = weight_curve_bijection(system)
    assert sorted(bij) == list(range(rep.dim))
    table = conic_dictionary(system)
    print(f"{system}: weight/curve bijection on {rep.dim} vertices, "
          f"{len(table)} conic labels")
