"""The quadratic cone ideal and its exponential section.

S^2(V) contains exactly one copy of the representation with highest
weight omega_1; projecting onto it gives one quadric P_mu per orbit
weight mu (plus a 7-dimensional zero-weight block for rank 7).  The
vanishing of all P_mu cuts out the affine cone over the marked flag
variety.  For a4 these are literally the five Grassmannian Pluecker
relations, which we verify against 2x2 minors of random matrices.
"""

import random

from gmpy2 import mpq

from dptorsor import (SYSTEMS, cone_ideal, exp_point, invariant_cubic,
                      plucker_point, quadratic_section)

for system in SYSTEMS:
    ideal = cone_ideal(system)
    r = ideal.rep.rs.rank
    extra = f" + {len(ideal.zero_generators)} zero-weight" if ideal.zero_generators else ""
    print(f"{system}: {len(ideal.generator_weights)} generators of "
          f"{r - 1} monomials each{extra}")

# the five a4 quadrics, in weight coordinates
ideal = cone_ideal("a4")
for mu in ideal.generator_weights:
    terms = ideal.generators[mu].poly.sorted_terms()
    body = " ".join(f"{'+' if c > 0 else '-'} x{a}*x{b}" for (a, b), c in terms)
    print(f"  P{mu} = {body}")

# Pluecker vectors of random 2x5 matrices always satisfy them
rng = random.Random(0)
for _ in range(50):
    m = [[mpq(rng.randint(-9, 9)) for _ in range(5)] for _ in range(2)]
    assert ideal.vanishes_at(plucker_point(m))
print("50 random Pluecker vectors lie on the a4 cone")

# parametrize the big cell: exp(x) = (1, x, p(x), q(x)) with p quadratic
# and q cubic in the level-1 coordinates
for system in SYSTEMS:
    ideal = cone_ideal(system)
    lev1 = ideal.grading.levels[1]
    x = [mpq(k - 3, 2) for k in range(len(lev1))]
    point = exp_point(ideal, x)
    assert ideal.vanishes_at(point)
    n2 = len(quadratic_section(system))
    print(f"{system}: exp section fills {n2} level-2 coordinates, point on cone")

cubic = invariant_cubic("e7")
print(f"\ne7 level-3 coordinate is driven by an invariant cubic with "
      f"{len(cubic.terms)} terms on 27 variables")
