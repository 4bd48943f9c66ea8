"""Minuscule representations: weight bases, signed operators, gradings.

The representation V(omega) attached to the marked node has every weight
in a single Weyl orbit (multiplicity one everywhere), so a basis is just
the orbit itself and each Chevalley operator is a signed partial
permutation of the basis.  The marked coroot grades V into levels
1 / (dim-2)/... used by the exponential section later.
"""

from dptorsor import (SYSTEMS, build_grading, build_minuscule_rep,
                      level1_embedding)

for system in SYSTEMS:
    rep = build_minuscule_rep(system)
    sizes = [s for s in build_grading(system).sizes() if s]
    edges = sum(len(rep.raising[n]) for n in range(1, rep.rs.rank + 1))
    print(f"{system}: dim {rep.dim}, grading {' + '.join(map(str, sizes))}, "
          f"{edges} raising edges")

# the commutator [e_i, f_i] must act on each weight line by the Cartan
# pairing <lambda, alpha_i^vee>; spot-check it for e6
rep = build_minuscule_rep("e6")
rs = rep.rs
for node in range(1, rs.rank + 1):
    e, f = rep.raising[node], rep.lowering[node]
    for k in range(rep.dim):
        ef = e[f[k][0]][1] * f[k][1] if k in f else 0
        fe = f[e[k][0]][1] * e[k][1] if k in e else 0
        assert ef - fe == rs.pairing(rep.weights[k], node)
print("e6: [e_i, f_i] acts by the Cartan pairing on all 27 weight lines")

# level-1 blocks restrict to the predecessor representation: the 27-dim
# level-1 block of e7 is a copy of the e6 minuscule, and so on down to a4
chain = []
for system in ("e7", "e6", "d5"):
    pred_id, sigma, beta, signs = level1_embedding(system)
    flips = sum(1 for v in signs.values() if v < 0)
    chain.append(f"{system} -> {pred_id} ({len(beta)} weights, {flips} sign flips)")
print("\nlevel-1 restriction chain:")
for line in chain:
    print("  " + line)
