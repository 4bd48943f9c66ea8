from gmpy2 import mpq

from dptorsor.minrep import (build_grading, build_minuscule_rep,
                             embed_level1_point, level1_embedding,
                             restrict_to_predecessor)
from dptorsor.rootsys import SYSTEMS

DIMS = {"a4": 10, "d5": 16, "e6": 27, "e7": 56}


def test_dimensions_and_weight_multiplicity_one():
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        assert rep.dim == DIMS[s]
        assert len(set(rep.weights)) == rep.dim


def test_operators_shift_weights_by_simple_roots():
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        rs = rep.rs
        for node in range(1, rs.rank + 1):
            alpha = rs.simple_root(node)
            for src, (dst, sign) in rep.raising[node].items():
                assert sign in (1, -1)
                got = tuple(rep.weights[src][k] + alpha[k] for k in range(rs.rank))
                assert rep.weights[dst] == got
            for src, (dst, sign) in rep.lowering[node].items():
                got = tuple(rep.weights[src][k] - alpha[k] for k in range(rs.rank))
                assert rep.weights[dst] == got


def test_lowering_is_transpose_of_raising():
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        for node in range(1, rep.rs.rank + 1):
            flipped = {dst: (src, sign) for src, (dst, sign) in rep.raising[node].items()}
            assert flipped == rep.lowering[node]


def test_commutator_acts_as_cartan_pairing():
    # [e_i, f_i] must act on the weight-lam line as <lam, alpha_i^vee>
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        rs = rep.rs
        for node in range(1, rs.rank + 1):
            e, f = rep.raising[node], rep.lowering[node]
            for k in range(rep.dim):
                ef = 0
                if k in f:
                    dst, s1 = f[k]
                    if dst in e:
                        back, s2 = e[dst]
                        assert back == k
                        ef = s1 * s2
                fe = 0
                if k in e:
                    dst, s1 = e[k]
                    if dst in f:
                        back, s2 = f[dst]
                        assert back == k
                        fe = s1 * s2
                assert ef - fe == rs.pairing(rep.weights[k], node)


def test_grading_levels_partition_by_marked_coroot():
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        grading = build_grading(s)
        seen = sorted(i for block in grading.levels for i in block)
        assert seen == list(range(rep.dim))
        assert grading.levels[0] == (rep.index[rep.rs.highest_weight()],)
        top = rep.weights[grading.levels[0][0]]
        for lvl, block in enumerate(grading.levels):
            for i in block:
                drop = tuple(a - b for a, b in zip(top, rep.weights[i]))
                coords = rep.rs.root_coords(drop)
                assert coords[rep.rs.marked - 1] == lvl


def test_level1_embedding_is_sign_consistent():
    for s in ("d5", "e6", "e7"):
        pred_id, sigma, beta, signs = level1_embedding(s)
        pred = build_minuscule_rep(pred_id)
        rep = build_minuscule_rep(s)
        lev1 = build_grading(s).levels[1]
        assert sorted(beta.values()) == sorted(lev1)
        assert sorted(beta) == list(range(pred.dim))
        assert set(signs.values()) <= {1, -1}
        for m in range(1, pred.rs.rank + 1):
            for src, (dst, sgn) in pred.lowering[m].items():
                par = rep.lowering[sigma[m]][beta[src]]
                assert par == (beta[dst], sgn * signs[src] * signs[dst])


def test_embed_level1_point_places_scaled_coordinates():
    for s in ("d5", "e6", "e7"):
        pred_id, _, beta, signs = level1_embedding(s)
        pred_dim = build_minuscule_rep(pred_id).dim
        point = [mpq(k + 1, 3) for k in range(pred_dim)]
        embedded = embed_level1_point(s, point)
        assert sorted(embedded) == sorted(beta.values())
        for pr in range(pred_dim):
            assert embedded[beta[pr]] == signs[pr] * point[pr]


def test_restrict_to_predecessor_matches_embedding_weights():
    for s in ("d5", "e6", "e7"):
        rep = build_minuscule_rep(s)
        table = restrict_to_predecessor(rep)
        pred_id, _, beta, _ = level1_embedding(s)
        pred = build_minuscule_rep(pred_id)
        assert len(table) == pred.dim
        for pr, par in beta.items():
            assert table[rep.weights[par]] == pred.weights[pr]
