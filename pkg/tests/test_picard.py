import pytest

from dptorsor.picard import (canonical_class, conic_class_of_mu, conic_classes,
                             conic_dictionary, exceptional_classes,
                             graph_automorphism_order, incidence_graph,
                             intersect, weight_curve_bijection)
from dptorsor.rootsys import SYSTEMS, build_root_system, weyl_orbit
from dptorsor.minrep import build_minuscule_rep

RANK = {"a4": 4, "d5": 5, "e6": 6, "e7": 7}
EXC = {4: 10, 5: 16, 6: 27, 7: 56}
CON = {4: 5, 5: 10, 6: 27, 7: 126}
AUT = {4: 120, 5: 1920, 6: 51840, 7: 2903040}


def test_canonical_class_self_intersection_is_degree():
    for r in range(4, 8):
        k = canonical_class(r)
        assert intersect(k, k) == 9 - r


def test_exceptional_class_counts_and_invariants():
    for r in range(4, 8):
        classes = exceptional_classes(r)
        assert len(classes) == EXC[r]
        assert len(set(classes)) == EXC[r]
        k = canonical_class(r)
        for c in classes:
            assert intersect(c, c) == -1
            assert intersect(c, k) == -1


def test_conic_class_counts_and_invariants():
    for r in range(4, 8):
        classes = conic_classes(r)
        assert len(classes) == CON[r]
        k = canonical_class(r)
        for c in classes:
            assert intersect(c, c) == 0
            assert intersect(c, k) == -2


def test_incidence_labels_are_small_and_symmetric():
    for r in range(4, 8):
        g = incidence_graph(r)
        n = len(g.classes)
        allowed = {0, 1, 2} if r == 7 else {0, 1}
        for i in range(n):
            assert g.labels[i][i] == -1
            for j in range(n):
                assert g.labels[i][j] == g.labels[j][i]
                if i != j:
                    assert g.labels[i][j] in allowed


def test_rank7_label_two_marks_anticanonical_partners():
    g = incidence_graph(7)
    k = canonical_class(7)
    for i, c in enumerate(g.classes):
        partner = tuple(-kv - cv for kv, cv in zip(k, c))
        j = g.classes.index(partner)
        assert g.labels[i][j] == 2
        assert all(g.labels[i][m] != 2 for m in range(len(g.classes)) if m != j)


def test_automorphism_orders_match_weyl_orders():
    for r in range(4, 8):
        assert graph_automorphism_order(incidence_graph(r)) == AUT[r]


def test_weight_curve_bijection_is_label_preserving():
    for s in SYSTEMS:
        rep = build_minuscule_rep(s)
        g = incidence_graph(RANK[s])
        bij = weight_curve_bijection(s)
        assert sorted(bij) == list(range(rep.dim))
        # pairs with equal weight inner product must map to equal labels
        seen = {}
        for i in range(rep.dim):
            for j in range(i + 1, rep.dim):
                ip = rep.rs.inner(rep.weights[i], rep.weights[j])
                lab = g.labels[bij[i]][bij[j]]
                assert seen.setdefault(ip, lab) == lab


def test_conic_class_of_mu_and_dictionary():
    for s in SYSTEMS:
        rs = build_root_system(s)
        orbit = weyl_orbit(rs, rs.first_fundamental_weight())
        table = conic_dictionary(s)
        assert sorted(table) == sorted(orbit)
        assert sorted(set(table.values())) == sorted(conic_classes(rs.rank))
        mu = orbit[0]
        assert table[mu] == conic_class_of_mu(s, mu)


def test_conic_class_of_mu_rejects_non_orbit_weight():
    rs = build_root_system("a4")
    bogus = (9, 9, 9, 9)
    with pytest.raises(Exception):
        conic_class_of_mu("a4", bogus)
