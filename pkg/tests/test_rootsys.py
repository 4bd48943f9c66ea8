from gmpy2 import mpq

from dptorsor.rootsys import (SYSTEMS, build_root_system, degree_of,
                              predecessor, system_of_degree, weyl_group_order,
                              weyl_orbit)

ROOT_COUNTS = {"a4": 10, "d5": 20, "e6": 36, "e7": 63}
WEYL_ORDERS = {"a4": 120, "d5": 1920, "e6": 51840, "e7": 2903040}
ORBIT1 = {"a4": 5, "d5": 10, "e6": 27, "e7": 126}
DIMS = {"a4": 10, "d5": 16, "e6": 27, "e7": 56}


def test_cartan_matrices_are_symmetric_with_correct_rank():
    for s in SYSTEMS:
        rs = build_root_system(s)
        assert len(rs.cartan) == rs.rank
        for i in range(rs.rank):
            assert rs.cartan[i][i] == 2
            for j in range(rs.rank):
                assert rs.cartan[i][j] == rs.cartan[j][i]
                assert i == j or rs.cartan[i][j] in (0, -1)


def test_positive_root_counts():
    for s in SYSTEMS:
        assert len(build_root_system(s).positive_roots) == ROOT_COUNTS[s]


def test_simple_roots_are_positive_roots():
    for s in SYSTEMS:
        rs = build_root_system(s)
        for node in range(1, rs.rank + 1):
            assert rs.simple_root(node) in rs.positive_roots


def test_reflections_are_involutions_preserving_inner_products():
    for s in SYSTEMS:
        rs = build_root_system(s)
        probe = tuple(range(1, rs.rank + 1))
        for node in range(1, rs.rank + 1):
            once = rs.reflect(probe, node)
            assert rs.reflect(once, node) == probe
            assert rs.inner(once, once) == rs.inner(probe, probe)


def test_weyl_group_orders():
    for s in SYSTEMS:
        assert weyl_group_order(build_root_system(s)) == WEYL_ORDERS[s]


def test_orbit_sizes():
    for s in SYSTEMS:
        rs = build_root_system(s)
        assert len(weyl_orbit(rs, rs.first_fundamental_weight())) == ORBIT1[s]
        assert len(weyl_orbit(rs, rs.highest_weight())) == DIMS[s]


def test_orbit_is_closed_under_reflections_and_contains_seed():
    rs = build_root_system("d5")
    orbit = weyl_orbit(rs, rs.highest_weight())
    assert rs.highest_weight() in orbit
    assert list(orbit) == sorted(set(orbit))
    members = set(orbit)
    for lam in orbit:
        for node in range(1, rs.rank + 1):
            assert rs.reflect(lam, node) in members


def test_degree_dictionary_roundtrip():
    for s in SYSTEMS:
        assert system_of_degree(degree_of(s)) == s
    assert [degree_of(s) for s in SYSTEMS] == [5, 4, 3, 2]


def test_inverse_cartan_is_exact_inverse():
    for s in SYSTEMS:
        rs = build_root_system(s)
        r = rs.rank
        for i in range(r):
            for j in range(r):
                acc = sum((rs.cartan[i][k] * rs.inverse_cartan[k][j] for k in range(r)),
                          mpq(0))
                assert acc == (1 if i == j else 0)


def test_predecessor_chain():
    names = []
    rs = build_root_system("e7")
    while True:
        entry = predecessor(rs)
        if entry is None:
            break
        rs, sigma = entry
        names.append(rs.system)
        assert sorted(sigma) == list(range(1, rs.rank + 1))
    assert names == ["e6", "d5", "a4"]
