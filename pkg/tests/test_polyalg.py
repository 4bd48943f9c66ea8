import random

from gmpy2 import mpq

from dptorsor.polyalg import (Poly, RatMatrix, kernel_of_stacked, mono_mul,
                              q_str, vec_content_free_row, vec_primitive)


def test_poly_arithmetic_expands_products():
    x0, x1 = Poly.variable(0), Poly.variable(1)
    square = (x0 + x1) * (x0 + x1)
    assert square == Poly({(0, 0): 1, (0, 1): 2, (1, 1): 1})
    assert (square - square) == Poly.zero()
    assert not Poly.zero()


def test_products_emit_sorted_monomials():
    p = Poly.variable(2) * Poly.variable(0) * Poly.variable(1)
    assert p == Poly({(0, 1, 2): 1})
    assert mono_mul((3, 1), (2,)) == (1, 2, 3)


def test_evaluate_and_diff_are_consistent():
    p = Poly({(0, 0, 1): 2, (1, 2): -3, (): 7})
    point = {0: mpq(2), 1: mpq(1, 3), 2: mpq(-5)}
    assert p.evaluate(point) == 2 * 4 * mpq(1, 3) + (-3) * mpq(1, 3) * (-5) + 7
    assert p.diff(0) == Poly({(0, 1): 4})
    assert p.diff(1) == Poly({(0, 0): 2, (2,): -3})
    assert p.diff(3) == Poly.zero()


def test_scale_vars_and_rename_vars():
    p = Poly({(0, 1): 1, (1, 1): 2})
    assert p.scale_vars({0: mpq(3), 1: mpq(-2)}) == Poly({(0, 1): -6, (1, 1): 8})
    renamed = p.rename_vars({0: (5, 1), 1: (4, -1)})
    assert renamed == Poly({(4, 5): -1, (4, 4): 2})


def test_homogeneity_and_primitive():
    p = Poly({(0, 1): mpq(4, 6), (1, 1): mpq(-2, 3)})
    prim = p.primitive()
    assert prim == Poly({(0, 1): 1, (1, 1): -1})
    assert prim.is_homogeneous() and prim.degree() == 2
    assert not Poly({(0,): 1, (): 1}).is_homogeneous()


def test_q_str_roundtrip():
    assert q_str(mpq(-22, 8)) == "-11/4"
    assert q_str(mpq(6, 3)) == "2"


def test_vec_primitive_clears_denominators_and_content():
    v = vec_primitive([mpq(2, 3), mpq(-4, 3), mpq(0)])
    assert v == (1, -2, 0)
    assert vec_primitive([mpq(0), mpq(0)]) == (0, 0)
    row = vec_content_free_row({3: mpq(2, 5), 7: mpq(-8, 5)})
    assert row == {3: mpq(1), 7: mpq(-4)}


def test_matrix_rank_and_kernel_on_known_example():
    m = RatMatrix.from_dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert m.rank() == 2
    basis = m.kernel()
    assert len(basis) == 1
    (k,) = basis
    for row in ([1, 2, 3], [0, 1, 1]):
        assert sum(a * b for a, b in zip(row, k)) == 0


def test_modular_rank_matches_rational_rank():
    rng = random.Random(5)
    for _ in range(10):
        rows = [[mpq(rng.randint(-4, 4)) for _ in range(6)] for _ in range(4)]
        if rng.random() < 0.5:
            rows[3] = [a + b for a, b in zip(rows[0], rows[1])]
        m = RatMatrix.from_dense(rows)
        assert m.rank() == m.rank_mod(1_000_003)


def test_kernel_of_stacked_blocks():
    a = RatMatrix.from_dense([[1, -1, 0]])
    b = RatMatrix.from_dense([[0, 1, -1]])
    basis = kernel_of_stacked([a, b], 3)
    assert len(basis) == 1
    assert basis[0] in ((1, 1, 1), (-1, -1, -1))


def test_plucker_quadratic_identity_for_2x4_minors():
    # p01*p23 - p02*p13 + p03*p12 = 0 for the 2x2 minors of any 2x4 matrix
    rng = random.Random(11)
    for _ in range(25):
        m = [[mpq(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)]
             for _ in range(2)]

        def minor(i, j):
            return m[0][i] * m[1][j] - m[0][j] * m[1][i]

        acc = minor(0, 1) * minor(2, 3) - minor(0, 2) * minor(1, 3) \
            + minor(0, 3) * minor(1, 2)
        assert acc == 0
