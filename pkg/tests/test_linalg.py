import random
from fractions import Fraction
from itertools import combinations

import pytest

from avor3 import linalg


def random_matrix(rng, n, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_identity_and_transpose():
    assert linalg.identity(2) == [[1, 0], [0, 1]]
    assert linalg.transpose([[1, 2], [3, 4]]) == [[1, 3], [2, 4]]


def test_mat_mul_matches_manual():
    a = [[1, 2], [3, 4]]
    b = [[5, 6], [7, 8]]
    assert linalg.mat_mul(a, b) == [[19, 22], [43, 50]]
    assert linalg.mat_vec(a, [1, 1]) == [3, 7]


def test_mat_int_rejects_fractions():
    assert linalg.mat_int([[Fraction(2), Fraction(-1)]]) == [[2, -1]]
    with pytest.raises(ValueError):
        linalg.mat_int([[Fraction(1, 2)]])


def test_rank_and_det_small_cases():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.det([[2, 0], [0, 3]]) == 6
    assert linalg.det([[0, 1], [1, 0]]) == -1


def test_det_multiplicative():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 4)
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        assert linalg.det(linalg.mat_mul(a, b)) == linalg.det(a) * linalg.det(b)


def test_solve_and_inverse_roundtrip():
    rng = random.Random(11)
    done = 0
    while done < 20:
        n = rng.randint(1, 4)
        a = random_matrix(rng, n)
        if linalg.det(a) == 0:
            continue
        x = [rng.randint(-4, 4) for _ in range(n)]
        b = linalg.mat_vec(a, x)
        assert linalg.solve(a, b) == [Fraction(v) for v in x]
        inv = linalg.inverse(a)
        assert linalg.mat_mul(a, inv) == [[Fraction(int(i == j)) for j in range(n)]
                                          for i in range(n)]
        done += 1
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


def test_solve_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert linalg.solve_in_span(basis, [1, 1, 2]) == [Fraction(1), Fraction(1)]
    assert linalg.solve_in_span(basis, [0, 0, 1]) is None


def test_hermite_form_properties():
    rng = random.Random(13)
    for _ in range(40):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        h, u = linalg.hermite_form(a)
        assert linalg.det(u) in (1, -1)
        assert linalg.mat_mul(u, a) == h
        # pivots positive, rows below a pivot zero in that column
        pivots = []
        for row in h:
            nz = [j for j, x in enumerate(row) if x]
            if nz:
                assert row[nz[0]] > 0
                pivots.append(nz[0])
        assert pivots == sorted(pivots)


def test_int_kernel_is_saturated_orthogonal_complement():
    rng = random.Random(17)
    for _ in range(40):
        rows = rng.randint(1, 3)
        cols = rng.randint(2, 5)
        a = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        ker = linalg.int_kernel(a)
        for k in ker:
            assert all(sum(x * y for x, y in zip(row, k)) == 0 for row in a)
        assert len(ker) == cols - linalg.rank(a)
        if ker:
            # saturated: the kernel basis has unit elementary divisors
            h, _ = linalg.hermite_form(linalg.transpose(ker))
            pivots = [next(x for x in row if x) for row in h if any(row)]
            assert all(p == 1 for p in pivots)


def test_independent_triple():
    vs = [(1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    triple = linalg.independent_triple(vs)
    assert triple is not None
    assert linalg.rank([list(vs[i]) for i in triple]) == 3
    assert linalg.independent_triple([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) is None


def principal_minor_sum(a, k):
    n = len(a)
    total = 0
    for idx in combinations(range(n), k):
        total += linalg.det([[a[i][j] for j in idx] for i in idx])
    return total


def test_char_poly_elementary_matches_principal_minors():
    # coefficient of t^k in det(I + t a) is the sum of k x k principal minors
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, -3, 3)
        coeffs = linalg.char_poly_elementary(a)
        assert len(coeffs) == n + 1
        for k in range(n + 1):
            assert coeffs[k] == principal_minor_sum(a, k)


def test_exterior_power_matrix_is_multiplicative():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 4)
        k = rng.randint(1, n)
        a, b = random_matrix(rng, n, -3, 3), random_matrix(rng, n, -3, 3)
        lhs = linalg.exterior_power_matrix(linalg.mat_mul(a, b), k)
        rhs = linalg.mat_mul(linalg.exterior_power_matrix(a, k),
                             linalg.exterior_power_matrix(b, k))
        assert lhs == rhs


def test_exterior_power_top_is_det():
    a = [[1, 2, 0], [0, 1, 3], [1, 0, 1]]
    assert linalg.exterior_power_matrix(a, 3) == [[linalg.det(a)]]
