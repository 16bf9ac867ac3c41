import random
from fractions import Fraction

import pytest

from genrandom import random_finite_complex, random_unimodular_pair
from qlverify.abelian import (
    BoundedComplex,
    FgAbelianGroup,
    IntMatrix,
    NoIntegerSolution,
    PresentedAbelianGroup,
    cohomology,
    euler_number,
    euler_number_of_cohomology,
    in_column_span,
    integer_kernel,
    smith_normal_form,
    solve_integer,
)


def fraction_det(M: IntMatrix) -> Fraction:
    """Independent determinant oracle: Gaussian elimination over Q."""
    n = M.rows
    a = [[Fraction(x) for x in row] for row in M.data]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


# ---------------------------------------------------------------------------
# Smith normal form


def test_snf_zero_matrix():
    _, D, _ = smith_normal_form([[0, 0], [0, 0]])
    assert D.data == ((0, 0), (0, 0))


def test_snf_diag_2_3():
    # expected values from gcd/lcm of the elementary divisors
    U, D, V = smith_normal_form([[2, 0], [0, 3]])
    assert D.data == ((1, 0), (0, 6))


def test_snf_gcd_row():
    _, D, _ = smith_normal_form([[4, 6]])
    assert D.data == ((2, 0),)


@pytest.mark.parametrize("seed", range(5))
def test_snf_random_properties(seed):
    rng = random.Random(seed)
    for _ in range(60):
        n, m = rng.randint(0, 5), rng.randint(0, 5)
        M = IntMatrix.from_rows(
            [[rng.randint(-12, 12) for _ in range(m)] for _ in range(n)], m
        )
        U, D, V = smith_normal_form(M)
        assert (U @ M @ V).data == D.data
        assert abs(fraction_det(U)) == 1 if n else True
        assert abs(fraction_det(V)) == 1 if m else True
        diag = [D.data[i][i] for i in range(min(n, m))]
        assert all(x >= 0 for x in diag)
        nz = [x for x in diag if x]
        assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
        for i in range(n):
            for j in range(m):
                if i != j:
                    assert D.data[i][j] == 0


def test_snf_terminates_on_larger_entries():
    rng = random.Random(17)
    for _ in range(30):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        M = IntMatrix.from_rows(
            [[rng.randint(-10**6, 10**6) for _ in range(m)] for _ in range(n)], m
        )
        U, D, V = smith_normal_form(M)
        assert (U @ M @ V).data == D.data


def test_snf_diagonal_product_is_det():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        M = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)], n)
        _, D, _ = smith_normal_form(M)
        diag_prod = 1
        for i in range(n):
            diag_prod *= D.data[i][i]
        assert diag_prod == abs(fraction_det(M))


def test_solve_and_kernel():
    M = IntMatrix.from_rows([[2, 4], [0, 3]])
    x = solve_integer(M, (6, 3))
    assert M.apply(x) == (6, 3)
    with pytest.raises(NoIntegerSolution):
        solve_integer(M, (1, 0))
    K = integer_kernel(IntMatrix.from_rows([[2, -4]]))
    assert K.cols == 1
    assert K.col(0) in ((2, 1), (-2, -1))


def test_solve_single_row_fast_path_matches_snf():
    rng = random.Random(3)
    for _ in range(200):
        m = rng.randint(1, 5)
        row = [rng.randint(-9, 9) for _ in range(m)]
        b = rng.randint(-20, 20)
        M = IntMatrix.from_rows([row], m)
        try:
            x = solve_integer(M, (b,))
            assert sum(a * c for a, c in zip(row, x)) == b
        except NoIntegerSolution:
            g = 0
            for a in row:
                g = __import__("math").gcd(g, a)
            assert g == 0 and b != 0 or (g != 0 and b % g != 0)


def test_kernel_is_saturated_and_annihilates():
    rng = random.Random(11)
    for _ in range(100):
        n, m = rng.randint(1, 4), rng.randint(1, 5)
        M = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)], m)
        K = integer_kernel(M)
        for j in range(K.cols):
            assert all(v == 0 for v in M.apply(K.col(j)))


# ---------------------------------------------------------------------------
# groups


def test_fg_group_invariants():
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (4, 6))  # 4 does not divide 6
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (1,))
    g = FgAbelianGroup(0, (2, 6))
    assert g.order() == 12
    assert str(g) == "Z/2 x Z/6"
    assert str(FgAbelianGroup(2, (3,))) == "Z x Z x Z/3"
    with pytest.raises(ValueError):
        FgAbelianGroup(1, ()).order()


def test_normal_form_examples():
    assert PresentedAbelianGroup.cyclic(12).normal_form() == FgAbelianGroup.cyclic(12)
    assert PresentedAbelianGroup.cyclic(1).normal_form().is_trivial
    assert PresentedAbelianGroup.free(2).normal_form() == FgAbelianGroup(2, ())
    g = PresentedAbelianGroup.from_relation_rows(2, [[2, 0], [0, 3]]).normal_form()
    assert g == FgAbelianGroup(0, (6,))


def test_normal_form_idempotent_and_order_multiplicative():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 3)
        ncols = n + rng.randint(0, 2)
        rel = IntMatrix.from_rows(
            [[rng.randint(-8, 8) for _ in range(ncols)] for _ in range(n)], ncols
        )
        g = PresentedAbelianGroup(n, rel).normal_form()
        # idempotence: re-presenting the normal form reproduces it
        rel2 = IntMatrix.block_diagonal(
            [IntMatrix.from_rows([[d]]) for d in g.invariant_factors]
        ) if g.invariant_factors else IntMatrix.zero(0, 0)
        g2 = PresentedAbelianGroup(len(g.invariant_factors), rel2).normal_form()
        assert g2.invariant_factors == g.invariant_factors
    a = FgAbelianGroup(0, (4,))
    b = FgAbelianGroup(0, (6,))
    assert a.direct_sum(b).order() == 24
    assert a.direct_sum(b) == FgAbelianGroup(0, (2, 12))


def test_direct_sum_recombines_invariant_factors():
    assert FgAbelianGroup(0, (2,)).direct_sum(FgAbelianGroup(0, (3,))) == FgAbelianGroup(0, (6,))
    assert FgAbelianGroup(1, (2,)).direct_sum(FgAbelianGroup(0, (4,))) == FgAbelianGroup(1, (2, 4))


# ---------------------------------------------------------------------------
# complexes and cohomology


def z_term():
    return PresentedAbelianGroup.free(1)


def test_cohomology_multiplication_by_k():
    # 0 -> Z --k--> Z -> 0: H at the target is Z/k, at the source 0
    C = BoundedComplex(0, (z_term(), z_term()), (IntMatrix.from_rows([[7]]),))
    assert cohomology(C, 1) == FgAbelianGroup.cyclic(7)
    assert cohomology(C, 0).is_trivial


def test_cohomology_mod3_into_mod15():
    C = BoundedComplex(
        0,
        (PresentedAbelianGroup.cyclic(3), PresentedAbelianGroup.cyclic(15)),
        (IntMatrix.from_rows([[5]]),),
    )
    assert cohomology(C, 0).is_trivial
    assert cohomology(C, 1) == FgAbelianGroup.cyclic(5)


def test_cohomology_zero_differentials():
    C = BoundedComplex(
        -1,
        (PresentedAbelianGroup.cyclic(4), PresentedAbelianGroup.cyclic(9)),
        (IntMatrix.from_rows([[0]]),),
    )
    assert cohomology(C, -1) == FgAbelianGroup.cyclic(4)
    assert cohomology(C, 0) == FgAbelianGroup.cyclic(9)


def test_cohomology_injective_map_of_finite_groups():
    # Z/3 --3--> Z/9 is injective: H^0 = 0, H^1 = Z/3
    C = BoundedComplex(
        0,
        (PresentedAbelianGroup.cyclic(3), PresentedAbelianGroup.cyclic(9)),
        (IntMatrix.from_rows([[3]]),),
    )
    assert cohomology(C, 0).is_trivial
    assert cohomology(C, 1) == FgAbelianGroup.cyclic(3)


def test_complex_construction_rejects_bad_data():
    with pytest.raises(ValueError):
        # map Z/3 -> Z/4 by 1 is not well defined
        BoundedComplex(
            0,
            (PresentedAbelianGroup.cyclic(3), PresentedAbelianGroup.cyclic(4)),
            (IntMatrix.from_rows([[1]]),),
        )
    with pytest.raises(ValueError):
        # d^2 = 15 != 0 in Z/4
        BoundedComplex(
            0,
            (z_term(), z_term(), PresentedAbelianGroup.cyclic(4)),
            (IntMatrix.from_rows([[3]]), IntMatrix.from_rows([[5]])),
        )


def test_euler_number_examples():
    single = BoundedComplex(0, (PresentedAbelianGroup.cyclic(15),), ())
    assert euler_number(single) == 15
    # Z/3 in degree -1, Z/15 in degree 0: 15/3 = 5 (from the degree-signed product)
    two = BoundedComplex(
        -1,
        (PresentedAbelianGroup.cyclic(3), PresentedAbelianGroup.cyclic(15)),
        (IntMatrix.from_rows([[5]]),),
    )
    assert euler_number(two) == 5
    empty = BoundedComplex(0, (PresentedAbelianGroup.cyclic(1),), ())
    assert euler_number(empty) == 1


def test_euler_number_rejects_infinite_terms():
    C = BoundedComplex(0, (z_term(),), ())
    with pytest.raises(ValueError):
        euler_number(C)


def test_euler_invariance_randomized():
    rng = random.Random(42)
    for _ in range(120):
        C = random_finite_complex(rng)
        assert euler_number(C) == euler_number_of_cohomology(C)


def test_random_unimodular_pair_inverts():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 4)
        q, qinv = random_unimodular_pair(rng, n)
        assert (q @ qinv).data == IntMatrix.identity(n).data


def test_in_column_span():
    M = IntMatrix.from_rows([[2, 0], [0, 2]])
    assert in_column_span(M, (4, 6))
    assert not in_column_span(M, (1, 0))
    assert in_column_span(IntMatrix.zero(2, 0), (0, 0))
    assert not in_column_span(IntMatrix.zero(2, 0), (1, 0))
