"""
Tests for exact rational linear algebra
=======================================
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

from src.exactnum import (
    RatMatrix,
    as_rational,
    common_projective_root_binary,
    inverse,
    mat_rank,
    rref,
    solve_linear_integer,
)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * _det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(n)
    )


def _rank_by_minors(rows):
    n_rows, n_cols = len(rows), len(rows[0])
    for k in range(min(n_rows, n_cols), 0, -1):
        for rs in combinations(range(n_rows), k):
            for cs in combinations(range(n_cols), k):
                if _det([[rows[i][j] for j in cs] for i in rs]) != 0:
                    return k
    return 0


def test_rational_parsing():
    """Test that ints, fractions and p/q strings become Fractions."""
    assert as_rational(3) == Fraction(3)
    assert as_rational("-1/2") == Fraction(-1, 2)
    assert as_rational(" 4/6 ") == Fraction(2, 3)
    assert as_rational(Fraction(5, 7)) == Fraction(5, 7)


def test_rank_small_examples():
    """Test the rank of identity, zero and a rank-one matrix."""
    assert mat_rank(RatMatrix.identity(2)) == 2
    assert mat_rank(RatMatrix.zeros(2, 2)) == 0
    assert mat_rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_with_fractions_and_skipped_columns():
    """Test that rank handles denominators and zero pivot columns."""
    m = RatMatrix.from_rows([
        [0, "1/2", 1, 0],
        [0, "1/3", "2/3", 0],
        [0, 0, 0, "5/7"],
    ])
    assert mat_rank(m) == 2


def test_rank_matches_minor_enumeration():
    """Test that Bareiss rank agrees with the largest nonzero minor."""
    rng = np.random.default_rng(7)
    for _ in range(60):
        n_rows, n_cols = rng.integers(1, 5, size=2)
        values = rng.integers(-3, 4, size=(n_rows, n_cols))
        # force some rank deficiency
        if n_rows > 1 and rng.random() < 0.5:
            values[-1] = values[0] * 2
        rows = values.tolist()
        assert mat_rank(RatMatrix.from_rows(rows)) == _rank_by_minors(rows)


def test_rref_pivots():
    """Test that rref reports pivot columns and reduces rows."""
    reduced, pivots = rref(RatMatrix.from_rows([[2, 4, 2], [1, 2, 3]]))
    assert pivots == [0, 2]
    assert reduced.row(0) == (1, 2, 0)
    assert reduced.row(1) == (0, 0, 1)


def test_solve_multiplicity_system():
    """Test {3a + 2 = 2b, -2a - 1 = -b} gives (a, b) = (0, 1)."""
    a = RatMatrix.from_rows([[3, -2], [-2, 1]])
    solution = solve_linear_integer(a, [-2, 1])
    assert solution.solutions == ((0, 1),)
    assert not solution.underdetermined


def test_solve_symmetric_system():
    """Test {x + y = 2, x - y = 0} gives (1, 1)."""
    a = RatMatrix.from_rows([[1, 1], [1, -1]])
    assert solve_linear_integer(a, [2, 0]).solutions == ((1, 1),)


def test_solve_tautology_is_underdetermined():
    """Test that x = x is reported as underdetermined with a kernel."""
    solution = solve_linear_integer(RatMatrix.from_rows([[0]]), [0])
    assert solution.underdetermined
    assert solution.kernel == ((Fraction(1),),)


def test_solve_inconsistent_and_non_integral():
    """Test that inconsistent and fractional systems give no solutions."""
    a = RatMatrix.from_rows([[1, 1], [1, 1]])
    inconsistent = solve_linear_integer(a, [1, 2])
    assert inconsistent.solutions == ()
    assert not inconsistent.consistent

    half = solve_linear_integer(RatMatrix.from_rows([[2]]), [1])
    assert half.solutions == ()
    assert half.particular == (Fraction(1, 2),)


def test_inverse_and_product():
    """Test that a matrix times its inverse is the identity."""
    m = RatMatrix.from_rows([[1, 3], [0, 1]])
    assert m @ inverse(m) == RatMatrix.identity(2)
    assert inverse(m) == RatMatrix.from_rows([[1, -3], [0, 1]])


def test_common_root_examples():
    """Test the common projective root examples."""
    assert common_projective_root_binary([(0, 1, 0), (1, 0, 0)])
    assert not common_projective_root_binary([(1, 0, 0), (0, 0, 1)])
    assert common_projective_root_binary([])
    assert common_projective_root_binary([(0, 0, 0), (0, 0, 0)])


def test_common_root_ignores_zero_forms():
    """Test that a zero form imposes no condition."""
    assert common_projective_root_binary([(0, 0, 0), (1, -3, 2)])
    # (v0 - v1)(v0 - 2 v1) and (v0 - v1)(v0 + v1)
    assert common_projective_root_binary([(1, -3, 2), (1, 0, -1)])
    assert not common_projective_root_binary([(1, -3, 2), (1, 0, -9)])


def test_common_root_brute_force():
    """Test gcd verdicts against the roots of the first form."""
    rng = np.random.default_rng(11)
    for _ in range(40):
        # forms sharing the root [r : 1] when share is set
        r = int(rng.integers(-3, 4))
        share = bool(rng.integers(0, 2))
        forms = []
        for _ in range(3):
            s = int(rng.integers(-3, 4))
            if share:
                forms.append((1, -(r + s), r * s))
            else:
                forms.append(tuple(int(x) for x in rng.integers(-5, 6, 3)))
        verdict = common_projective_root_binary(forms)
        if share:
            assert verdict
        else:
            a, b, c = forms[0]
            candidates = []
            if a == 0:
                candidates.append((1, 0))
            disc = b * b - 4 * a * c
            if a != 0 and disc >= 0 and int(disc ** 0.5) ** 2 == disc:
                root = int(disc ** 0.5)
                candidates += [(Fraction(-b + root, 2 * a), 1),
                               (Fraction(-b - root, 2 * a), 1)]
            rational_common = any(
                all(f[0] * x * x + f[1] * x * y + f[2] * y * y == 0
                    for f in forms)
                for x, y in candidates
            )
            if rational_common:
                assert verdict
