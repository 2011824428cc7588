"""
Tests for weak Fano criteria and the family of lines
====================================================
"""

import pytest

from src.fano import (
    C2_WINDOW,
    admissible_indecomposable,
    anti_k3_xi,
    anti_k4,
    classify,
    instanton_bound,
    is_lines_multiple,
    lines_divisibility,
    lines_multiplicities,
    lines_ring_checks,
    verdict,
)

EXPECTED_ADMISSIBLE = {
    5: {(-1, 2), (0, 1), (0, 2), (0, 3), (0, 4)},
    4: {(-1, 2), (0, 1), (0, 2), (0, 3)},
    3: {(-1, 2), (0, 1), (0, 2)},
    2: set(),
    1: set(),
}


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_anti_canonical_degrees(d):
    """Test the closed forms of (-K)^4 and (-K)^3.xi."""
    for c in (0, 1, 2, 3, 4):
        assert anti_k4(d, 0, c) == 64 * (d - c)
        assert anti_k4(d, -1, c) == 80 * d - 64 * c
        assert anti_k3_xi(d, 0, c) == 8 * (d - 3 * c)
        assert anti_k3_xi(d, -1, c) == d - 20 * c
        assert anti_k3_xi(d, -1, c, t=1) == 27 * d - 28 * c


def test_bad_first_chern_class():
    """Test that c1 outside {0, -1} is rejected."""
    with pytest.raises(ValueError):
        anti_k4(5, 1, 0)
    with pytest.raises(ValueError):
        verdict(5, 2, 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_classification(d):
    """Test the admissible indecomposable (c1, c2) for each degree."""
    assert admissible_indecomposable(d) == EXPECTED_ADMISSIBLE[d]


def test_classify_covers_window():
    """Test that classify scans both c1 values over the c2 window."""
    verdicts = classify(5)
    assert len(verdicts) == 2 * len(C2_WINDOW)
    split = [v for v in verdicts if v.split and v.admissible]
    assert {(v.c1, v.c2) for v in split} >= {(0, 0), (-1, 0)}


def test_lines_gate_removes_c2_four():
    """Test that only divisibility excludes E{-1, 4} on the quintic."""
    v = verdict(5, -1, 4)
    assert v.failed == ["lines_divisibility"]
    assert v.anti_k4 == 144


def test_integrality_gate():
    """Test that odd c2 with c1 = -1 fails Riemann-Roch integrality."""
    v = verdict(5, -1, 3)
    assert v.failed == ["rr_integrality", "lines_divisibility"]


def test_low_degree_gates():
    """Test that c2 = 1 is excluded on the degree-2 threefold."""
    v = verdict(2, 0, 1)
    assert v.failed == ["c2_one_needs_degree_3",
                        "section_divisor_nonnegative"]
    assert not verdict(2, -1, 2).admissible
    assert "twisted_divisor_nonnegative" in verdict(4, -1, 4).failed


def test_instanton_bound():
    """Test that chi(Q(-1), E) >= 0 bounds c2 by 4."""
    assert instanton_bound() == 4


def test_lines_divisibility():
    """Test the divisibility condition on the family of lines."""
    assert lines_divisibility() == {0: 0, 2: 2}
    assert is_lines_multiple(2) == 2
    assert is_lines_multiple(3) is None
    assert is_lines_multiple(4) is None


def test_lines_ring_checks():
    """Test the intersection identities on P(G)."""
    checks = lines_ring_checks(strict=True)
    assert [c.name for c in checks] == [
        "degree_three_cover",
        "eta_cubed",
        "pulled_back_h_cubed",
        "relative_canonical",
        "canonical_bookkeeping",
    ]
    assert all(c.passed for c in checks)


def test_lines_multiplicities():
    """Test 0 -> Q(-1)^a -> R^b -> E -> 0 forces (a, b) = (0, 1)."""
    assert lines_multiplicities().assignments == ({"a": 0, "b": 1},)
