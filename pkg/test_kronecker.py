"""
Tests for 5-Kronecker quiver representations
============================================
"""

import json

import pytest

from src.errors import RepresentationError
from src.exccol import KClass
from src.kronecker import (
    DimVector,
    KroneckerRep,
    dimension_vector,
    euler_form,
    extension_line,
    fineness_codimension,
    is_semistable,
    is_stable,
    kclass_of_rep,
    load_representation,
    moduli_dim,
    oracle_verdict,
    pencil_forms,
    projective_line,
    quadratic_nonresidue,
    quadric_rank,
    random_representations,
    stability,
    theta,
)
from src.report import oracle_disagreements

ZERO = [[0, 0], [0, 0]]

# spans sl_2: det(x1 A1 + x2 A2 + x3 A3) = -x1^2 - x2 x3
SL2 = [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], ZERO, ZERO]

PAULI = [[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]],
         [[0, 1], [-1, 0]], ZERO]

# every map kills (1, 0)
KERNEL = [[[0, 1], [0, 2]], [[0, 3], [0, -1]], [[0, 1], [0, 1]], ZERO, ZERO]

# every image lies in the line spanned by (1, 0)
IMAGE = [[[1, 2], [0, 0]], [[3, -1], [0, 0]], [[0, 5], [0, 0]], ZERO, ZERO]

# upper triangular: (1, 0) is a common eigenvector
FLAG = [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[1, 0], [0, 2]], ZERO, ZERO]

# a I + b J with J a rotation: common eigenvectors (1, +-i) are irrational
ROTATION = [[[1, -2], [2, 1]], [[0, -1], [1, 0]], [[3, 1], [-1, 3]],
            [[2, 0], [0, 2]], ZERO]


def _rep(maps):
    return KroneckerRep.from_lists(maps)


def test_dimension_vector_arithmetic():
    """Test theta, the Euler form and the moduli dimension."""
    v = DimVector(2, 2)
    assert theta(v) == 0
    assert theta(DimVector(0, 1)) == 1
    assert euler_form(v, v) == -12
    assert moduli_dim(v) == 13
    assert moduli_dim(DimVector(1, 1)) == 4
    assert fineness_codimension() == 2
    with pytest.raises(ValueError):
        DimVector(-1, 2)


def test_kclass_of_representation(collection):
    """Test that dimension vectors and K-classes correspond."""
    v = DimVector(2, 2)
    assert kclass_of_rep(v) == KClass((-2, 2, 0, 0))
    for a, b in [(2, 2), (1, 0), (0, 1), (3, 5)]:
        w = DimVector(a, b)
        assert dimension_vector(kclass_of_rep(w), collection) == w


def test_representation_shape_checks():
    """Test that maps must come five at a time with one shape."""
    with pytest.raises(RepresentationError):
        _rep(SL2[:4])
    with pytest.raises(RepresentationError):
        _rep(SL2[:4] + [[[1, 2, 3], [4, 5, 6]]])
    with pytest.raises(RepresentationError):
        _rep([[["x", 0], [0, 0]]] + SL2[1:])
    with pytest.raises(RepresentationError):
        _rep([[["1/0", 0], [0, 0]]] + SL2[1:])
    with pytest.raises(RepresentationError):
        stability(_rep([[[1, 0, 0], [0, 1, 0]]] * 5))


def test_representation_dims_and_lists():
    """Test dims and the string form of the maps."""
    r = _rep([[["1/2", 0], [0, -1]]] + SL2[1:])
    assert r.dims == DimVector(2, 2)
    assert r.to_lists()[0] == [["1/2", "0"], ["0", "-1"]]


def test_load_representation(tmp_path):
    """Test reading representations from JSON files."""
    good = tmp_path / "rep.json"
    good.write_text(json.dumps({"maps": SL2}))
    assert load_representation(good) == _rep(SL2)

    with pytest.raises(RepresentationError):
        load_representation(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(RepresentationError):
        load_representation(bad)
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps([1, 2, 3]))
    with pytest.raises(RepresentationError):
        load_representation(wrong)


def test_sl2_span_is_stable():
    """Test that a rep spanning sl_2 is stable with quadric rank 3."""
    r = _rep(SL2)
    verdict = stability(r)
    assert verdict.semistable and verdict.stable
    assert verdict.witnesses == ()
    assert quadric_rank(r) == 3


def test_pauli_rep_is_stable():
    """Test a stable rep whose quadric has rank 4."""
    r = _rep(PAULI)
    assert is_stable(r)
    assert quadric_rank(r) == 4


def test_common_kernel_destabilizes():
    """Test that a common kernel gives a (0, 1) witness."""
    verdict = stability(_rep(KERNEL))
    assert not verdict.semistable
    assert not verdict.stable
    assert DimVector(0, 1) in [w.sub for w in verdict.witnesses]


def test_common_image_line_destabilizes():
    """Test that images in one line give a (1, 2) witness."""
    r = _rep(IMAGE)
    verdict = stability(r)
    assert not is_semistable(r)
    assert [w.sub for w in verdict.witnesses] == [DimVector(1, 2)]


def test_common_eigenvector_is_strictly_semistable():
    """Test that a common eigenvector gives a (1, 1) witness."""
    verdict = stability(_rep(FLAG))
    assert verdict.semistable
    assert not verdict.stable
    assert [w.sub for w in verdict.witnesses] == [DimVector(1, 1)]


def test_irrational_common_eigenvector_is_found():
    """Test that a common eigenvector over Q(i) still destabilizes."""
    verdict = stability(_rep(ROTATION))
    assert verdict.semistable
    assert not verdict.stable
    assert [w.sub for w in verdict.witnesses] == [DimVector(1, 1)]


def test_pencil_forms():
    """Test the binary quadrics det[A_i v | A_j v]."""
    forms = pencil_forms(_rep(SL2))
    assert len(forms) == 10
    # (v0, -v1) against (v1, 0)
    assert forms[0] == (0, 0, 1)
    # (v1, 0) against (0, v0)
    assert forms[4] == (0, 1, 0)


@pytest.mark.parametrize("maps,expected", [
    (SL2, (True, True)),
    (PAULI, (True, True)),
    (KERNEL, (False, False)),
    (IMAGE, (False, False)),
    (FLAG, (True, False)),
    (ROTATION, (True, False)),
])
def test_oracle_agrees_on_examples(maps, expected):
    """Test the finite field oracle on hand-built representations."""
    for q in (101, 103):
        verdict = oracle_verdict(_rep(maps), q)
        assert (verdict.semistable, verdict.stable) == expected


def test_oracle_skips_bad_reduction():
    """Test that a denominator divisible by q gives no verdict."""
    r = _rep([[["1/101", 0], [0, 1]]] + SL2[1:])
    assert oracle_verdict(r, 101) is None
    assert oracle_verdict(r, 103) is not None
    assert len(projective_line(5)) == 6


def test_extension_line():
    """Test the points of P^1 over F_{q^2} and the field modulus."""
    points = extension_line(3)
    assert points.shape == (10, 2, 2)
    assert len({tuple(p.ravel()) for p in points}) == 10
    for q in (3, 101, 103):
        n = quadratic_nonresidue(q)
        assert all(x * x % q != n for x in range(q))


def test_random_representations_are_reproducible():
    """Test that sampling depends only on the seed."""
    first = random_representations(12, seed=7)
    second = random_representations(12, seed=7)
    assert first == second
    assert all(r.dims == DimVector(2, 2) for r in first)
    assert random_representations(12, seed=8) != first


def test_sampled_families_are_unstable():
    """Test that the crafted families carry their subrepresentations."""
    samples = random_representations(12, seed=3)
    for k in (3, 9):
        assert not is_semistable(samples[k])
    for k in (5, 11):
        assert not is_semistable(samples[k])
    for k in (1, 7):
        assert not is_stable(samples[k])


def test_oracle_never_misses_instability():
    """Test that exact instability is always seen by the oracle."""
    for r in random_representations(36, seed=11):
        if is_semistable(r):
            continue
        for q in (101, 103):
            verdict = oracle_verdict(r, q)
            if verdict is not None:
                assert not verdict.semistable


def test_stable_implies_semistable():
    """Test that no sample is stable without being semistable."""
    for r in random_representations(1000, seed=17):
        verdict = stability(r)
        assert verdict.semistable or not verdict.stable


def test_oracle_agrees_on_report_samples():
    """Test exact and finite field verdicts on 200 seeded samples."""
    samples = random_representations(200, seed=20240)
    verdicts = [stability(r) for r in samples]
    assert {v.stable for v in verdicts} == {True, False}
    assert oracle_disagreements(samples, verdicts) == []
