"""
Tests for the exceptional collection and class-level resolutions
================================================================
"""

from fractions import Fraction

import pytest

from src.bundles import Catalog, chi_pair, normalized_bundle
from src.errors import (
    KClassError,
    NotExceptionalError,
    ResolutionFailure,
    UnknownBundleError,
)
from src.exccol import (
    SUB_A,
    SUB_B,
    ExceptionalCollection,
    KClass,
    basis_vector,
    column_kclass,
)
from src.resolve import (
    ALTERNATIVES,
    THEOREM_CASES,
    MultiplicityTemplate,
    Resolution,
    Term,
    case,
    full_suite,
    kclass_of,
    perturbations,
    solve_template,
    validate,
)

Q_DUAL = KClass((0, -1, 3, 0))


def test_gram_matrix(collection):
    """Test the Euler form on <O(-1), Q(-1), R, O>."""
    gram = collection.gram()
    assert gram.entries == (
        (1, 5, 5, 7),
        (0, 1, 3, 10),
        (0, 0, 1, 5),
        (0, 0, 0, 1),
    )
    assert gram.is_upper_unitriangular()


def test_basis_coordinates(collection, catalog):
    """Test the K-classes of the basis and of derived bundles."""
    for i, name in enumerate(("O(-1)", "Q(-1)", "R", "O")):
        assert collection.to_kclass(catalog.get(name)) == basis_vector(i)
    assert collection.to_kclass(catalog.get("Q^v")) == Q_DUAL
    assert collection.to_kclass(catalog.get("I_l")) == KClass((0, -1, 2, 0))
    assert collection.to_kclass(catalog.get("R(-1)")) == KClass((5, -1, 0, 0))
    assert collection.to_kclass(catalog.get("Q(-2)")) == KClass((10, -3, 1, 0))


def test_pairing_matches_riemann_roch(collection, catalog):
    """Test that the Gram pairing agrees with HRR on catalog bundles."""
    names = ("R(1)", "Q^v", "I_l", "O(2)")
    for a in names:
        for b in names:
            ka = collection.to_kclass(catalog.get(a))
            kb = collection.to_kclass(catalog.get(b))
            assert collection.chi(ka, kb) == chi_pair(catalog.get(a),
                                                      catalog.get(b))


def test_rank_of_classes(collection):
    """Test ranks read back from K-classes."""
    assert collection.rank(Q_DUAL) == 3
    assert collection.rank(KClass((0, 0, 0, 0))) == 0


def test_right_mutation_gives_q_dual(collection):
    """Test that R_R Q(-1) = -[Q^v]."""
    assert collection.rmut(basis_vector(2), basis_vector(1)) == -Q_DUAL


def test_mutations_need_exceptional_objects(collection):
    """Test that mutating across a non-exceptional class raises."""
    with pytest.raises(NotExceptionalError):
        collection.lmut(KClass((1, 1, 0, 0)), basis_vector(3))
    with pytest.raises(NotExceptionalError):
        collection.rmut(KClass((0, 0, 0, 0)), basis_vector(3))


@pytest.mark.parametrize("i", [0, 1, 2])
@pytest.mark.parametrize("direction", ["left", "right"])
def test_mutated_basis_stays_exceptional(collection, i, direction):
    """Test that mutating an adjacent pair keeps the Gram unitriangular."""
    _, gram = collection.mutate_basis(i, direction)
    assert gram.is_upper_unitriangular()


def test_mutate_basis_direction(collection):
    """Test that an unknown direction is rejected."""
    with pytest.raises(ValueError):
        collection.mutate_basis(0, "up")


def test_serre_duality(collection):
    """Test chi(e, f) = chi(f, S e) on the basis."""
    for i in range(4):
        for j in range(4):
            e, f = basis_vector(i), basis_vector(j)
            assert collection.chi(e, f) == collection.chi(f,
                                                          collection.serre(e))
            assert collection.serre_inverse(collection.serre(e)) == e


def test_subcategory_serre_on_b(collection):
    """Test S_B applied to R gives [Q(-2)]."""
    assert collection.serre_sub(SUB_B, basis_vector(2)) == \
        KClass((10, -3, 1, 0))


@pytest.mark.parametrize("indices", [SUB_A, SUB_B])
def test_subcategory_serre_matches_gram(collection, indices):
    """Test that the mutation recipe agrees with G^-1 G^T."""
    matrix = collection.subcategory_serre_matrix(indices)
    for position, k in enumerate(indices):
        expected = column_kclass(matrix.column(position), indices)
        assert collection.serre_sub(indices, basis_vector(k)) == expected


def test_subcategory_serre_matrix_on_a(collection):
    """Test the Serre matrix of <Q(-1), R>."""
    matrix = collection.subcategory_serre_matrix(SUB_A)
    assert matrix.to_rows() == [[-8, -3], [3, 1]]


@pytest.mark.parametrize("indices", [SUB_A, SUB_B])
def test_subcategory_serre_inverse(collection, indices):
    """Test that the inverse Serre operator undoes the Serre operator."""
    for k in indices:
        v = basis_vector(k)
        assert collection.serre_sub_inverse(
            indices, collection.serre_sub(indices, v)) == v


def test_subcategory_serre_rejects_outside_classes(collection):
    """Test that classes outside the block are refused."""
    with pytest.raises(KClassError):
        collection.serre_sub(SUB_A, basis_vector(0))
    with pytest.raises(KClassError):
        collection.serre_sub_inverse(SUB_B, basis_vector(3))


def test_instanton_mutation_classes(collection):
    """Test the mutated instanton classes for c2 = 3 and 4."""
    v3 = collection.instanton_mutation_class(3)
    v4 = collection.instanton_mutation_class(4)
    assert v3 == KClass((0, -1, 5, 0))
    assert v4 == KClass((0, 2, 0, 0))
    assert collection.rank(v3) == 7
    assert collection.rank(v4) == 6
    assert collection.two_term_decomposition(v3) == (5, -1)


def test_tilting_classes(collection):
    """Test [H] = 5[Q(-1)] - [O(-1)]."""
    q, h = collection.tilting_classes()
    assert q == basis_vector(1)
    assert h == KClass((-1, 5, 0, 0))


def test_collection_needs_degree_five():
    """Test that the basis is only defined on the quintic."""
    with pytest.raises(KClassError):
        ExceptionalCollection(Catalog(degree=4))


def test_column_kclass_rejects_fractions():
    """Test that fractional coordinates are not embedded."""
    with pytest.raises(KClassError):
        column_kclass([Fraction(1, 2), 0], SUB_A)


def test_theorem_cases_validate(catalog):
    """Test that every listed resolution matches its target class."""
    report = full_suite(catalog)
    assert report.all_passed
    assert report.passed == len(THEOREM_CASES)
    assert report.table() == {(0, -5), (-1, 0), (0, 0), (-1, 2),
                              (0, 1), (0, 2), (0, 3), (0, 4)}


def test_alternative_resolutions_agree(catalog):
    """Test that each alternative resolution presents the same class."""
    for alt, original in ALTERNATIVES.items():
        a, b = validate(case(alt), catalog), validate(case(original), catalog)
        assert a.passed and b.passed
        assert a.computed == b.computed


@pytest.mark.parametrize("case_id", ["v", "vi", "vii", "viii"])
def test_perturbed_resolutions_fail(catalog, case_id):
    """Test that changing any single multiplicity breaks validation."""
    variants = perturbations(case(case_id))
    assert variants
    for r in variants:
        assert not validate(r, catalog).passed


def test_corrupted_catalog_is_detected():
    """Test that a wrong c2(R) makes the suite fail in strict mode."""
    broken = Catalog(overrides={"R": {"c2": 3}})
    assert not full_suite(broken).all_passed
    with pytest.raises(ResolutionFailure) as info:
        full_suite(broken, strict=True)
    assert info.value.case_id == "iv"


def test_unknown_term_raises(catalog):
    """Test that a term missing from the catalog is reported."""
    r = Resolution("x", (Term(0, 1, "S"),), 0, 1)
    with pytest.raises(UnknownBundleError):
        validate(r, catalog)


def test_describe():
    """Test the human readable form of a resolution."""
    assert case("vi").describe() == "0 -> Q(-1)^2 -> R^4 -> E -> 0"


def test_kclass_of_resolution(collection):
    """Test the K-class of case (vi) through the exceptional basis."""
    kv = kclass_of(case("vi"), collection)
    e = collection.to_kclass(normalized_bundle(0, 2))
    assert kv == e == KClass((0, -2, 4, 0))


def test_solve_case_v_template():
    """Test that the multiplicity template recovers case (v)."""
    template = MultiplicityTemplate.for_target(
        [(1, "a", "Q(-1)"), (0, 1, "O"), (0, "b", "R")],
        normalized_bundle(0, 1),
        degrees=(0, 1),
    )
    solution = solve_template(template)
    assert solution.assignments == ({"a": 1, "b": 2},)


def test_template_without_constraints_is_underdetermined():
    """Test that x = x style systems are flagged underdetermined."""
    template = MultiplicityTemplate(terms=((0, "a", "O"),))
    assert solve_template(template).underdetermined
    single = MultiplicityTemplate(
        terms=((0, "a", "O"), (0, "b", "O")),
        targets=((0, 2),),
    )
    solution = solve_template(single)
    assert solution.underdetermined
    assert solution.parametrization is not None
