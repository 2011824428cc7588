"""
Resolve - Class-Level Validation of Locally Free Resolutions
============================================================

This module handles:
- Resolutions of normalized rank-2 bundles by catalog bundles
- Validation by alternating sums of Chern characters
- The case list of weak Fano bundles on the quintic del Pezzo threefold
  together with the alternative resolutions of cases (v), (vi), (vii)
- Integer multiplicity templates and their non-negative solutions
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bundles import (
    BundleClass,
    Catalog,
    ChernCharacter,
    chern_character,
    from_chern_character,
    normalized_bundle,
    twist,
)
from .errors import ResolutionFailure
from .exccol import ExceptionalCollection, KClass
from .exactnum import RatMatrix, solve_linear_integer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Term:
    """``multiplicity`` copies of ``bundle`` at homological ``position``.

    Position 0 maps onto the resolved object, so its sign is +1.
    """

    position: int
    multiplicity: int
    bundle: str

    @property
    def sign(self) -> int:
        return -1 if self.position % 2 else 1


@dataclass(frozen=True)
class Resolution:
    """
    A resolution 0 -> ... -> T_1 -> T_0 -> E(twist) -> 0 of the normalized
    class E{c1, c2}.
    """

    case_id: str
    terms: Tuple[Term, ...]
    c1: int
    c2: int
    twist: int = 0
    source: str = ""

    def target(self, catalog: Catalog) -> BundleClass:
        base = normalized_bundle(self.c1, self.c2, catalog.ring)
        return twist(base, self.twist)

    def describe(self) -> str:
        by_position: Dict[int, List[str]] = {}
        for t in self.terms:
            piece = t.bundle if t.multiplicity == 1 else \
                f"{t.bundle}^{t.multiplicity}"
            by_position.setdefault(t.position, []).append(piece)
        chain = [" + ".join(by_position[p])
                 for p in sorted(by_position, reverse=True)]
        target = "E" if not self.twist else f"E({self.twist})"
        return "0 -> " + " -> ".join(chain + [target]) + " -> 0"


@dataclass(frozen=True)
class ValidationResult:
    case_id: str
    computed: Tuple[int, int, int, int]
    expected: Tuple[int, int, int, int]
    normalized: Optional[Tuple[int, int]]
    passed: bool
    description: str = ""


def _terms(*spec: Tuple[int, int, str]) -> Tuple[Term, ...]:
    return tuple(Term(p, m, b) for p, m, b in spec)


THEOREM_CASES: Tuple[Resolution, ...] = (
    Resolution("i", _terms((0, 1, "O(1)"), (0, 1, "O(-1)")), 0, -5,
               source="O(1) + O(-1)"),
    Resolution("ii", _terms((0, 1, "O"), (0, 1, "O(-1)")), -1, 0,
               source="O + O(-1)"),
    Resolution("iii", _terms((0, 2, "O")), 0, 0, source="O^2"),
    Resolution("iv", _terms((0, 1, "R")), -1, 2, source="R"),
    Resolution("v", _terms((1, 1, "Q(-1)"), (0, 1, "O"), (0, 2, "R")),
               0, 1),
    Resolution("vi", _terms((1, 2, "Q(-1)"), (0, 4, "R")), 0, 2),
    Resolution("vii", _terms((2, 1, "O(-1)"), (2, 1, "Q(-1)"),
                             (1, 5, "R"), (0, 8, "O")), 0, 3, twist=1),
    Resolution("viii", _terms((2, 2, "O(-1)"), (1, 2, "Q(-1)"),
                              (0, 6, "O")), 0, 4, twist=1),
    Resolution("v'", _terms((1, 1, "R"), (0, 1, "Q^v"), (0, 1, "O")),
               0, 1),
    Resolution("vi'", _terms((1, 2, "R"), (0, 2, "Q^v")), 0, 2),
    Resolution("vii'", _terms((2, 1, "O(-1)"), (1, 2, "R"), (1, 1, "Q^v"),
                              (0, 8, "O")), 0, 3, twist=1),
)

# alternative resolution -> the case it presents again
ALTERNATIVES = {"v'": "v", "vi'": "vi", "vii'": "vii"}


def case(case_id: str) -> Resolution:
    for r in THEOREM_CASES:
        if r.case_id == case_id:
            return r
    raise KeyError(f"no resolution case {case_id!r}")


def alternating_character(r: Resolution, catalog: Catalog) -> ChernCharacter:
    total = chern_character(catalog.get("O")) * 0
    for t in r.terms:
        total = total + chern_character(catalog.get(t.bundle)) \
            * (t.sign * t.multiplicity)
    return total


def _invariants(b: BundleClass) -> Tuple[int, int, int, int]:
    return b.rank, b.c1, b.c2, b.c3


def validate(r: Resolution, catalog: Optional[Catalog] = None
             ) -> ValidationResult:
    """
    Compare the alternating sum of the terms with the target class.

    Args:
        r: The resolution.
        catalog: Catalog used to look the terms up.

    Returns:
        The computed (rank, c1, c2, c3) of the alternating sum, the
        expected one, the normalized (c1, c2) read back from it, and the
        verdict.

    Raises:
        UnknownBundleError: A term names a bundle missing from the
            catalog.
    """
    catalog = catalog or Catalog()
    target = r.target(catalog)
    ch = alternating_character(r, catalog)
    computed = from_chern_character(ch)
    passed = ch == chern_character(target)
    normalized = None
    if computed.rank == 2:
        untwisted = twist(computed, -r.twist)
        normalized = (untwisted.c1, untwisted.c2)
    if not passed:
        logger.info(f"Resolution ({r.case_id}) fails: computed "
                    f"{_invariants(computed)}, expected {_invariants(target)}")
    return ValidationResult(
        case_id=r.case_id,
        computed=_invariants(computed),
        expected=_invariants(target),
        normalized=normalized,
        passed=passed,
        description=r.describe(),
    )


@dataclass(frozen=True)
class SuiteReport:
    results: Tuple[ValidationResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def all_passed(self) -> bool:
        return self.passed == len(self.results)

    def table(self) -> set:
        """The (c1, c2) pairs of the passing cases."""
        return {r.normalized for r in self.results if r.passed}


def full_suite(catalog: Optional[Catalog] = None,
               strict: bool = False) -> SuiteReport:
    """
    Validate every case and alternative resolution.

    Args:
        catalog: Catalog to validate against.
        strict: Raise on the first failing case instead of recording it.

    Raises:
        ResolutionFailure: In strict mode, naming the failing case.
    """
    catalog = catalog or Catalog()
    results = []
    for r in THEOREM_CASES:
        result = validate(r, catalog)
        if strict and not result.passed:
            raise ResolutionFailure(
                r.case_id,
                f"computed {result.computed}, expected {result.expected}",
            )
        results.append(result)
    report = SuiteReport(tuple(results))
    logger.info(f"Resolution suite: {report.passed}/{len(results)} pass")
    return report


def perturbations(r: Resolution) -> List[Resolution]:
    """Every +-1 change of a single multiplicity that stays non-negative."""
    variants = []
    for i, t in enumerate(r.terms):
        for delta in (-1, 1):
            m = t.multiplicity + delta
            if m < 0:
                continue
            terms = list(r.terms)
            terms[i] = replace(t, multiplicity=m)
            variants.append(replace(
                r, case_id=f"{r.case_id}[{t.bundle}:{delta:+d}]",
                terms=tuple(terms),
            ))
    return variants


def kclass_of(r: Resolution,
              collection: ExceptionalCollection) -> KClass:
    """Alternating sum of the terms' K-classes in ``collection``."""
    total = None
    for t in r.terms:
        k = collection.to_kclass(collection.catalog.get(t.bundle)) \
            * (t.sign * t.multiplicity)
        total = k if total is None else total + k
    return total


Multiplicity = Union[int, str]


@dataclass(frozen=True)
class MultiplicityTemplate:
    """
    Terms whose multiplicities may be unknowns (named by strings),
    constrained by prescribed Chern character parts of the resolved
    object and by extra linear equations.

    ``targets`` maps a Chern character degree (0 = rank, 1 = c1, ...)
    to its value. Each extra equation is ``({unknown: coeff}, rhs)``.
    """

    terms: Tuple[Tuple[int, Multiplicity, str], ...]
    targets: Tuple[Tuple[int, Fraction], ...] = ()
    equations: Tuple[Tuple[Tuple[Tuple[str, int], ...], int], ...] = ()
    catalog: Catalog = field(default_factory=Catalog, compare=False)

    @property
    def unknowns(self) -> Tuple[str, ...]:
        names: List[str] = []
        for _, m, _ in self.terms:
            if isinstance(m, str) and m not in names:
                names.append(m)
        for coeffs, _ in self.equations:
            for name, _ in coeffs:
                if name not in names:
                    names.append(name)
        return tuple(names)

    @classmethod
    def for_target(cls, terms: Sequence[Tuple[int, Multiplicity, str]],
                   target: BundleClass, degrees: Sequence[int] = (0, 1),
                   catalog: Optional[Catalog] = None
                   ) -> "MultiplicityTemplate":
        """Constrain the given character degrees to those of ``target``."""
        ch = chern_character(target)
        return cls(
            terms=tuple(terms),
            targets=tuple((k, ch.part(k)) for k in degrees),
            catalog=catalog or Catalog(target.ring.degree_d),
        )

    def system(self) -> Tuple[RatMatrix, List[Fraction]]:
        unknowns = self.unknowns
        rows: List[List[Fraction]] = []
        rhs: List[Fraction] = []
        for degree, value in self.targets:
            row = [Fraction(0)] * len(unknowns)
            constant = Fraction(value)
            for position, m, name in self.terms:
                sign = -1 if position % 2 else 1
                part = chern_character(self.catalog.get(name)).part(degree)
                if isinstance(m, str):
                    row[unknowns.index(m)] += sign * part
                else:
                    constant -= sign * m * part
            rows.append(row)
            rhs.append(constant)
        for coeffs, value in self.equations:
            row = [Fraction(0)] * len(unknowns)
            for name, c in coeffs:
                row[unknowns.index(name)] += c
            rows.append(row)
            rhs.append(Fraction(value))
        return RatMatrix.from_rows(rows, cols=len(unknowns)), rhs


@dataclass(frozen=True)
class TemplateSolution:
    assignments: Tuple[Dict[str, int], ...] = ()
    underdetermined: bool = False
    parametrization: Optional[Tuple[Tuple[Fraction, ...],
                                    Tuple[Tuple[Fraction, ...], ...]]] = None


def solve_template(t: MultiplicityTemplate) -> TemplateSolution:
    """All non-negative integer multiplicities meeting the constraints."""
    matrix, rhs = t.system()
    unknowns = t.unknowns
    if matrix.rows == 0:
        logger.debug("Template has no constraints")
        return TemplateSolution(underdetermined=True)
    solution = solve_linear_integer(matrix, rhs)
    if solution.underdetermined:
        return TemplateSolution(
            underdetermined=True,
            parametrization=(solution.particular, solution.kernel),
        )
    assignments = tuple(
        dict(zip(unknowns, values)) for values in solution.solutions
        if all(v >= 0 for v in values)
    )
    return TemplateSolution(assignments=assignments)
