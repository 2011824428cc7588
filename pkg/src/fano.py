"""
Fano - Weak Fano Criteria and the Hilbert Scheme of Lines
=========================================================

This module handles:
- Anti-canonical intersection numbers on P(E) over a del Pezzo threefold
- The numeric gates that decide which normalized rank-2 bundles can be
  weak Fano, degree by degree
- Intersection checks on the universal family of lines P(G) over the plane
- The divisibility argument that pins c2 for c1 = -1 on the quintic
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple, Union

import sympy

from .bundles import (
    Catalog,
    chern_character,
    chi_pair,
    euler_integral,
    normalized_bundle,
    twist,
)
from .chow import (
    H,
    XI,
    PlaneRing,
    ProjBundleElement,
    ProjBundleRing,
    ThreefoldRing,
    eval_degree4,
    integrate,
)
from .errors import LinesRingMismatch
from .resolve import MultiplicityTemplate, TemplateSolution, solve_template

logger = logging.getLogger(__name__)

C2_WINDOW = range(-6, 9)
NORMALIZED_C1 = (0, -1)

Value = Union[Fraction, int, bool]


def _check_c1(c1: int):
    if c1 not in NORMALIZED_C1:
        raise ValueError(f"normalized bundles have c1 in {{0, -1}}, got {c1}")


def projectivization(d: int, c1: int, c2: int) -> ProjBundleRing:
    return ProjBundleRing(ThreefoldRing(d), c1, c2)


def anti_canonical(c1: int):
    """-K of P(E) as a polynomial: 2 xi + (2 - c1) h."""
    return 2 * XI + (2 - c1) * H


def anti_k4(d: int, c1: int, c2: int) -> Fraction:
    """
    (-K_{P(E)})^4 for a normalized rank-2 bundle E{c1, c2}.

    Args:
        d: Degree of the del Pezzo threefold, 1..5.
        c1: 0 or -1.
        c2: Second Chern class as a multiple of L.

    Returns:
        The intersection number.
    """
    _check_c1(c1)
    return eval_degree4(projectivization(d, c1, c2), anti_canonical(c1) ** 4)


def anti_k3_xi(d: int, c1: int, c2: int, t: int = 0) -> Fraction:
    """(-K_{P(E)})^3 . (xi + t h)."""
    _check_c1(c1)
    poly = anti_canonical(c1) ** 3 * (XI + t * H)
    return eval_degree4(projectivization(d, c1, c2), poly)


@dataclass(frozen=True)
class Constraint:
    name: str
    value: Value
    satisfied: bool


@dataclass(frozen=True)
class WFanoVerdict:
    """Numeric verdict for one (d, c1, c2)."""

    d: int
    c1: int
    c2: int
    anti_k4: Fraction
    constraints: Tuple[Constraint, ...]
    admissible: bool

    @property
    def split(self) -> bool:
        """c2 <= 0 forces a direct sum of line bundles."""
        return self.c2 <= 0

    @property
    def failed(self) -> List[str]:
        return [c.name for c in self.constraints if not c.satisfied]


def _euler(d: int, c1: int, c2: int, shift: int = 0) -> Fraction:
    bundle = twist(normalized_bundle(c1, c2, ThreefoldRing(d)), shift)
    return euler_integral(chern_character(bundle))


def _gates(d: int, c1: int, c2: int, top: Fraction) -> List[Constraint]:
    gates = [Constraint("anti_k4_positive", top, top > 0)]
    euler = _euler(d, c1, c2)
    integral = euler.denominator == 1
    gates.append(Constraint("rr_integrality", euler, integral))
    if c2 <= 0:
        return gates

    gates.append(Constraint(
        "c2_one_needs_degree_3", d,
        c2 != 1 or (c1 == 0 and d >= 3),
    ))
    if euler > 0:
        value = anti_k3_xi(d, c1, c2, 0)
        gates.append(Constraint("section_divisor_nonnegative", value,
                                value >= 0))
    if c1 == -1 and integral and _euler(d, c1, c2, 1) > 0:
        value = anti_k3_xi(d, c1, c2, 1)
        gates.append(Constraint("twisted_divisor_nonnegative", value,
                                value >= 0))
    if d == 5 and c1 == -1:
        gates.append(Constraint("lines_divisibility", c2,
                                c2 in lines_divisibility().values()))
    return gates


def verdict(d: int, c1: int, c2: int) -> WFanoVerdict:
    _check_c1(c1)
    top = anti_k4(d, c1, c2)
    constraints = tuple(_gates(d, c1, c2, top))
    return WFanoVerdict(
        d=d, c1=c1, c2=c2, anti_k4=top, constraints=constraints,
        admissible=all(c.satisfied for c in constraints),
    )


def classify(d: int) -> List[WFanoVerdict]:
    """
    Scan c1 in {0, -1} and c2 over C2_WINDOW for the degree-d threefold.

    Only numeric necessary conditions are applied; existence of the
    bundles is not decided here.
    """
    verdicts = [verdict(d, c1, c2) for c1 in NORMALIZED_C1
                for c2 in C2_WINDOW]
    logger.info(f"classify({d}): admissible indecomposable "
                f"{sorted(_indecomposable(verdicts))}")
    return verdicts


def _indecomposable(verdicts: List[WFanoVerdict]) -> Set[Tuple[int, int]]:
    return {(v.c1, v.c2) for v in verdicts if v.admissible and not v.split}


def admissible_indecomposable(d: int) -> Set[Tuple[int, int]]:
    return _indecomposable(classify(d))


def instanton_bound(catalog: Optional[Catalog] = None) -> int:
    """Largest c2 with chi(Q(-1), E{0, c2}) >= 0 on the quintic."""
    catalog = catalog or Catalog(degree=5)
    q = catalog.get("Q(-1)")
    bound = None
    for c2 in C2_WINDOW:
        if chi_pair(q, normalized_bundle(0, c2, catalog.ring)) >= 0:
            bound = c2
    return bound


# -- lines ------------------------------------------------------------

def lines_ring() -> ProjBundleRing:
    """P(G) over the plane of lines, c1(G) = 3 and c2(G) = 6."""
    return ProjBundleRing(PlaneRing(), 3, 6)


def _line_classes():
    ring = lines_ring()
    eta, ell = ring.xi(), ring.h()
    pulled_h = eta + ell
    pulled_line = eta * ell - ell * ell
    return ring, eta, ell, pulled_h, pulled_line


def _degree_two_coordinates(x: ProjBundleElement) -> Tuple[Fraction, Fraction]:
    """Coordinates over (eta L, L^2)."""
    return x.xi_part.part(1), x.base_part.part(2)


@lru_cache(maxsize=1)
def lines_divisibility() -> Dict[int, int]:
    """
    Integers a for which a eta L - a(a-1) L^2 is an integer multiple of
    the class eta L - L^2 of a pulled-back line, mapped to c2 = a.
    """
    _, eta, ell, _, pulled_line = _line_classes()
    u = _degree_two_coordinates(eta * ell)
    w = _degree_two_coordinates(ell * ell)
    line = _degree_two_coordinates(pulled_line)
    a = sympy.Symbol("a", integer=True)
    candidate = [a * u[k] - a * (a - 1) * w[k] for k in range(2)]
    det = sympy.expand(candidate[0] * line[1] - candidate[1] * line[0])
    roots = sympy.solve(det, a)
    found = {}
    for root in roots:
        value = int(root)
        multiple = is_lines_multiple(value)
        if multiple is not None:
            found[value] = multiple
    logger.debug(f"lines divisibility: {found}")
    return found


def is_lines_multiple(a: int) -> Optional[int]:
    """The multiple m with a eta L - a(a-1) L^2 = m (eta L - L^2), if any."""
    _, eta, ell, _, pulled_line = _line_classes()
    cls = eta * ell * a - ell * ell * (a * (a - 1))
    x, y = _degree_two_coordinates(cls)
    lx, ly = _degree_two_coordinates(pulled_line)
    m = x / lx
    if m * ly != y or m.denominator != 1:
        return None
    return int(m)


@dataclass(frozen=True)
class LinesCheck:
    name: str
    computed: str
    expected: str
    passed: bool


def lines_ring_checks(strict: bool = False) -> List[LinesCheck]:
    """
    Intersection identities on P(G) for the family of lines.

    Raises:
        LinesRingMismatch: In strict mode, on the first failing check.
    """
    ring, eta, ell, pulled_h, pulled_line = _line_classes()
    plane_k = PlaneRing.anticanonical
    relative = eta * -2 + ell * (ring.bundle_c1 - plane_k)
    bookkeeping = pulled_h * -2 + ell * -plane_k

    checks = [
        LinesCheck("degree_three_cover",
                   str(integrate(pulled_h * pulled_line)), "3",
                   integrate(pulled_h * pulled_line) == 3),
        LinesCheck("eta_cubed", str(integrate(eta ** 3)), "3",
                   integrate(eta ** 3) == 3),
        LinesCheck("pulled_back_h_cubed", str(integrate(pulled_h ** 3)),
                   "15", integrate(pulled_h ** 3) == 15),
        LinesCheck("relative_canonical", str(relative), str(eta * -2),
                   relative == eta * -2),
        LinesCheck("canonical_bookkeeping", str(bookkeeping),
                   str(eta * -2 + ell * -5),
                   bookkeeping == eta * -2 + ell * -5),
    ]
    for check in checks:
        if not check.passed:
            logger.warning(f"Lines check {check.name} failed: "
                           f"{check.computed} != {check.expected}")
            if strict:
                raise LinesRingMismatch(
                    check.name, f"{check.computed} != {check.expected}"
                )
    return checks


def lines_multiplicities(catalog: Optional[Catalog] = None
                         ) -> TemplateSolution:
    """
    Multiplicities in 0 -> Q(-1)^a -> R^b -> E -> 0 for E{-1, 2}, from
    rank and c1.
    """
    catalog = catalog or Catalog(degree=5)
    template = MultiplicityTemplate.for_target(
        [(1, "a", "Q(-1)"), (0, "b", "R")],
        normalized_bundle(-1, 2, catalog.ring),
        degrees=(0, 1),
        catalog=catalog,
    )
    return solve_template(template)

