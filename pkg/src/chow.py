"""
Chow - Numerical Intersection Rings
===================================

This module handles:
- The cyclic Chow ring of a degree-d del Pezzo threefold (basis 1, H, L, P)
- The Chow ring of the plane (basis 1, h, p)
- Projectivizations of rank-2 bundles over either, reduced by Chern-Wu
- Integration and evaluation of polynomials in xi and h

Every graded piece of a base ring is one-dimensional, so a ring is fully
described by the structure constants of its generators.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Tuple, Union

import sympy

from .errors import NonHomogeneousError, RingMismatchError
from .exactnum import RationalLike, as_rational

logger = logging.getLogger(__name__)

XI, H = sympy.symbols("xi h")

Scalar = Union[int, Fraction]


class ChowRing:
    """
    A numerical Chow ring whose graded pieces are each spanned by one
    generator g_k, with g_i * g_j = constant(i, j) * g_{i+j}.
    """

    dimension: ClassVar[int] = 0
    names: ClassVar[Tuple[str, ...]] = ()
    # c1 of the tangent bundle, as a multiple of g_1
    anticanonical: ClassVar[int] = 0

    def constant(self, i: int, j: int) -> Fraction:
        raise NotImplementedError

    def element(self, *coeffs: RationalLike) -> "ChowClass":
        padded = list(coeffs) + [0] * (self.dimension + 1 - len(coeffs))
        if len(padded) != self.dimension + 1:
            raise ValueError(
                f"{type(self).__name__} takes at most "
                f"{self.dimension + 1} coefficients"
            )
        return self.element_type(self, tuple(as_rational(c) for c in padded))

    def one(self) -> "ChowClass":
        return self.generator(0)

    def generator(self, k: int) -> "ChowClass":
        coeffs = [0] * (self.dimension + 1)
        coeffs[k] = 1
        return self.element(*coeffs)

    def zero(self) -> "ChowClass":
        return self.element()

    @property
    def element_type(self):
        return ChowClass


@dataclass(frozen=True)
class ThreefoldRing(ChowRing):
    """Numerical Chow ring of a del Pezzo threefold of degree d = H^3."""

    degree_d: int = 5

    dimension: ClassVar[int] = 3
    names: ClassVar[Tuple[str, ...]] = ("1", "H", "L", "P")
    anticanonical: ClassVar[int] = 2

    def __post_init__(self):
        if not 1 <= self.degree_d <= 5:
            raise ValueError(
                f"del Pezzo threefolds have degree 1..5, got {self.degree_d}"
            )

    def constant(self, i: int, j: int) -> Fraction:
        if i + j > 3:
            return Fraction(0)
        if i == 0 or j == 0:
            return Fraction(1)
        if i == 1 and j == 1:
            return Fraction(self.degree_d)
        # H.L = P
        return Fraction(1)

    @property
    def element_type(self):
        return ThreefoldClass


@dataclass(frozen=True)
class PlaneRing(ChowRing):
    """Chow ring of the projective plane; h.h = p."""

    dimension: ClassVar[int] = 2
    names: ClassVar[Tuple[str, ...]] = ("1", "h", "p")
    anticanonical: ClassVar[int] = 3

    def constant(self, i: int, j: int) -> Fraction:
        return Fraction(1) if i + j <= 2 else Fraction(0)

    @property
    def element_type(self):
        return PlaneClass


@dataclass(frozen=True)
class ChowClass:
    """An element of a ChowRing, stored by graded coefficients."""

    ring: ChowRing
    coeffs: Tuple[Fraction, ...]

    def _check(self, other: "ChowClass"):
        if not isinstance(other, ChowClass) or other.ring != self.ring:
            raise RingMismatchError(
                f"cannot combine classes of {self.ring} and "
                f"{getattr(other, 'ring', other)}"
            )

    def _new(self, coeffs) -> "ChowClass":
        return type(self)(self.ring, tuple(coeffs))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return self._new(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __neg__(self) -> "ChowClass":
        return self._new(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new(Fraction(other) * a for a in self.coeffs)
        self._check(other)
        top = self.ring.dimension
        result = [Fraction(0)] * (top + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0 or i + j > top:
                    continue
                result[i + j] += a * b * self.ring.constant(i, j)
        return self._new(result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ChowClass":
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def part(self, k: int) -> Fraction:
        """Coefficient of the degree-k generator."""
        return self.coeffs[k]

    def integrate(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        terms = [
            f"{a}*{name}" if name != "1" else f"{a}"
            for a, name in zip(self.coeffs, self.ring.names) if a != 0
        ]
        return " + ".join(terms) if terms else "0"


class ThreefoldClass(ChowClass):
    """Element c0 + c1 H + c2 L + c3 P of a ThreefoldRing."""

    @property
    def c0(self) -> Fraction:
        return self.coeffs[0]

    @property
    def c1(self) -> Fraction:
        return self.coeffs[1]

    @property
    def c2(self) -> Fraction:
        return self.coeffs[2]

    @property
    def c3(self) -> Fraction:
        return self.coeffs[3]


class PlaneClass(ChowClass):
    """Element of the PlaneRing."""


@dataclass(frozen=True)
class ProjBundleRing:
    """
    Numerical ring of P(E) = Proj Sym E for a rank-2 bundle E on a base.

    ``bundle_c1`` and ``bundle_c2`` are multiples of the base generators
    of degree one and two. Elements are kept as alpha + beta * xi, using
    xi^2 = c1 xi - c2.
    """

    base: ChowRing
    bundle_c1: int
    bundle_c2: int

    rank: ClassVar[int] = 2

    @property
    def dimension(self) -> int:
        return self.base.dimension + 1

    @property
    def c1_class(self) -> ChowClass:
        return self.base.generator(1) * self.bundle_c1

    @property
    def c2_class(self) -> ChowClass:
        return self.base.generator(2) * self.bundle_c2

    def element(self, base_part: ChowClass,
                xi_part: ChowClass = None) -> "ProjBundleElement":
        if xi_part is None:
            xi_part = self.base.zero()
        for part in (base_part, xi_part):
            if part.ring != self.base:
                raise RingMismatchError(
                    f"{part.ring} is not the base ring {self.base}"
                )
        return ProjBundleElement(self, base_part, xi_part)

    def pullback(self, base_class: ChowClass) -> "ProjBundleElement":
        return self.element(base_class)

    def xi(self) -> "ProjBundleElement":
        return self.element(self.base.zero(), self.base.one())

    def h(self) -> "ProjBundleElement":
        """Pullback of the base hyperplane class."""
        return self.pullback(self.base.generator(1))

    def one(self) -> "ProjBundleElement":
        return self.pullback(self.base.one())


@dataclass(frozen=True)
class ProjBundleElement:
    """alpha + beta * xi with alpha, beta in the base ring."""

    ring: ProjBundleRing
    base_part: ChowClass
    xi_part: ChowClass

    def _check(self, other: "ProjBundleElement"):
        if not isinstance(other, ProjBundleElement) or other.ring != self.ring:
            raise RingMismatchError(
                "cannot combine elements of different projective bundles"
            )

    def __add__(self, other: "ProjBundleElement") -> "ProjBundleElement":
        self._check(other)
        return ProjBundleElement(
            self.ring,
            self.base_part + other.base_part,
            self.xi_part + other.xi_part,
        )

    def __neg__(self) -> "ProjBundleElement":
        return ProjBundleElement(self.ring, -self.base_part, -self.xi_part)

    def __sub__(self, other: "ProjBundleElement") -> "ProjBundleElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ProjBundleElement(
                self.ring, self.base_part * other, self.xi_part * other
            )
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ProjBundleElement":
        result = self.ring.one()
        for _ in range(n):
            result = mul(result, self)
        return result

    def integrate(self) -> Fraction:
        return integrate(self)

    def __str__(self) -> str:
        return f"({self.base_part}) + ({self.xi_part})*xi"


def mul(a: ProjBundleElement, b: ProjBundleElement) -> ProjBundleElement:
    """
    Product of two elements of the same projective bundle.

    Args:
        a: Left factor.
        b: Right factor.

    Returns:
        The Chern-Wu reduced product.
    """
    a._check(b)
    ring = a.ring
    beta_delta = a.xi_part * b.xi_part
    base_part = a.base_part * b.base_part - beta_delta * ring.c2_class
    xi_part = (
        a.base_part * b.xi_part
        + a.xi_part * b.base_part
        + beta_delta * ring.c1_class
    )
    return ProjBundleElement(ring, base_part, xi_part)


def integrate(a: ProjBundleElement) -> Fraction:
    """Degree of the top component: push xi forward, read the point."""
    return a.xi_part.integrate()


def _monomials(ring: ProjBundleRing, poly) -> Tuple[Tuple[int, int, Fraction],
                                                     ...]:
    expr = sympy.sympify(poly, locals={"xi": XI, "h": H})
    extra = expr.free_symbols - {XI, H}
    if extra:
        raise NonHomogeneousError(
            f"unexpected symbols {sorted(map(str, extra))}"
        )
    terms = sympy.Poly(sympy.expand(expr), XI, H).terms()
    monomials = []
    for (i, j), coeff in terms:
        if coeff == 0:
            continue
        if i + j != ring.dimension:
            raise NonHomogeneousError(
                f"monomial xi^{i} h^{j} has degree {i + j}, "
                f"expected {ring.dimension}"
            )
        monomials.append((i, j, as_rational(coeff)))
    return tuple(monomials)


def evaluate(ring: ProjBundleRing, poly) -> Fraction:
    """
    Integrate a top-degree polynomial in ``xi`` and ``h`` over P(E).

    Args:
        ring: The projective bundle.
        poly: A sympy expression or string in the symbols xi and h.

    Returns:
        The intersection number.

    Raises:
        NonHomogeneousError: A monomial is not of top degree.
    """
    xi, h = ring.xi(), ring.h()
    total = Fraction(0)
    for i, j, coeff in _monomials(ring, poly):
        total += coeff * integrate(xi ** i * h ** j)
    logger.debug(f"evaluate({poly}) on {ring} = {total}")
    return total


def eval_degree4(ring: ProjBundleRing, poly) -> Fraction:
    """Degree-4 evaluation on the projectivization over a threefold."""
    if not isinstance(ring.base, ThreefoldRing):
        raise RingMismatchError("eval_degree4 needs a threefold base")
    return evaluate(ring, poly)
