"""
Bundles - Chern Data and Hirzebruch-Riemann-Roch
================================================

This module handles:
- Bundle classes (rank and integer Chern classes) and Chern characters
- The Todd class of a del Pezzo threefold or of the plane
- Duals, twists and direct sums
- Euler characteristics and Euler pairings
- The named catalog: O(n), R, Q and their derived entries, plus the
  rank-2 bundle G on the plane of lines
"""

import logging
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .chow import ChowClass, ChowRing, PlaneRing, ThreefoldRing
from .errors import (
    InconsistentChernDataError,
    RingMismatchError,
    UnknownBundleError,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BundleClass:
    """
    Rank and Chern classes of a bundle, as multiples of the ring's
    generators (H, L, P on a threefold; h, p on the plane).
    """

    rank: int
    c1: int
    c2: int
    c3: int
    ring: ChowRing
    name: Optional[str] = field(default=None, compare=False)

    @property
    def is_normalized(self) -> bool:
        return self.rank == 2 and self.c1 in (0, -1)

    def chern_classes(self) -> Tuple[ChowClass, ...]:
        ring = self.ring
        classes = [ring.one() * self.rank, ring.generator(1) * self.c1,
                   ring.generator(2) * self.c2]
        if ring.dimension >= 3:
            classes.append(ring.generator(3) * self.c3)
        elif self.c3:
            raise InconsistentChernDataError(
                f"c3 = {self.c3} on a base of dimension {ring.dimension}"
            )
        return tuple(classes)

    def total_chern_class(self) -> ChowClass:
        classes = self.chern_classes()
        total = self.ring.one()
        for c in classes[1:]:
            total = total + c
        return total

    def label(self) -> str:
        if self.name:
            return self.name
        return f"[r={self.rank}, c1={self.c1}, c2={self.c2}, c3={self.c3}]"


@dataclass(frozen=True)
class ChernCharacter:
    """ch0 + ch1 g1 + ch2 g2 (+ ch3 g3) with rational coefficients."""

    cls: ChowClass

    @property
    def ring(self) -> ChowRing:
        return self.cls.ring

    def part(self, k: int) -> Fraction:
        return self.cls.coeffs[k] if k < len(self.cls.coeffs) else Fraction(0)

    @property
    def ch0(self) -> Fraction:
        return self.part(0)

    @property
    def ch1(self) -> Fraction:
        return self.part(1)

    @property
    def ch2(self) -> Fraction:
        return self.part(2)

    @property
    def ch3(self) -> Fraction:
        return self.part(3)

    def dual(self) -> "ChernCharacter":
        return ChernCharacter(self.cls._new(
            -a if k % 2 else a for k, a in enumerate(self.cls.coeffs)
        ))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.cls + other.cls)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.cls - other.cls)

    def __mul__(self, other):
        if isinstance(other, ChernCharacter):
            return ChernCharacter(self.cls * other.cls)
        return ChernCharacter(self.cls * other)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ToddClass:
    """Todd class 1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24 of the base."""

    cls: ChowClass
    tangent_c2: Fraction

    @property
    def td2(self) -> Fraction:
        return self.cls.part(2)

    @property
    def td3(self) -> Fraction:
        return self.cls.part(3) if len(self.cls.coeffs) > 3 else Fraction(0)

    def integral(self) -> Fraction:
        return self.cls.integrate()


def tangent_c2(ring: ChowRing) -> Fraction:
    """
    c2 of the tangent bundle, as a multiple of the degree-2 generator,
    forced by the Todd normalization chi(O) = 1.
    """
    k = Fraction(ring.anticanonical)
    if ring.dimension == 3:
        return 24 / (k * ring.constant(1, 2))
    if ring.dimension == 2:
        return 12 - k * k * ring.constant(1, 1)
    raise ValueError(f"no Todd normalization for dimension {ring.dimension}")


def todd_class(ring: ChowRing) -> ToddClass:
    c2_value = tangent_c2(ring)
    c1 = ring.generator(1) * ring.anticanonical
    c2 = ring.generator(2) * c2_value
    td = ring.one() + c1 * HALF + (c1 * c1 + c2) * Fraction(1, 12)
    if ring.dimension >= 3:
        td = td + c1 * c2 * Fraction(1, 24)
    return ToddClass(td, c2_value)


def chern_character(b: BundleClass) -> ChernCharacter:
    """ch = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6."""
    classes = b.chern_classes()
    c1, c2 = classes[1], classes[2]
    ch = classes[0] + c1 + (c1 * c1 - c2 * 2) * HALF
    if len(classes) > 3:
        c3 = classes[3]
        ch = ch + (c1 ** 3 - c1 * c2 * 3 + c3 * 3) * Fraction(1, 6)
    return ChernCharacter(ch)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InconsistentChernDataError(f"{what} = {value} is not integral")
    return int(value)


def from_chern_character(ch: ChernCharacter,
                         name: Optional[str] = None) -> BundleClass:
    """
    Invert chern_character.

    Raises:
        InconsistentChernDataError: Some Chern class is not integral.
    """
    ring = ch.ring
    g1, g2 = ring.generator(1), ring.generator(2)
    c1 = g1 * ch.ch1
    c2 = (c1 * c1 - g2 * (2 * ch.ch2)) * HALF
    c3_value = Fraction(0)
    if ring.dimension >= 3:
        ch3 = ring.generator(3) * ch.ch3
        c3_value = ((ch3 * 6 - c1 ** 3 + c1 * c2 * 3)
                    * Fraction(1, 3)).part(3)
    return BundleClass(
        rank=_integral(ch.ch0, "rank"),
        c1=_integral(ch.ch1, "c1"),
        c2=_integral(c2.part(2), "c2"),
        c3=_integral(c3_value, "c3"),
        ring=ring,
        name=name,
    )


def dual(b: BundleClass) -> BundleClass:
    name = f"{b.name}^v" if b.name else None
    return from_chern_character(chern_character(b).dual(), name=name)


def _exp_hyperplane(ring: ChowRing, n: int) -> ChowClass:
    h = ring.generator(1) * n
    result, power, factorial = ring.one(), ring.one(), 1
    for k in range(1, ring.dimension + 1):
        power = power * h
        factorial *= k
        result = result + power * Fraction(1, factorial)
    return result


def twist(b: BundleClass, n: int) -> BundleClass:
    """Tensor with O(n)."""
    if n == 0:
        return b
    ch = chern_character(b) * _exp_hyperplane(b.ring, n)
    name = f"{b.name}({n:+d})" if b.name else None
    return from_chern_character(ch, name=name)


def direct_sum(a: BundleClass, b: BundleClass) -> BundleClass:
    _same_ring(a, b)
    return from_chern_character(chern_character(a) + chern_character(b))


def _same_ring(a: BundleClass, b: BundleClass):
    if a.ring != b.ring:
        raise RingMismatchError(
            f"{a.label()} and {b.label()} live on different bases"
        )


def euler_integral(ch: ChernCharacter) -> Fraction:
    """Integral of ch against the Todd class, without integrality check."""
    return (ch.cls * todd_class(ch.ring).cls).integrate()


def chi(b: BundleClass) -> Fraction:
    """
    Euler characteristic by Hirzebruch-Riemann-Roch.

    Raises:
        InconsistentChernDataError: The result is not an integer.
    """
    value = euler_integral(chern_character(b))
    _integral(value, f"chi({b.label()})")
    return value


def chi_pair(a: BundleClass, b: BundleClass) -> Fraction:
    """Euler pairing chi(a, b) = sum of (-1)^i ext^i(a, b)."""
    _same_ring(a, b)
    value = euler_integral(chern_character(a).dual() * chern_character(b))
    _integral(value, f"chi({a.label()}, {b.label()})")
    return value


def chi_normal_elliptic(h_degree: int, genus: int = 1) -> int:
    """
    chi of the normal bundle of a curve C of the given H-degree.

    deg N = -K.C + 2g - 2 = 2 h_degree + 2g - 2 and rank N = 2, so
    chi(N) = deg N + 2(1 - g).
    """
    if h_degree < 1:
        raise ValueError(f"curve degree must be positive, got {h_degree}")
    degree_n = 2 * h_degree + 2 * genus - 2
    return degree_n + 2 * (1 - genus)


def line_bundle(ring: ChowRing, n: int = 0) -> BundleClass:
    name = "O" if n == 0 else f"O({n})"
    return BundleClass(1, n, 0, 0, ring, name=name)


def normalized_bundle(c1: int, c2: int,
                      ring: Optional[ChowRing] = None) -> BundleClass:
    """The rank-2 class E{c1, c2} with c3 = 0."""
    ring = ring or ThreefoldRing(5)
    return BundleClass(2, c1, c2, 0, ring, name=f"E({c1},{c2})")


def lines_bundle() -> BundleClass:
    """G on the plane parametrizing lines of the quintic del Pezzo."""
    return BundleClass(2, 3, 6, 0, PlaneRing(), name="G")


_NAME_PATTERN = re.compile(
    r"^\s*([A-Za-z_^v∨]+?)\s*(?:\(\s*([+-]?\d+)\s*\))?\s*$"
)

_ALIASES = {
    "Q^v": "Qv", "Q^∨": "Qv", "Q∨": "Qv", "Qdual": "Qv",
    "R^v": "Rv", "R^∨": "Rv", "R∨": "Rv", "Rdual": "Rv",
    "I": "I_l", "Il": "I_l",
    "omega": "omega", "w": "omega",
}


class Catalog:
    """
    Named bundles on the del Pezzo threefold of a given degree.

    R and Q are the restrictions of the universal subbundle and quotient
    bundle from Gr(2, 5). Overrides replace fields of the base entries,
    e.g. ``{"R": {"c2": 3}}``, so a corrupted catalog can be exercised.
    """

    BASE_NAMES = ("O", "R", "Q", "Qv", "Rv", "I_l", "omega")
    # restrictions from Gr(2, 5) exist on the quintic only
    QUINTIC_ONLY = frozenset({"R", "Q", "Qv", "Rv"})

    def __init__(self, degree: int = 5,
                 overrides: Optional[Dict[str, Dict[str, int]]] = None):
        self.logger = logging.getLogger(__name__)
        self.ring = ThreefoldRing(degree)
        self.overrides = dict(overrides or {})
        base = {
            "O": line_bundle(self.ring),
            "R": BundleClass(2, -1, 2, 0, self.ring, name="R"),
            "Q": BundleClass(3, 1, 3, 1, self.ring, name="Q"),
            "I_l": BundleClass(1, 0, 1, 0, self.ring, name="I_l"),
        }
        for name, fields in self.overrides.items():
            if name not in base:
                raise UnknownBundleError(f"cannot override unknown {name!r}")
            self.logger.warning(f"Catalog override {name}: {fields}")
            base[name] = replace(base[name], **fields)
        base["Qv"] = replace(dual(base["Q"]), name="Q^v")
        base["Rv"] = replace(dual(base["R"]), name="R^v")
        base["omega"] = replace(twist(base["O"], -2), name="omega")
        self._base = base

    def get(self, name: str) -> BundleClass:
        """
        Look up ``NAME`` or ``NAME(n)``, e.g. ``O(-1)``, ``Q(-1)``, ``Q^v``.

        Raises:
            UnknownBundleError: The name is not in the catalog, or names
                R, Q or their duals away from degree 5.
        """
        match = _NAME_PATTERN.match(name)
        if not match:
            raise UnknownBundleError(f"unknown bundle {name!r}")
        base_name, shift = match.group(1), match.group(2)
        base_name = _ALIASES.get(base_name, base_name)
        if base_name not in self._base:
            raise UnknownBundleError(f"unknown bundle {name!r}")
        if base_name in self.QUINTIC_ONLY and self.ring.degree_d != 5:
            raise UnknownBundleError(
                f"{name!r} is only defined on the quintic del Pezzo "
                f"threefold, not in degree {self.ring.degree_d}"
            )
        n = int(shift) if shift else 0
        bundle = twist(self._base[base_name], n)
        return replace(bundle, name=name.strip())

    def entries(self) -> List[BundleClass]:
        """The finite table used by catalog-wide checks."""
        names = [f"O({n})" if n else "O" for n in range(-4, 5)]
        names += ["R", "Q", "Q(-1)", "Q^v", "Q^v(1)", "R(1)", "R^v",
                  "I_l", "omega"]
        return [self.get(n) for n in names]

    def whitney_holds(self) -> bool:
        """c(R) c(Q) = 1, the shadow of 0 -> R -> O^5 -> Q -> 0."""
        product = (self._base["R"].total_chern_class()
                   * self._base["Q"].total_chern_class())
        holds = product == self.ring.one()
        if not holds:
            self.logger.warning(f"Whitney fails: c(R)c(Q) = {product}")
        return holds

    def __contains__(self, name: str) -> bool:
        try:
            self.get(name)
        except UnknownBundleError:
            return False
        return True
