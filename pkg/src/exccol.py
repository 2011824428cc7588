"""
Exceptional Collection - Numerical K-Theory of the Quintic del Pezzo
====================================================================

This module handles:
- K-classes in the basis ([O(-1)], [Q(-1)], [R], [O])
- The Gram matrix of the Euler form on that basis
- Left and right mutations at class level
- Serre operators of the threefold and of contiguous sub-collections
- Mutation identities used for instanton bundles

Shifts only appear as signs: an odd shift negates a class.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .bundles import (
    BundleClass,
    Catalog,
    ChernCharacter,
    chern_character,
    chi_pair,
    normalized_bundle,
    twist,
)
from .errors import KClassError, NotExceptionalError
from .exactnum import RatMatrix, inverse, solve_linear_integer

logger = logging.getLogger(__name__)

BASIS_NAMES = ("O(-1)", "Q(-1)", "R", "O")

# Sub-collections <O(-1), Q(-1), R> and <Q(-1), R>
SUB_B = range(0, 3)
SUB_A = range(1, 3)


@dataclass(frozen=True)
class KClass:
    """Integer coordinates over the exceptional basis."""

    coefficients: Tuple[int, ...]

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(tuple(
            a + b for a, b in zip(self.coefficients, other.coefficients)
        ))

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def __neg__(self) -> "KClass":
        return KClass(tuple(-a for a in self.coefficients))

    def __mul__(self, n: int) -> "KClass":
        return KClass(tuple(n * a for a in self.coefficients))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def support(self) -> List[int]:
        return [i for i, a in enumerate(self.coefficients) if a]

    def __str__(self) -> str:
        terms = [
            f"{a}[{name}]" for a, name in zip(self.coefficients, BASIS_NAMES)
            if a
        ]
        return " + ".join(terms) if terms else "0"


def basis_vector(i: int) -> KClass:
    return KClass(tuple(1 if k == i else 0 for k in range(4)))


@dataclass(frozen=True)
class GramMatrix:
    """g[i][j] = chi(E_i, E_j) over the exceptional basis."""

    entries: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_upper_unitriangular(self) -> bool:
        n = self.size
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(i + 1)
        )

    def block(self, indices: Sequence[int]) -> RatMatrix:
        return RatMatrix.from_rows(
            [[self.entries[i][j] for j in indices] for i in indices]
        )

    def to_matrix(self) -> RatMatrix:
        return self.block(range(self.size))


class ExceptionalCollection:
    """
    The full strong exceptional collection <O(-1), Q(-1), R, O> on the
    quintic del Pezzo threefold, over a (possibly altered) catalog.
    """

    def __init__(self, catalog: Catalog = None):
        self.logger = logging.getLogger(__name__)
        self.catalog = catalog or Catalog(degree=5)
        if self.catalog.ring.degree_d != 5:
            raise KClassError("the exceptional basis lives on degree 5 only")
        self.basis: Tuple[BundleClass, ...] = tuple(
            self.catalog.get(name) for name in BASIS_NAMES
        )
        self._characters = tuple(chern_character(b) for b in self.basis)
        self._change = RatMatrix.from_rows(
            [[ch.part(k) for ch in self._characters] for k in range(4)]
        )
        self._gram = GramMatrix(tuple(
            tuple(int(chi_pair(a, b)) for b in self.basis)
            for a in self.basis
        ))
        self.logger.debug(f"Gram matrix {self._gram.entries}")

    # -- coordinates ---------------------------------------------------

    def kclass_of_character(self, ch: ChernCharacter) -> KClass:
        target = [ch.part(k) for k in range(4)]
        solution = solve_linear_integer(self._change, target)
        if not solution.solutions:
            raise KClassError(
                f"character {target} is not an integer combination "
                f"of the exceptional basis"
            )
        return KClass(solution.solutions[0])

    def to_kclass(self, b: BundleClass) -> KClass:
        """
        Integer coordinates of a bundle class.

        Raises:
            KClassError: The coordinates are not integral.
        """
        return self.kclass_of_character(chern_character(b))

    def character(self, k: KClass) -> ChernCharacter:
        total = self._characters[0] * 0
        for a, ch in zip(k.coefficients, self._characters):
            total = total + ch * a
        return total

    def rank(self, k: KClass) -> int:
        return int(self.character(k).ch0)

    # -- Euler form ----------------------------------------------------

    def gram(self) -> GramMatrix:
        return self._gram

    def chi(self, e: KClass, f: KClass) -> int:
        g = self._gram.entries
        return sum(
            a * g[i][j] * b
            for i, a in enumerate(e.coefficients) if a
            for j, b in enumerate(f.coefficients) if b
        )

    # -- mutations -----------------------------------------------------

    def _require_exceptional(self, e: KClass):
        value = self.chi(e, e)
        if value != 1:
            raise NotExceptionalError(f"chi({e}, {e}) = {value}, expected 1")

    def lmut(self, e: KClass, f: KClass) -> KClass:
        """Class of the cone of Ext(e, f) (x) e -> f."""
        self._require_exceptional(e)
        return f - e * self.chi(e, f)

    def rmut(self, e: KClass, f: KClass) -> KClass:
        """Class of the cocone of f -> Ext(f, e)^v (x) e."""
        self._require_exceptional(e)
        return f - e * self.chi(f, e)

    def mutate_basis(self, i: int, direction: str = "left"
                     ) -> Tuple[Tuple[KClass, ...], GramMatrix]:
        """
        Mutate the adjacent pair (E_i, E_{i+1}).

        Args:
            i: Position of the left object of the pair.
            direction: ``"left"`` gives (L_{E_i} E_{i+1}, E_i);
                ``"right"`` gives (E_{i+1}, R_{E_{i+1}} E_i).

        Returns:
            The new basis classes and their Gram matrix.
        """
        classes = [basis_vector(k) for k in range(4)]
        e, f = classes[i], classes[i + 1]
        if direction == "left":
            classes[i], classes[i + 1] = self.lmut(e, f), e
        elif direction == "right":
            classes[i], classes[i + 1] = f, self.rmut(f, e)
        else:
            raise ValueError(f"unknown mutation direction {direction!r}")
        gram = GramMatrix(tuple(
            tuple(self.chi(a, b) for b in classes) for a in classes
        ))
        return tuple(classes), gram

    # -- Serre operators ---------------------------------------------

    def _twisted(self, f: KClass, n: int) -> KClass:
        ch = self.character(f) * _exp_twist(self.catalog, n)
        return self.kclass_of_character(ch)

    def serre(self, f: KClass) -> KClass:
        """-(f (x) O(-2)): the Serre functor with its odd shift [3]."""
        return -self._twisted(f, -2)

    def serre_inverse(self, f: KClass) -> KClass:
        return -self._twisted(f, 2)

    def _check_in_span(self, indices: range, f: KClass):
        outside = [i for i in f.support() if i not in indices]
        if outside:
            raise KClassError(
                f"{f} is not in the span of "
                f"{[BASIS_NAMES[i] for i in indices]}"
            )

    def _complement(self, indices: range) -> Tuple[List[int], List[int]]:
        before = [k for k in range(4) if k < indices.start]
        after = [k for k in range(4) if k >= indices.stop]
        return before, after

    def serre_sub(self, indices: range, f: KClass) -> KClass:
        """
        Serre operator of the sub-collection at ``indices``.

        S_X is followed by right mutations through S(E_k) for the
        objects after the block and then through E_k for the objects
        before it.
        """
        self._check_in_span(indices, f)
        before, after = self._complement(indices)
        result = self.serre(f)
        for e in ([self.serre(basis_vector(k)) for k in after]
                  + [basis_vector(k) for k in before]):
            result = self.rmut(e, result)
        self._check_in_span(indices, result)
        return result

    def serre_sub_inverse(self, indices: range, f: KClass) -> KClass:
        self._check_in_span(indices, f)
        before, after = self._complement(indices)
        result = self.serre_inverse(f)
        walls = ([basis_vector(k) for k in after]
                 + [self.serre_inverse(basis_vector(k)) for k in before])
        for e in reversed(walls):
            result = self.lmut(e, result)
        self._check_in_span(indices, result)
        return result

    def subcategory_serre_matrix(self, indices: range) -> RatMatrix:
        """G^{-1} G^T on the block, acting on coordinate columns."""
        block = self._gram.block(indices)
        return inverse(block) @ block.transpose()

    # -- instanton identities ------------------------------------------

    def instanton_mutation_class(self, c2: int) -> KClass:
        """[V] for V = R_{O(-1)} L_O (E(1)) [-1], E = E{0, c2}."""
        e_twisted = self.to_kclass(
            twist(normalized_bundle(0, c2, self.catalog.ring), 1)
        )
        mutated = self.rmut(basis_vector(0), self.lmut(basis_vector(3),
                                                       e_twisted))
        return -mutated

    def two_term_decomposition(self, v: KClass) -> Tuple[int, int]:
        """
        (chi(R, v), chi(v, Q(-1))) for v in <Q(-1), R>, so that
        [v] = chi(R, v)[R] + chi(v, Q(-1))[Q(-1)].
        """
        self._check_in_span(SUB_A, v)
        return self.chi(basis_vector(2), v), self.chi(v, basis_vector(1))

    def tilting_classes(self) -> Tuple[KClass, KClass]:
        """[Q(-1)] and [H] with H = R_{Q(-1)}(O(-1))[1]."""
        q = basis_vector(1)
        h = -self.rmut(q, basis_vector(0))
        return q, h


def _exp_twist(catalog: Catalog, n: int):
    line = twist(catalog.get("O"), n)
    return chern_character(line).cls


@lru_cache(maxsize=1)
def default_collection() -> ExceptionalCollection:
    return ExceptionalCollection()


def to_kclass(b: BundleClass) -> KClass:
    return default_collection().to_kclass(b)


def gram() -> GramMatrix:
    return default_collection().gram()


def lmut(e: KClass, f: KClass) -> KClass:
    return default_collection().lmut(e, f)


def rmut(e: KClass, f: KClass) -> KClass:
    return default_collection().rmut(e, f)


def serre(f: KClass) -> KClass:
    return default_collection().serre(f)


def serre_inverse(f: KClass) -> KClass:
    return default_collection().serre_inverse(f)


def serre_sub(indices: range, f: KClass) -> KClass:
    return default_collection().serre_sub(indices, f)


def serre_sub_inverse(indices: range, f: KClass) -> KClass:
    return default_collection().serre_sub_inverse(indices, f)


def chi(e: KClass, f: KClass) -> int:
    return default_collection().chi(e, f)


def column_kclass(column: Sequence[Fraction], indices: range) -> KClass:
    """Embed coordinates over a sub-collection into the full basis."""
    coeffs = [0] * 4
    for value, k in zip(column, indices):
        if Fraction(value).denominator != 1:
            raise KClassError(f"non-integral coordinate {value}")
        coeffs[k] = int(value)
    return KClass(tuple(coeffs))
