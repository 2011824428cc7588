"""
Exact Numbers - Rational Arithmetic and Dense Exact Linear Algebra
==================================================================

This module handles:
- Rational values (``fractions.Fraction``) and their parsing
- Small dense rational matrices
- Rank by fraction-free (Bareiss) elimination
- Exact linear solving with integer solution extraction
- Common projective roots of binary quadratic forms

Nothing here ever touches floating point.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, str, Fraction]

# a*v0^2 + b*v0*v1 + c*v1^2
BinaryQuadratic = Tuple[Fraction, Fraction, Fraction]

V0, V1 = sympy.symbols("v0 v1")


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction, sympy rational or "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs "
                f"{self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]],
                  cols: Optional[int] = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
        entries = tuple(as_rational(x) for r in rows for x in r)
        return cls(len(rows), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[Fraction]]:
        return [
            list(self.entries[i * self.cols:(i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(self[i, j] for i in range(self.rows))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            self.rows, self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def scale(self, factor: RationalLike) -> "RatMatrix":
        factor = as_rational(factor)
        return RatMatrix(
            self.rows, self.cols, tuple(factor * a for a in self.entries)
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} "
                f"by {other.rows}x{other.cols}"
            )
        return RatMatrix.from_rows(
            [
                [
                    sum((self[i, k] * other[k, j] for k in range(self.cols)),
                        Fraction(0))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def apply(self, vector: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        values = [as_rational(v) for v in vector]
        return tuple(
            sum((self[i, j] * values[j] for j in range(self.cols)),
                Fraction(0))
            for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def _check_same_shape(self, other: "RatMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")


def hstack(matrices: Sequence[RatMatrix]) -> RatMatrix:
    rows = matrices[0].rows
    return RatMatrix.from_rows(
        [[x for m in matrices for x in m.row(i)] for i in range(rows)]
    )


def vstack(matrices: Sequence[RatMatrix]) -> RatMatrix:
    cols = matrices[0].cols
    return RatMatrix.from_rows(
        [m.row(i) for m in matrices for i in range(m.rows)], cols=cols
    )


def _integer_rows(m: RatMatrix) -> List[List[int]]:
    """Clear denominators row by row; rank is unchanged."""
    result = []
    for row in m.to_rows():
        scale = lcm(*(x.denominator for x in row)) if row else 1
        result.append([int(x * scale) for x in row])
    return result


def mat_rank(m: RatMatrix) -> int:
    """
    Rank over the rationals by fraction-free Gaussian elimination.

    After clearing denominators the Bareiss recurrence keeps every
    intermediate entry equal to a minor of the input, so each division
    by the previous pivot is exact.
    """
    work = _integer_rows(m)
    n_rows, n_cols = m.rows, m.cols
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next(
            (r for r in range(rank, n_rows) if work[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, n_rows):
            lead = work[r][col]
            for c in range(col + 1, n_cols):
                work[r][c] = (
                    pivot * work[r][c] - lead * work[rank][c]
                ) // previous_pivot
            work[r][col] = 0
        previous_pivot = pivot
        rank += 1
    return rank


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int]]:
    """Reduced row echelon form and the pivot columns."""
    work = m.to_rows()
    pivots: List[int] = []
    row = 0
    for col in range(m.cols):
        if row == m.rows:
            break
        pivot_row = next(
            (r for r in range(row, m.rows) if work[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        pivot = work[row][col]
        work[row] = [x / pivot for x in work[row]]
        for r in range(m.rows):
            if r != row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    return RatMatrix.from_rows(work, cols=m.cols), pivots


@dataclass(frozen=True)
class LinearSolution:
    """
    Outcome of solve_linear_integer.

    ``solutions`` holds every integer solution when the solution set is
    finite. When it is not, ``underdetermined`` is set and the rational
    solution set is ``particular + span(kernel)``.
    """

    solutions: Tuple[Tuple[int, ...], ...] = ()
    underdetermined: bool = False
    consistent: bool = True
    particular: Optional[Tuple[Fraction, ...]] = None
    kernel: Tuple[Tuple[Fraction, ...], ...] = ()


def solve_linear_integer(a: RatMatrix,
                         b: Sequence[RationalLike]) -> LinearSolution:
    """
    Solve a.x = b exactly and keep the integer solutions.

    Args:
        a: Coefficient matrix.
        b: Right-hand side, one entry per row of ``a``.

    Returns:
        A LinearSolution. An inconsistent system yields no solutions and
        ``consistent=False``; it is not an error.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = hstack([a, RatMatrix.from_rows([[x] for x in b], cols=1)])
    reduced, pivots = rref(augmented)
    if a.cols in pivots:
        logger.debug("Inconsistent linear system")
        return LinearSolution(consistent=False)

    particular = [Fraction(0)] * a.cols
    for r, col in enumerate(pivots):
        particular[col] = reduced[r, a.cols]

    free = [c for c in range(a.cols) if c not in pivots]
    if free:
        kernel = []
        for f in free:
            vec = [Fraction(0)] * a.cols
            vec[f] = Fraction(1)
            for r, col in enumerate(pivots):
                vec[col] = -reduced[r, f]
            kernel.append(tuple(vec))
        return LinearSolution(
            underdetermined=True,
            particular=tuple(particular),
            kernel=tuple(kernel),
        )

    if all(is_integral(x) for x in particular):
        return LinearSolution(
            solutions=(tuple(int(x) for x in particular),),
            particular=tuple(particular),
        )
    return LinearSolution(particular=tuple(particular))


def inverse(m: RatMatrix) -> RatMatrix:
    """Inverse of a square invertible matrix."""
    if m.rows != m.cols:
        raise ValueError("only square matrices have inverses")
    n = m.rows
    reduced, pivots = rref(hstack([m, RatMatrix.identity(n)]))
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return RatMatrix.from_rows(
        [reduced.row(i)[n:] for i in range(n)], cols=n
    )


def _form_poly(form: Sequence[RationalLike]) -> sympy.Poly:
    a, b, c = (as_rational(x) for x in form)
    expr = sum(
        (sympy.Rational(x.numerator, x.denominator) * mono
         for x, mono in zip((a, b, c), (V0 ** 2, V0 * V1, V1 ** 2))),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, V0, V1, domain=sympy.QQ)


def binary_forms_gcd(forms: Iterable[Sequence[RationalLike]]
                     ) -> Optional[sympy.Poly]:
    """Monic gcd of the nonzero forms, or None when all are zero."""
    result = None
    for form in forms:
        poly = _form_poly(form)
        if poly.is_zero:
            continue
        result = poly if result is None else result.gcd(poly)
        if result.total_degree() == 0:
            break
    return result


def common_projective_root_binary(
        forms: Iterable[Sequence[RationalLike]]) -> bool:
    """
    Whether binary quadratic forms share a root in P^1 over the
    algebraic closure.

    A zero form imposes no condition, so an empty or all-zero input has
    a common root.
    """
    g = binary_forms_gcd(forms)
    return g is None or g.total_degree() > 0
