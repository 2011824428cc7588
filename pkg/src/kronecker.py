"""
Kronecker - Representations of the 5-Kronecker Quiver
=====================================================

This module handles:
- Dimension vectors, the weight theta(a, b) = b - a and the Euler form
- Representations given by five exact rational maps W1 -> W0
- Theta-semistability and stability for dimension vector (2, 2)
- The determinant quadric det(x1 A1 + ... + x5 A5)
- Seeded random representations and a finite-field oracle that decides
  the same questions by enumerating every candidate subspace
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import RepresentationError
from .exactnum import (
    RatMatrix,
    binary_forms_gcd,
    inverse,
    mat_rank,
    vstack,
    hstack,
)
from .exccol import ExceptionalCollection, KClass

logger = logging.getLogger(__name__)

ARROWS = 5
ENTRY_RANGE = 9
# dimension of the rank-3 quadric stratum of the moduli space
RANK_THREE_LOCUS_DIM = 11


@dataclass(frozen=True)
class DimVector:
    """(dim W0, dim W1); W0 sits at the Q(-1) vertex, W1 at the H vertex."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"negative dimension vector ({self.a}, {self.b})")

    def __iter__(self):
        return iter((self.a, self.b))


def theta(v: DimVector) -> int:
    return v.b - v.a


def euler_form(v: DimVector, w: DimVector) -> int:
    """<v, w> = a a' + b b' - 5 b a' for arrows W1 -> W0."""
    return v.a * w.a + v.b * w.b - ARROWS * v.b * w.a


def moduli_dim(v: DimVector) -> int:
    return 1 - euler_form(v, v)


def kclass_of_rep(v: DimVector) -> KClass:
    """a [Q(-1)] - b [O(-1)]: the O(-1) part sits in degree -1."""
    return KClass((-v.b, v.a, 0, 0))


def dimension_vector(k: KClass,
                     collection: Optional[ExceptionalCollection] = None
                     ) -> DimVector:
    """(chi(Q(-1), k), chi(H, k)) for the tilting object Q(-1) + H."""
    collection = collection or ExceptionalCollection()
    q, h = collection.tilting_classes()
    a, b = collection.chi(q, k), collection.chi(h, k)
    return DimVector(a, b)


def fineness_codimension() -> int:
    """Codimension of the rank-3 quadric locus in the (2, 2) moduli."""
    return moduli_dim(DimVector(2, 2)) - RANK_THREE_LOCUS_DIM


@dataclass(frozen=True)
class KroneckerRep:
    """Five maps W1 -> W0, each a dim W0 x dim W1 matrix."""

    maps: Tuple[RatMatrix, ...]

    def __post_init__(self):
        if len(self.maps) != ARROWS:
            raise RepresentationError(
                f"expected {ARROWS} maps, got {len(self.maps)}"
            )
        shapes = {(m.rows, m.cols) for m in self.maps}
        if len(shapes) != 1:
            raise RepresentationError(f"maps have mixed shapes {shapes}")

    @classmethod
    def from_lists(cls, maps: Sequence[Sequence[Sequence]]) -> "KroneckerRep":
        try:
            return cls(tuple(RatMatrix.from_rows(m) for m in maps))
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise RepresentationError(f"bad map entries: {e}")

    @property
    def dims(self) -> DimVector:
        m = self.maps[0]
        return DimVector(m.rows, m.cols)

    def to_lists(self) -> List[List[List[str]]]:
        return [[[str(x) for x in row] for row in m.to_rows()]
                for m in self.maps]


def load_representation(path: Union[str, Path]) -> KroneckerRep:
    """
    Read ``{"maps": [...]}`` with five matrices of "p/q" strings or ints.

    Raises:
        RepresentationError: The file is missing, not JSON, or malformed.
    """
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise RepresentationError(f"cannot read {path}: {e}")
    if not isinstance(data, dict) or "maps" not in data:
        raise RepresentationError(f"{path}: expected an object with 'maps'")
    return KroneckerRep.from_lists(data["maps"])


@dataclass(frozen=True)
class Witness:
    sub: DimVector
    certificate: str


@dataclass(frozen=True)
class StabilityVerdict:
    semistable: bool
    stable: bool
    witnesses: Tuple[Witness, ...] = ()


def _require_square_two(r: KroneckerRep):
    if r.dims != DimVector(2, 2):
        raise RepresentationError(
            f"stability is decided for dimension (2, 2), got {tuple(r.dims)}"
        )


def _kernel_witness(r: KroneckerRep) -> Optional[Witness]:
    """A (0, 1) subrepresentation: a common kernel vector."""
    if mat_rank(vstack(r.maps)) < 2:
        return Witness(DimVector(0, 1), "common kernel of all maps")
    return None


def _image_witness(r: KroneckerRep) -> Optional[Witness]:
    """A (1, 2) subrepresentation: all images inside one line."""
    if mat_rank(hstack(r.maps)) < 2:
        return Witness(DimVector(1, 2), "images span at most a line")
    return None


def pencil_forms(r: KroneckerRep) -> List[Tuple[Fraction, Fraction,
                                                Fraction]]:
    """
    q_ij(v) = det[A_i v | A_j v] as (v0^2, v0 v1, v1^2) coefficients.
    """
    forms = []
    for x, y in combinations(r.maps, 2):
        a1, b1, c1, d1 = x.entries
        a2, b2, c2, d2 = y.entries
        forms.append((
            a1 * c2 - c1 * a2,
            a1 * d2 + b1 * c2 - c1 * b2 - d1 * a2,
            b1 * d2 - d1 * b2,
        ))
    return forms


def _line_witness(r: KroneckerRep) -> Optional[Witness]:
    """A (1, 1) subrepresentation: some v whose images are collinear."""
    g = binary_forms_gcd(pencil_forms(r))
    if g is None:
        return Witness(DimVector(1, 1), "every vector has collinear images")
    if g.total_degree() > 0:
        return Witness(DimVector(1, 1), f"common root of {g.as_expr()}")
    return None


def stability(r: KroneckerRep) -> StabilityVerdict:
    """Theta-stability verdict with witnesses for dimension (2, 2)."""
    _require_square_two(r)
    destabilizing = [w for w in (_kernel_witness(r), _image_witness(r)) if w]
    semistable = not destabilizing
    witnesses = list(destabilizing)
    stable = False
    if semistable:
        line = _line_witness(r)
        stable = line is None
        if line:
            witnesses.append(line)
    logger.debug(f"stability: semistable={semistable} stable={stable}")
    return StabilityVerdict(semistable, stable, tuple(witnesses))


def is_semistable(r: KroneckerRep) -> bool:
    _require_square_two(r)
    return _kernel_witness(r) is None and _image_witness(r) is None


def is_stable(r: KroneckerRep) -> bool:
    return stability(r).stable


def det_quadric(r: KroneckerRep) -> RatMatrix:
    """Gram matrix of the quadratic form det(sum x_i A_i)."""
    _require_square_two(r)
    entries = [m.entries for m in r.maps]
    rows = []
    for ai, bi, ci, di in entries:
        rows.append([
            (ai * dj + aj * di - bi * cj - bj * ci) / 2
            for aj, bj, cj, dj in entries
        ])
    return RatMatrix.from_rows(rows)


def quadric_rank(r: KroneckerRep) -> int:
    return mat_rank(det_quadric(r))


# -- sampling ----------------------------------------------------------

def _random_matrix(rng: np.random.Generator) -> RatMatrix:
    values = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=(2, 2))
    return RatMatrix.from_rows(values.tolist())


def _invertible(rng: np.random.Generator) -> RatMatrix:
    while True:
        p = _random_matrix(rng)
        if p[0, 0] * p[1, 1] != p[0, 1] * p[1, 0]:
            return p


def _generic(rng: np.random.Generator) -> KroneckerRep:
    return KroneckerRep(tuple(_random_matrix(rng) for _ in range(ARROWS)))


def _shared_flag(rng: np.random.Generator) -> KroneckerRep:
    p = _invertible(rng)
    p_inv = inverse(p)
    maps = []
    for _ in range(ARROWS):
        u = _random_matrix(rng).to_rows()
        u[1][0] = 0
        maps.append(p @ RatMatrix.from_rows(u) @ p_inv)
    return KroneckerRep(tuple(maps))


def _common_kernel(rng: np.random.Generator) -> KroneckerRep:
    row = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=2)
    cols = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=(ARROWS, 2))
    return KroneckerRep.from_lists(
        [np.outer(c, row).tolist() for c in cols]
    )


def _common_image(rng: np.random.Generator) -> KroneckerRep:
    col = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=2)
    rows = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=(ARROWS, 2))
    return KroneckerRep.from_lists(
        [np.outer(col, r).tolist() for r in rows]
    )


_FAMILIES = (_generic, _shared_flag, _generic, _common_kernel, _generic,
             _common_image)


def random_representations(count: int, seed: int) -> List[KroneckerRep]:
    """
    Reproducible (2, 2) representations with entries in [-9, 9].

    Generic samples alternate with families that carry a (1, 1), (0, 1)
    or (1, 2) subrepresentation, so both verdicts occur.
    """
    rng = np.random.default_rng(seed)
    return [_FAMILIES[k % len(_FAMILIES)](rng) for k in range(count)]


# -- finite field oracle ---------------------------------------------

@dataclass(frozen=True)
class OracleVerdict:
    q: int
    semistable: bool
    stable: bool


def _reduce(r: KroneckerRep, q: int) -> Optional[np.ndarray]:
    values = []
    for m in r.maps:
        for x in m.entries:
            if x.denominator % q == 0:
                return None
            values.append(x.numerator * pow(x.denominator, -1, q) % q)
    return np.array(values, dtype=np.int64).reshape(ARROWS, 2, 2)


def projective_line(q: int) -> np.ndarray:
    """Representatives (1, t) and (0, 1) of the q + 1 points of P^1(F_q)."""
    points = [(1, t) for t in range(q)] + [(0, 1)]
    return np.array(points, dtype=np.int64)


def quadratic_nonresidue(q: int) -> int:
    """Smallest n with no square root mod the odd prime q."""
    return next(n for n in range(2, q) if pow(n, (q - 1) // 2, q) == q - 1)


def _ext_mul(x: np.ndarray, y: np.ndarray, n: int, q: int) -> np.ndarray:
    """Product in F_q[s]/(s^2 - n); the last axis holds (a, b) of a + b s."""
    a, b = x[..., 0], x[..., 1]
    c, d = y[..., 0], y[..., 1]
    return np.stack(((a * c + n * b * d) % q, (a * d + b * c) % q), axis=-1)


def extension_line(q: int) -> np.ndarray:
    """
    The q^2 + 1 points of P^1(F_{q^2}) with shape (q^2 + 1, 2, 2): point,
    coordinate, then (a, b) of a + b s.
    """
    t = np.stack(np.divmod(np.arange(q * q, dtype=np.int64), q), axis=-1)
    one = np.zeros_like(t)
    one[:, 0] = 1
    infinity = np.array([[[0, 0], [1, 0]]], dtype=np.int64)
    return np.concatenate((np.stack((one, t), axis=1), infinity))


def _on_line(lines: np.ndarray, vectors: np.ndarray, q: int) -> np.ndarray:
    """on[l, ...] is True where the vector lies on line l."""
    cross = (lines[:, 0, None] * vectors[None, ..., 1]
             - lines[:, 1, None] * vectors[None, ..., 0]) % q
    return cross == 0


def _collinear_point(maps: np.ndarray, q: int) -> bool:
    """
    Some v over F_{q^2} has det[A_i v | A_j v] = 0 for all i < j.

    Common roots of binary quadrics over F_q lie in F_{q^2}.
    """
    n = quadratic_nonresidue(q)
    points = extension_line(q)
    # images[p, k, r] = row r of A_k v_p, an element of F_{q^2}
    images = np.einsum("krj,pje->pkre", maps, points) % q
    i, j = np.triu_indices(ARROWS, 1)
    det = (_ext_mul(images[:, i, 0], images[:, j, 1], n, q)
           - _ext_mul(images[:, i, 1], images[:, j, 0], n, q)) % q
    return bool(np.any(np.all(det == 0, axis=(1, 2))))


def oracle_verdict(r: KroneckerRep, q: int) -> Optional[OracleVerdict]:
    """
    Decide (semi)stability mod an odd prime q by enumeration: kernel and
    image lines over F_q, collinear images over F_{q^2}.

    Returns:
        None when some denominator vanishes mod q.
    """
    _require_square_two(r)
    maps = _reduce(r, q)
    if maps is None:
        return None
    lines = projective_line(q)
    # images[l, i] = A_i applied to line l
    images = np.einsum("kij,lj->lki", maps, lines) % q

    common_kernel = bool(np.any(np.all(images == 0, axis=(1, 2))))
    columns = maps.transpose(0, 2, 1).reshape(-1, 2)
    image_in_line = bool(np.any(np.all(_on_line(lines, columns, q), axis=1)))
    semistable = not (common_kernel or image_in_line)
    line_sub = _collinear_point(maps, q)
    return OracleVerdict(q, semistable, semistable and not line_sub)
