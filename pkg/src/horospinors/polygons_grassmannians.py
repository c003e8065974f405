"""
Spinor tuples, decorated ideal polygons and Plucker coordinates.

A tuple of d spinors is a 2 x d matrix whose column minors are the Plucker
coordinates p_ij = {k_i, k_j}, the lambda lengths between the corresponding
horospheres. Real tuples with every p_ij > 0 (i < j) are totally positive and
describe decorated ideal d-gons in the upper half plane, whose boundary is
oriented in the negative real direction.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

import numpy as np

from horospinors.complex_minkowski import ComplexMatrix2
from horospinors.config import config
from horospinors.errors import (
    DegeneratePair,
    DuplicateCentre,
    MultipleInfinities,
    NonRealCentre,
    NotCyclicallyOrdered,
    NotTotallyPositive,
    RankDeficient,
    ZeroPlucker,
)
from horospinors.horospheres import BoundaryPointUHS, Finite, Infinity
from horospinors.spinor_flags import Spinor, bracket, require_nonzero
from horospinors.utils import logger

Pair = tuple[int, int]


class Field(str, Enum):
    """Ground field of the gauge group SL(2, F)"""

    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class SpinorTuple:
    """Ordered nonzero spinors k_0..k_{d-1}, the columns of a 2 x d matrix"""

    spinors: tuple[Spinor, ...]

    def __post_init__(self):
        object.__setattr__(self, "spinors", tuple(self.spinors))
        if len(self.spinors) < 2:
            raise ValueError(f"a spinor tuple needs at least 2 spinors, got {len(self.spinors)}")
        for index, k in enumerate(self.spinors):
            require_nonzero(k, index)

    def __len__(self) -> int:
        return len(self.spinors)

    def __iter__(self) -> Iterator[Spinor]:
        return iter(self.spinors)

    def __getitem__(self, index: int) -> Spinor:
        return self.spinors[index]

    @property
    def d(self) -> int:
        return len(self.spinors)

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [[k.xi for k in self.spinors], [k.eta for k in self.spinors]], dtype=complex
        )

    def has_rank_two(self) -> bool:
        """True if some pairwise bracket is nonzero at the degeneracy threshold"""
        return any(
            abs(bracket(a, b)) > config.degeneracy_tol * a.norm() * b.norm()
            for a, b in combinations(self.spinors, 2)
        )

    def transformed(self, A: ComplexMatrix2) -> SpinorTuple:
        return SpinorTuple(tuple(k.transformed(A) for k in self.spinors))

    def __neg__(self) -> SpinorTuple:
        return SpinorTuple(tuple(-k for k in self.spinors))


@dataclass(frozen=True)
class PluckerVector:
    """
    Plucker coordinates p_ij, i < j, of a 2 x d matrix.

    Lookup is antisymmetric: p[j, i] = -p[i, j] and p[i, i] = 0.
    """

    d: int
    coordinates: dict[Pair, complex] = field(default_factory=dict)

    def __getitem__(self, pair: Pair) -> complex:
        i, j = pair
        if i == j:
            return 0j
        if i > j:
            return -self.coordinates[(j, i)]
        return self.coordinates[(i, j)]

    def pairs(self) -> list[Pair]:
        return sorted(self.coordinates)

    def scale(self) -> float:
        return max((abs(value) for value in self.coordinates.values()), default=0.0)

    def relation_residuals(self) -> dict[tuple[int, int, int, int], complex]:
        """p_ij p_kl + p_il p_jk - p_ik p_jl for every i < j < k < l"""
        return {
            (i, j, k, l): (
                self[i, j] * self[k, l] + self[i, l] * self[j, k] - self[i, k] * self[j, l]
            )
            for i, j, k, l in combinations(range(self.d), 4)
        }

    def zero_pairs(self, tol: float | None = None) -> list[Pair]:
        """Pairs whose coordinate vanishes relative to the largest coordinate"""
        tol = config.degeneracy_tol if tol is None else tol
        threshold = tol * max(self.scale(), np.finfo(float).tiny)
        return [pair for pair in self.pairs() if abs(self.coordinates[pair]) <= threshold]

    def is_positive(self, tol: float | None = None) -> bool:
        tol = config.tol if tol is None else tol
        return all(
            abs(value.imag) <= tol and value.real > tol for value in self.coordinates.values()
        )

    def horocycle_distances(self, tol: float | None = None) -> dict[Pair, float]:
        """
        Signed distances 2 log p_ij between horocycles of a totally positive tuple.

        Raises:
            NotTotallyPositive: If some coordinate is not a positive real
        """
        if not self.is_positive(tol):
            raise NotTotallyPositive("horocycle distances need positive coordinates")
        return {pair: 2.0 * math.log(value.real) for pair, value in self.coordinates.items()}

    def projective(self) -> PluckerVector:
        """
        Point of Gr(2, d) as a unit vector whose first nonzero coordinate is a positive real.

        Raises:
            RankDeficient: If every coordinate vanishes
        """
        norm = math.sqrt(sum(abs(value) ** 2 for value in self.coordinates.values()))
        if norm == 0:
            raise RankDeficient("all Plucker coordinates vanish")
        lead = next(value for value in (self.coordinates[p] for p in self.pairs()) if value != 0)
        unit = cmath.exp(-1j * cmath.phase(lead)) / norm
        scaled = {pair: value * unit for pair, value in self.coordinates.items()}
        return PluckerVector(self.d, scaled)

    def to_matrix(self) -> np.ndarray:
        """Antisymmetric d x d matrix of coordinates"""
        matrix = np.zeros((self.d, self.d), dtype=complex)
        for (i, j), value in self.coordinates.items():
            matrix[i, j] = value
            matrix[j, i] = -value
        return matrix


def is_totally_positive(t: SpinorTuple, tol: float | None = None) -> bool:
    """Real spinors with {k_i, k_j} real and > tol for all i < j"""
    tol = config.tol if tol is None else tol
    if not all(k.is_real(tol) for k in t):
        return False
    for a, b in combinations(t.spinors, 2):
        value = bracket(a, b)
        if abs(value.imag) > tol or value.real <= tol:
            return False
    return True


def _real_centres(centres: Sequence[BoundaryPointUHS], tol: float) -> list[float | None]:
    values: list[float | None] = []
    for index, centre in enumerate(centres):
        match centre:
            case Infinity():
                values.append(None)
            case Finite(z=z):
                z = complex(z)
                if abs(z.imag) > tol * max(1.0, abs(z)):
                    raise NonRealCentre(f"centre {index} = {z} is not real")
                values.append(z.real)
            case _:
                raise TypeError(f"not a boundary point: {centre!r}")
    if values.count(None) > 1:
        raise MultipleInfinities(f"{values.count(None)} centres are at infinity")

    finite = sorted(v for v in values if v is not None)
    for lower, upper in zip(finite, finite[1:]):
        if upper - lower <= tol * max(1.0, abs(lower), abs(upper)):
            raise DuplicateCentre(f"centre {upper} appears twice")
    return values


def cyclic_order_ok(centres: Sequence[BoundaryPointUHS], tol: float | None = None) -> bool:
    """
    Whether real-or-infinite centres run around the boundary in the negative direction.

    Some rotation of the list must be strictly decreasing, possibly headed by infinity.

    Raises:
        NonRealCentre: If a finite centre has nonzero imaginary part
        MultipleInfinities: If more than one centre is infinity
        DuplicateCentre: If two centres coincide
    """
    tol = config.tol if tol is None else tol
    values = _real_centres(centres, tol)
    for start in range(len(values)):
        rotation = values[start:] + values[:start]
        if rotation and rotation[0] is None:
            rotation = rotation[1:]
        if None in rotation:
            continue
        if all(a > b for a, b in zip(rotation, rotation[1:])):
            return True
    return False


def plucker(t: SpinorTuple) -> PluckerVector:
    """
    Column minors p_ij = {k_i, k_j}.

    Raises:
        RankDeficient: If every minor vanishes
    """
    if not t.has_rank_two():
        raise RankDeficient("spinor tuple has rank below two")
    return PluckerVector(
        t.d, {(i, j): bracket(t[i], t[j]) for i, j in combinations(range(t.d), 2)}
    )


def normalizing_matrix(k1: Spinor, k2: Spinor) -> ComplexMatrix2:
    """
    Unimodular A with A.k1 = (1, 0) and A.k2 = (0, D), D = {k1, k2}.

    A is the inverse of the matrix with columns k1 and k2/D.

    Raises:
        DegeneratePair: If k1 and k2 are proportional
    """
    require_nonzero(k1, 0)
    require_nonzero(k2, 1)
    D = bracket(k1, k2)
    if abs(D) <= config.degeneracy_tol * k1.norm() * k2.norm():
        raise DegeneratePair("first two spinors are proportional")
    return ComplexMatrix2(k2.eta / D, -k2.xi / D, -k1.eta, k1.xi)


def gauge_normalize(t: SpinorTuple, field: Field = Field.COMPLEX) -> SpinorTuple:
    """
    Canonical representative of the SL(2, F) orbit of t.

    Args:
        t: Spinor tuple
        field: Field.REAL for totally positive tuples, Field.COMPLEX otherwise

    Returns:
        A.t with k_0 -> (1, 0) and k_1 -> (0, {k_0, k_1})

    Raises:
        DegeneratePair: If the first two spinors are proportional
        NotTotallyPositive: If field is REAL and t is not totally positive
    """
    if field is Field.REAL and not is_totally_positive(t):
        raise NotTotallyPositive("real gauge normalisation needs a totally positive tuple")
    A = normalizing_matrix(t[0], t[1])
    D = bracket(t[0], t[1])
    rest = [k.transformed(A) for k in t.spinors[2:]]
    if field is Field.REAL:
        D = complex(D.real)
        rest = [Spinor(complex(k.xi).real + 0j, complex(k.eta).real + 0j) for k in rest]
    logger.debug(f"gauge normalised {t.d} spinors over {field.value}, D = {D}")
    return SpinorTuple((Spinor(1 + 0j, 0j), Spinor(0j, D), *rest))


def teichmuller_coordinates(t: SpinorTuple, field: Field = Field.COMPLEX) -> PluckerVector:
    """
    Lambda-length coordinates of the decorated ideal polygon of t.

    Raises:
        NotTotallyPositive: If field is REAL and t is not totally positive
        ZeroPlucker: If field is COMPLEX and some coordinate vanishes
    """
    if field is Field.REAL:
        if not is_totally_positive(t):
            raise NotTotallyPositive("spinor tuple is not totally positive")
        return plucker(t)

    coordinates = plucker(t)
    zeros = coordinates.zero_pairs()
    if zeros:
        i, j = zeros[0]
        raise ZeroPlucker(f"Plucker coordinate ({i},{j}) vanishes")
    return coordinates


def is_planar_real(k: Spinor, tol: float | None = None) -> bool:
    """
    Whether k is a planar spin decoration on a horocycle, i.e. a real spinor.

    Raises:
        ZeroSpinor: If k = 0
    """
    require_nonzero(k)
    return k.is_real(tol)


def spinors_from_decorated_polygon(
    centres: Sequence[BoundaryPointUHS], sizes: Sequence[float]
) -> SpinorTuple:
    """
    Totally positive tuple whose horocycles have the given centres and sizes.

    Each horocycle gets the real spinor with positive eta (or xi at infinity); the
    signs are then fixed by requiring {k_0, k_j} > 0. The result is unique up to
    overall sign.

    Args:
        centres: Distinct real-or-infinite centres in cyclic order
        sizes: Diameters, or the height for the centre at infinity

    Raises:
        NotCyclicallyOrdered: If the centres are not cyclically ordered
    """
    if len(centres) != len(sizes):
        raise ValueError(f"{len(centres)} centres but {len(sizes)} sizes")
    if any(not size > 0 for size in sizes):
        raise ValueError("horocycle sizes must be positive")
    if not cyclic_order_ok(centres):
        raise NotCyclicallyOrdered("centres are not in negative cyclic order")

    spinors = []
    for centre, size in zip(centres, sizes):
        if isinstance(centre, Infinity):
            spinors.append(Spinor(complex(math.sqrt(size)), 0j))
        else:
            eta = 1.0 / math.sqrt(size)
            spinors.append(Spinor(complex(centre.z.real * eta), complex(eta)))

    first = spinors[0]
    signed = [first] + [k if bracket(first, k).real > 0 else -k for k in spinors[1:]]
    return SpinorTuple(tuple(signed))


def ford_spinors(q_max: int) -> list[Spinor]:
    """
    Integer spinors (p, q) with gcd 1, 0 < q <= q_max and 0 <= p/q <= 1, in Farey order.

    Their horocycles are the Ford circles at p/q with diameter 1/q^2.
    """
    if q_max < 1:
        raise ValueError(f"q_max must be a positive integer, got {q_max}")
    fractions = [
        Fraction(p, q) for q in range(1, q_max + 1) for p in range(q + 1) if math.gcd(p, q) == 1
    ]
    return [Spinor(complex(f.numerator), complex(f.denominator)) for f in sorted(fractions)]
