"""
Complex 2x2 matrices, Minkowski space R^{1,3} and the SL(2,C) action.

Minkowski vectors (T, X, Y, Z) are identified with Hermitian matrices via

    (T, X, Y, Z) <-> 1/2 [[T + Z, X + iY], [X - iY, T - Z]]

so that Tr S = T and 4 det S = <x, x> with metric dT^2 - dX^2 - dY^2 - dZ^2.
A unimodular A acts on Hermitian S by S -> A S A*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from horospinors.config import config
from horospinors.errors import NotFutureLightlike, NotHermitian, NotUnimodular

CausalType = Literal["timelike", "lightlike", "spacelike"]


@dataclass(frozen=True)
class ComplexMatrix2:
    """Row-major complex 2x2 matrix [[a, b], [c, d]]"""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> ComplexMatrix2:
        return cls(1, 0, 0, 1)

    def to_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def adjoint(self) -> ComplexMatrix2:
        """Conjugate transpose A*"""
        return ComplexMatrix2(
            self.a.conjugate(), self.c.conjugate(), self.b.conjugate(), self.d.conjugate()
        )

    def inverse(self) -> ComplexMatrix2:
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("matrix is singular")
        return ComplexMatrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def apply(self, first: complex, second: complex) -> tuple[complex, complex]:
        """Multiply the column vector (first, second) on the left"""
        return (self.a * first + self.b * second, self.c * first + self.d * second)

    def is_unimodular(self, tol: float | None = None) -> bool:
        tol = config.tol if tol is None else tol
        return abs(self.det() - 1) <= tol

    def is_hermitian(self, tol: float | None = None) -> bool:
        tol = config.tol if tol is None else tol
        scale = max(1.0, abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        return (
            abs(complex(self.a).imag) <= tol * scale
            and abs(complex(self.d).imag) <= tol * scale
            and abs(self.b - complex(self.c).conjugate()) <= tol * scale
        )

    def __matmul__(self, other: ComplexMatrix2) -> ComplexMatrix2:
        return ComplexMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> ComplexMatrix2:
        return ComplexMatrix2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, scalar: complex) -> ComplexMatrix2:
        return ComplexMatrix2(self.a * scalar, self.b * scalar, self.c * scalar, self.d * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class MinkowskiVector:
    """Point (T, X, Y, Z) of R^{1,3}"""

    T: float
    X: float
    Y: float
    Z: float

    def to_array(self) -> np.ndarray:
        return np.array([self.T, self.X, self.Y, self.Z], dtype=float)

    def euclidean_norm(self) -> float:
        return float(np.linalg.norm(self.to_array()))

    def allclose(self, other: MinkowskiVector, tol: float | None = None) -> bool:
        """Coordinatewise comparison, relative to the larger of the two vectors"""
        tol = config.tol if tol is None else tol
        scale = max(1.0, self.euclidean_norm(), other.euclidean_norm())
        return bool(np.all(np.abs(self.to_array() - other.to_array()) <= tol * scale))

    def __add__(self, other: MinkowskiVector) -> MinkowskiVector:
        return MinkowskiVector(
            self.T + other.T, self.X + other.X, self.Y + other.Y, self.Z + other.Z
        )

    def __sub__(self, other: MinkowskiVector) -> MinkowskiVector:
        return MinkowskiVector(
            self.T - other.T, self.X - other.X, self.Y - other.Y, self.Z - other.Z
        )

    def __mul__(self, scalar: float) -> MinkowskiVector:
        return MinkowskiVector(self.T * scalar, self.X * scalar, self.Y * scalar, self.Z * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> MinkowskiVector:
        return MinkowskiVector(-self.T, -self.X, -self.Y, -self.Z)


# Base point of the hyperboloid and the light-cone point of the spinor (1, 0)
Q0 = MinkowskiVector(1.0, 0.0, 0.0, 0.0)
P0 = MinkowskiVector(1.0, 0.0, 0.0, 1.0)
DEL_Y = MinkowskiVector(0.0, 0.0, 1.0, 0.0)


def _components(S: ComplexMatrix2) -> MinkowskiVector:
    a = complex(S.a).real
    d = complex(S.d).real
    b = complex(S.b)
    return MinkowskiVector(a + d, 2.0 * b.real, 2.0 * b.imag, a - d)


def herm_to_minkowski(S: ComplexMatrix2, tol: float | None = None) -> MinkowskiVector:
    """
    Read off (T, X, Y, Z) from S = 1/2 [[T+Z, X+iY], [X-iY, T-Z]].

    Args:
        S: Hermitian matrix
        tol: Tolerance of the Hermitian predicate (default: config.linear_tol)

    Returns:
        The corresponding Minkowski vector

    Raises:
        NotHermitian: If S is not Hermitian within tol
    """
    tol = config.linear_tol if tol is None else tol
    if not S.is_hermitian(tol):
        raise NotHermitian(f"matrix is not Hermitian: {S}")
    return _components(S)


def minkowski_to_herm(x: MinkowskiVector) -> ComplexMatrix2:
    """Hermitian matrix 1/2 [[T+Z, X+iY], [X-iY, T-Z]] of x"""
    off = complex(x.X, x.Y) / 2
    return ComplexMatrix2(
        complex((x.T + x.Z) / 2), off, off.conjugate(), complex((x.T - x.Z) / 2)
    )


def lorentz_inner(x: MinkowskiVector, y: MinkowskiVector) -> float:
    return x.T * y.T - x.X * y.X - x.Y * y.Y - x.Z * y.Z


def causal_type(x: MinkowskiVector, tol: float | None = None) -> CausalType:
    """
    Classify x by the sign of <x, x>.

    The lightlike band is relative to the Euclidean size of x.
    """
    tol = config.tol if tol is None else tol
    norm = lorentz_inner(x, x)
    if abs(norm) <= tol * max(x.euclidean_norm() ** 2, np.finfo(float).tiny):
        return "lightlike"
    return "timelike" if norm > 0 else "spacelike"


def is_future_lightlike(x: MinkowskiVector, tol: float | None = None) -> bool:
    return x.T > 0 and causal_type(x, tol) == "lightlike"


def celestial_point(p: MinkowskiVector, tol: float | None = None) -> MinkowskiVector:
    """
    T = 1 representative of the future light-cone ray through p.

    Raises:
        NotFutureLightlike: If p is not on L+
    """
    if not is_future_lightlike(p, tol):
        raise NotFutureLightlike(f"not on the future light cone: {p}")
    return p * (1.0 / p.T)


def _require_unimodular(A: ComplexMatrix2, tol: float | None) -> None:
    if not A.is_unimodular(tol):
        raise NotUnimodular(f"det A = {A.det()} is not 1")


def sl2c_action_minkowski(
    A: ComplexMatrix2, x: MinkowskiVector, tol: float | None = None
) -> MinkowskiVector:
    """
    Act on x by A.S = A S A* in the Hermitian picture.

    Args:
        A: Unimodular matrix
        x: Minkowski vector
        tol: Unimodularity tolerance (default: config.tol)

    Returns:
        The image A.x

    Raises:
        NotUnimodular: If |det A - 1| > tol
    """
    _require_unimodular(A, tol)
    return _components(A @ minkowski_to_herm(x) @ A.adjoint())


_BASIS = (
    MinkowskiVector(1.0, 0.0, 0.0, 0.0),
    MinkowskiVector(0.0, 1.0, 0.0, 0.0),
    MinkowskiVector(0.0, 0.0, 1.0, 0.0),
    MinkowskiVector(0.0, 0.0, 0.0, 1.0),
)


def so13_matrix(A: ComplexMatrix2, tol: float | None = None) -> np.ndarray:
    """
    Real 4x4 matrix M of x -> A.x, so that M @ x.to_array() == A.x.

    M preserves the Lorentz form and M(-A) = M(A).

    Raises:
        NotUnimodular: If |det A - 1| > tol
    """
    _require_unimodular(A, tol)
    columns = [sl2c_action_minkowski(A, e, tol).to_array() for e in _BASIS]
    return np.column_stack(columns)
