"""
Spinors, the bracket, the map phi1 onto the future light cone and null flags.

A spinor k = (xi, eta) is sent to phi1(k) = k k* on L+. Its flag adds the
relatively oriented plane spanned by phi1(k) and the derivative of phi1 in the
direction Z(k) = J conj(k), J = [[0, i], [-i, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from horospinors.complex_minkowski import (
    ComplexMatrix2,
    MinkowskiVector,
    causal_type,
    lorentz_inner,
    sl2c_action_minkowski,
)
from horospinors.config import config
from horospinors.errors import InvalidFlag, ZeroSpinor

J = ComplexMatrix2(0, 1j, -1j, 0)


@dataclass(frozen=True)
class Spinor:
    """A pair (xi, eta) of complex numbers"""

    xi: complex
    eta: complex

    def norm_squared(self) -> float:
        return abs(self.xi) ** 2 + abs(self.eta) ** 2

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def is_nonzero(self) -> bool:
        return self.norm_squared() > 0

    def is_real(self, tol: float | None = None) -> bool:
        tol = config.tol if tol is None else tol
        scale = max(1.0, self.norm())
        return (
            abs(complex(self.xi).imag) <= tol * scale and abs(complex(self.eta).imag) <= tol * scale
        )

    def conjugate(self) -> Spinor:
        return Spinor(complex(self.xi).conjugate(), complex(self.eta).conjugate())

    def transformed(self, A: ComplexMatrix2) -> Spinor:
        """Left multiplication A.k"""
        return Spinor(*A.apply(self.xi, self.eta))

    def to_array(self) -> np.ndarray:
        return np.array([self.xi, self.eta], dtype=complex)

    def __mul__(self, scalar: complex) -> Spinor:
        return Spinor(self.xi * scalar, self.eta * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> Spinor:
        return Spinor(-self.xi, -self.eta)

    def __add__(self, other: Spinor) -> Spinor:
        return Spinor(self.xi + other.xi, self.eta + other.eta)


@dataclass(frozen=True)
class Flag:
    """Pointed oriented null flag [[p, v]]: basepoint p on L+, plane span(p, v) oriented by v"""

    p: MinkowskiVector
    v: MinkowskiVector


def require_nonzero(k: Spinor, index: int | None = None) -> None:
    if not k.is_nonzero():
        raise ZeroSpinor(index=index)


def bracket(k1: Spinor, k2: Spinor) -> complex:
    """{k1, k2} = xi1 eta2 - eta1 xi2 = det(k1 | k2)"""
    return complex(k1.xi * k2.eta - k1.eta * k2.xi)


def phi1(k: Spinor) -> MinkowskiVector:
    """Light-cone point k k*, in coordinates"""
    xi, eta = complex(k.xi), complex(k.eta)
    a, b, c, d = xi.real, xi.imag, eta.real, eta.imag
    return MinkowskiVector(
        a * a + b * b + c * c + d * d,
        2.0 * (a * c + b * d),
        2.0 * (b * c - a * d),
        a * a + b * b - c * c - d * d,
    )


def zdir(k: Spinor) -> Spinor:
    """Z(xi, eta) = (i conj(eta), -i conj(xi))"""
    return k.conjugate().transformed(J)


def dphi1(k: Spinor, nu: Spinor) -> MinkowskiVector:
    """
    Derivative of phi1 at k in the real direction nu: k nu* + nu k*.

    Args:
        k: Base spinor
        nu: Tangent direction

    Returns:
        The derivative as a Minkowski vector
    """
    xi, eta = complex(k.xi), complex(k.eta)
    n1, n2 = complex(nu.xi), complex(nu.eta)
    m11 = 2.0 * (xi * n1.conjugate()).real
    m22 = 2.0 * (eta * n2.conjugate()).real
    m12 = xi * n2.conjugate() + n1 * eta.conjugate()
    return MinkowskiVector(m11 + m22, 2.0 * m12.real, 2.0 * m12.imag, m11 - m22)


def flag_direction(k: Spinor) -> MinkowskiVector:
    """
    Closed-form flag-plane direction (0, 2(cd-ab), a^2-b^2+c^2-d^2, 2(ad+bc)).

    This is half of dphi1(k, zdir(k)); both span the same oriented plane with phi1(k).
    """
    xi, eta = complex(k.xi), complex(k.eta)
    a, b, c, d = xi.real, xi.imag, eta.real, eta.imag
    return MinkowskiVector(
        0.0,
        2.0 * (c * d - a * b),
        a * a - b * b + c * c - d * d,
        2.0 * (a * d + b * c),
    )


def make_flag(k: Spinor) -> Flag:
    """
    Flag Phi1(k) = [[phi1(k), D_k phi1(Z k)]].

    Raises:
        ZeroSpinor: If k = 0
    """
    require_nonzero(k)
    return Flag(phi1(k), flag_direction(k))


def validate_flag(f: Flag, tol: float | None = None) -> None:
    """
    Check the invariants of a flag representative.

    Raises:
        InvalidFlag: If p is not on L+, v is not tangent to L+ at p, or p, v are dependent
    """
    tol = config.tol if tol is None else tol
    if f.p.T <= 0 or causal_type(f.p, tol) != "lightlike":
        raise InvalidFlag(f"flag basepoint is not on the future light cone: {f.p}")
    scale = max(f.p.euclidean_norm() * f.v.euclidean_norm(), np.finfo(float).tiny)
    if abs(lorentz_inner(f.p, f.v)) > tol * scale:
        raise InvalidFlag(f"flag direction is not tangent to the light cone: {f.v}")
    singular = np.linalg.svd(np.column_stack([f.p.to_array(), f.v.to_array()]), compute_uv=False)
    if singular[-1] <= config.kernel_tol * singular[0]:
        raise InvalidFlag("flag basepoint and direction are linearly dependent")


def flags_equal(f1: Flag, f2: Flag, tol: float | None = None) -> bool:
    """
    Equality of flags [[p1, v1]] and [[p2, v2]].

    They agree iff p1 = p2 and a p + b v1 + c v2 = 0 has a solution with b c < 0.

    Raises:
        InvalidFlag: If either representative is invalid
    """
    validate_flag(f1, tol)
    validate_flag(f2, tol)
    if not f1.p.allclose(f2.p, tol):
        return False

    system = np.column_stack([f1.p.to_array(), f1.v.to_array(), f2.v.to_array()])
    _, singular, vh = np.linalg.svd(system)
    if singular[-1] > config.kernel_tol * singular[0]:
        return False
    _, b, c = vh[-1]
    return bool(b * c < 0)


def flag_action(A: ComplexMatrix2, f: Flag, tol: float | None = None) -> Flag:
    """
    A.[[p, v]] = [[A.p, A.v]].

    Raises:
        NotUnimodular: If det A is not 1
        InvalidFlag: If f is invalid
    """
    validate_flag(f, tol)
    return Flag(sl2c_action_minkowski(A, f.p, tol), sl2c_action_minkowski(A, f.v, tol))
