"""
Horospheres in the hyperboloid and upper half space models.

A point p of the future light cone defines the horosphere <x, p> = 1 on the
hyperboloid. Through the spinor correspondence, k = (xi, eta) gives a horosphere
in upper half space centred at xi/eta with Euclidean diameter |eta|^-2 and
north-pole decoration i/eta^2, or, when eta = 0, a horizontal plane at height
|xi|^2 decorated by i xi^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from horospinors.complex_minkowski import (
    DEL_Y,
    Q0,
    ComplexMatrix2,
    MinkowskiVector,
    is_future_lightlike,
    lorentz_inner,
    sl2c_action_minkowski,
)
from horospinors.config import config
from horospinors.errors import (
    DegenerateInput,
    NotFutureLightlike,
    NotUnitVector,
)
from horospinors.spinor_flags import Spinor, require_nonzero


@dataclass(frozen=True)
class HorosphereHyp:
    """Horosphere {x : <x, x> = 1, T > 0, <x, p> = 1} of a point p on L+"""

    p: MinkowskiVector

    def contains(self, x: MinkowskiVector, tol: float | None = None) -> bool:
        tol = config.tol if tol is None else tol
        scale = max(1.0, x.euclidean_norm() ** 2)
        return (
            x.T > 0
            and abs(lorentz_inner(x, x) - 1.0) <= tol * scale
            and abs(lorentz_inner(x, self.p) - 1.0) <= tol * scale * max(1.0, self.p.T)
        )


@dataclass(frozen=True)
class Finite:
    """Finite boundary point z of upper half space"""

    z: complex


@dataclass(frozen=True)
class Infinity:
    """The boundary point at infinity"""


INFINITY = Infinity()

BoundaryPointUHS = Finite | Infinity


@dataclass(frozen=True)
class DecoratedHorosphereUHS:
    """
    Decorated horosphere in upper half space.

    size is the height of the plane when the centre is at infinity and the
    Euclidean diameter otherwise. direction is the unit complex number specifying
    the decoration (at the north pole for spheres).
    """

    centre: BoundaryPointUHS
    size: float
    direction: complex

    def __post_init__(self):
        if not self.size > 0:
            raise ValueError(f"horosphere size must be positive, got {self.size}")
        if self.direction == 0:
            raise ValueError("decoration direction must be nonzero")
        object.__setattr__(self, "direction", complex(self.direction) / abs(self.direction))


@dataclass(frozen=True)
class TangentFrameHyp:
    """Tangent vector at a point of the hyperboloid"""

    base: MinkowskiVector
    vector: MinkowskiVector


def phi2(p: MinkowskiVector, tol: float | None = None) -> HorosphereHyp:
    """
    Penner's horosphere <x, p> = 1.

    Raises:
        NotFutureLightlike: If p is not on L+
    """
    if not is_future_lightlike(p, tol):
        raise NotFutureLightlike(f"not on the future light cone: {p}")
    return HorosphereHyp(p)


def eta_is_zero(k: Spinor) -> bool:
    return abs(k.eta) <= config.infinity_tol * abs(k.xi)


def centre_uhs(k: Spinor) -> BoundaryPointUHS:
    """
    Centre xi/eta of the horosphere of k, or infinity when eta vanishes.

    Raises:
        ZeroSpinor: If k = 0
    """
    require_nonzero(k)
    if eta_is_zero(k):
        return INFINITY
    return Finite(complex(k.xi) / complex(k.eta))


def hyperboloid_to_disc(x: MinkowskiVector) -> np.ndarray:
    """
    Map (T, X, Y, Z) -> (X, Y, Z) / (1 + T).

    Raises:
        DegenerateInput: If T <= -1
    """
    if x.T <= -1:
        raise DegenerateInput(f"T = {x.T} is outside the domain T > -1")
    return np.array([x.X, x.Y, x.Z], dtype=float) / (1.0 + x.T)


def light_cone_to_disc_boundary(p: MinkowskiVector, tol: float | None = None) -> np.ndarray:
    """
    Point of the boundary sphere of the disc model for the ray through p.

    The T = 1 representative of the ray has spatial part on the unit sphere.

    Raises:
        NotFutureLightlike: If p is not on L+
    """
    if not is_future_lightlike(p, tol):
        raise NotFutureLightlike(f"not on the future light cone: {p}")
    return np.array([p.X, p.Y, p.Z], dtype=float) / p.T


def disc_boundary_to_uhs(v, tol: float | None = None) -> BoundaryPointUHS:
    """
    Map a point (x, y, z) of the unit sphere to (x + iy)/(1 - z) in C or infinity.

    Raises:
        NotUnitVector: If |v| differs from 1 by more than tol
    """
    tol = config.tol if tol is None else tol
    x, y, z = (float(c) for c in v)
    if abs(math.sqrt(x * x + y * y + z * z) - 1.0) > tol:
        raise NotUnitVector(f"not on the unit sphere: {(x, y, z)}")
    if z > 0.0:
        # 1 - z = (x^2 + y^2) / (1 + z) on the sphere, without cancellation near the pole
        r2 = x * x + y * y
        if r2 == 0.0:
            return INFINITY
        w = complex(x, y) * (1.0 + z) / r2
    else:
        w = complex(x, y) / (1.0 - z)
    # Same cut-off as centre_uhs: |w| >= 1 / infinity_tol
    if abs(w) * config.infinity_tol >= 1.0:
        return INFINITY
    return Finite(w)


def decorated_horosphere_uhs(k: Spinor) -> DecoratedHorosphereUHS:
    """
    Upper half space description of the decorated horosphere of k.

    Args:
        k: Nonzero spinor

    Returns:
        (xi/eta, |eta|^-2, i/eta^2) when eta != 0, else (infinity, |xi|^2, i xi^2)

    Raises:
        ZeroSpinor: If k = 0
    """
    require_nonzero(k)
    xi, eta = complex(k.xi), complex(k.eta)
    if eta_is_zero(k):
        return DecoratedHorosphereUHS(INFINITY, abs(xi) ** 2, 1j * xi * xi)
    return DecoratedHorosphereUHS(Finite(xi / eta), abs(eta) ** -2, 1j / (eta * eta))


def spinor_from_decorated_horosphere(h: DecoratedHorosphereUHS) -> Spinor:
    """
    One of the two spinors +-k whose decorated horosphere is h.

    The returned spinor has eta (or xi, at infinity) with argument in (-pi/2, pi/2].
    """
    if isinstance(h.centre, Infinity):
        # i xi^2 is a positive multiple of direction
        xi = math.sqrt(h.size) * cmath.exp(0.5j * cmath.phase(h.direction / 1j))
        return Spinor(_principal_sign(xi), 0j)
    # i / eta^2 is a positive multiple of direction
    eta = cmath.exp(-0.5j * cmath.phase(h.direction / 1j)) / math.sqrt(h.size)
    eta = _principal_sign(eta)
    return Spinor(h.centre.z * eta, eta)


def _principal_sign(w: complex) -> complex:
    angle = cmath.phase(w)
    if angle <= -math.pi / 2 or angle > math.pi / 2:
        return -w
    return w


def parabolic_matrix(c: complex) -> ComplexMatrix2:
    """A_c = [[1, c], [0, 1]]"""
    return ComplexMatrix2(1, c, 0, 1)


def mobius(A: ComplexMatrix2, point: BoundaryPointUHS) -> BoundaryPointUHS:
    """Action z -> (alpha z + beta)/(gamma z + delta) on C and infinity"""
    match point:
        case Infinity():
            if A.c == 0:
                return INFINITY
            return Finite(complex(A.a) / complex(A.c))
        case Finite(z=z):
            denominator = A.c * z + A.d
            if denominator == 0:
                return INFINITY
            return Finite(complex(A.a * z + A.b) / complex(denominator))
    raise TypeError(f"not a boundary point: {point!r}")


def matrix_to_spinor(k: Spinor) -> ComplexMatrix2:
    """
    Unimodular A with A.(1, 0) = k.

    Built from the generators (1,0) -> (0,1) by [[0,-1],[1,0]], (1,0) -> (xi,0) by
    diag(xi, 1/xi) and (0,1) -> (xi,eta) by [[1/eta, xi],[0, eta]].

    Raises:
        ZeroSpinor: If k = 0
    """
    require_nonzero(k)
    xi, eta = complex(k.xi), complex(k.eta)
    if eta_is_zero(k):
        return ComplexMatrix2(xi, 0, 0, 1 / xi)
    rotation = ComplexMatrix2(0, -1, 1, 0)
    return ComplexMatrix2(1 / eta, xi, 0, eta) @ rotation


def line_field_direction(k: Spinor, c: complex) -> TangentFrameHyp:
    """
    Decoration of the horosphere of k at the point parametrised by c.

    For k = (1, 0) the point is q_c = A_c.q0 and the line field there is directed by
    (Im c) p0 + d/dY. Other spinors are reached by transporting with matrix_to_spinor(k).

    Raises:
        ZeroSpinor: If k = 0
    """
    A_c = parabolic_matrix(c)
    base = sl2c_action_minkowski(A_c, Q0)
    vector = sl2c_action_minkowski(A_c, DEL_Y)
    A = matrix_to_spinor(k)
    return TangentFrameHyp(sl2c_action_minkowski(A, base), sl2c_action_minkowski(A, vector))

