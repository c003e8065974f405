"""
Complex lambda lengths between spin-decorated horospheres.

The lambda length from the horosphere of k1 to that of k2 is the bracket
{k1, k2} = exp(d/2), d = rho + i theta the complex distance along the common
perpendicular. Four spinors satisfy the Ptolemy equation

    l01 l23 + l03 l12 = l02 l13

and their lambda lengths determine the shape parameters of the ideal tetrahedron.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from scipy.integrate import quad

from horospinors.config import config
from horospinors.errors import CommonCentre, DegenerateTetrahedron
from horospinors.horospheres import DecoratedHorosphereUHS, Finite, Infinity
from horospinors.spinor_flags import Spinor, bracket, require_nonzero
from horospinors.utils import logger

TWO_PI = 2.0 * math.pi

OracleMethod = Literal["closed", "quadrature"]


@dataclass(frozen=True)
class ComplexDistance:
    """d = rho + i theta with theta in [0, 4 pi)"""

    rho: float
    theta: float

    @property
    def value(self) -> complex:
        return complex(self.rho, self.theta)

    def lambda_length(self) -> complex:
        return cmath.exp(self.value / 2)


@dataclass(frozen=True)
class ShapeTriple:
    """Shape parameters (z, z', z'') of an ideal tetrahedron"""

    z: complex
    zp: complex
    zpp: complex

    def is_consistent(self, tol: float | None = None) -> bool:
        """Check z' = 1/(1-z), z'' = (z-1)/z and z + 1/z' = 1"""
        tol = config.tol if tol is None else tol
        scale = max(1.0, abs(self.z), abs(self.zp), abs(self.zpp))
        return (
            abs(self.zp * (1 - self.z) - 1) <= tol * scale
            and abs(self.zpp * self.z - (self.z - 1)) <= tol * scale
            and abs(self.z + 1 / self.zp - 1) <= tol * scale
        )

    def rotated(self) -> ShapeTriple:
        """Cyclic permutation (z, z', z'') -> (z', z'', z)"""
        return ShapeTriple(self.zp, self.zpp, self.z)


def _is_degenerate(k1: Spinor, k2: Spinor, value: complex) -> bool:
    return abs(value) <= config.degeneracy_tol * k1.norm() * k2.norm()


def lambda_length(k1: Spinor, k2: Spinor) -> complex:
    """
    Complex lambda length {k1, k2} between two spin-decorated horospheres.

    Raises:
        ZeroSpinor: If either spinor is zero
    """
    require_nonzero(k1, 0)
    require_nonzero(k2, 1)
    return bracket(k1, k2)


def complex_distance(k1: Spinor, k2: Spinor) -> ComplexDistance:
    """
    Complex distance d with exp(d/2) = {k1, k2}.

    rho = 2 log|D| and theta = 2 Arg D with Arg D in [0, 2 pi).

    Raises:
        ZeroSpinor: If either spinor is zero
        CommonCentre: If the bracket vanishes
    """
    value = lambda_length(k1, k2)
    if _is_degenerate(k1, k2, value):
        raise CommonCentre("horospheres share a centre; lambda length is zero")
    argument = cmath.phase(value) % TWO_PI
    if argument >= TWO_PI:
        # a tiny negative phase rounds up to 2 pi
        argument = 0.0
    return ComplexDistance(2.0 * math.log(abs(value)), 2.0 * argument)


def _horosphere_distance_closed(h1: DecoratedHorosphereUHS, h2: DecoratedHorosphereUHS) -> float:
    match (h1.centre, h2.centre):
        case (Finite(z=z1), Finite(z=z2)):
            return 2.0 * math.log(abs(z1 - z2) / math.sqrt(h1.size * h2.size))
        case (Infinity(), Finite()):
            return math.log(h1.size / h2.size)
        case (Finite(), Infinity()):
            return math.log(h2.size / h1.size)
    raise CommonCentre("both horospheres are centred at infinity")


def _inverse_sine(angle: float) -> float:
    return 1.0 / math.sin(angle)


def _inverse_height(height: float) -> float:
    return 1.0 / height


def _horosphere_distance_quadrature(
    h1: DecoratedHorosphereUHS, h2: DecoratedHorosphereUHS
) -> float:
    match (h1.centre, h2.centre):
        case (Finite(z=z1), Finite(z=z2)):
            # Common perpendicular is the semicircle over [z1, z2] of radius R; at angle phi
            # from z2 the arc element is ds = d(phi)/sin(phi).
            radius = abs(z1 - z2) / 2.0
            leaves_h1 = 2.0 * math.atan(2.0 * radius / h1.size)
            reaches_h2 = 2.0 * math.atan(h2.size / (2.0 * radius))
            value, _ = quad(_inverse_sine, reaches_h2, leaves_h1, epsabs=0.0, epsrel=1e-12)
            return value
        case (Infinity(), Finite()):
            value, _ = quad(_inverse_height, h2.size, h1.size, epsabs=0.0, epsrel=1e-12)
            return value
        case (Finite(), Infinity()):
            value, _ = quad(_inverse_height, h1.size, h2.size, epsabs=0.0, epsrel=1e-12)
            return value
    raise CommonCentre("both horospheres are centred at infinity")


def geometric_lambda_modulus(
    h1: DecoratedHorosphereUHS,
    h2: DecoratedHorosphereUHS,
    method: OracleMethod = "closed",
    tol: float | None = None,
) -> float:
    """
    |lambda| = exp(rho/2) from the hyperbolic geometry of two horospheres.

    rho is the signed length of the common perpendicular between the horospheres,
    negative when the horoballs overlap. The bracket is not used.

    Args:
        h1: First decorated horosphere
        h2: Second decorated horosphere
        method: "closed" for the closed form, "quadrature" to integrate the metric
        tol: Tolerance for detecting a common finite centre

    Returns:
        exp(rho / 2)

    Raises:
        CommonCentre: If the horospheres share a centre
    """
    tol = config.tol if tol is None else tol
    if isinstance(h1.centre, Finite) and isinstance(h2.centre, Finite):
        separation = abs(h1.centre.z - h2.centre.z)
        if separation <= tol * max(1.0, abs(h1.centre.z), abs(h2.centre.z)):
            raise CommonCentre("horospheres share a finite centre")

    if method == "closed":
        rho = _horosphere_distance_closed(h1, h2)
    elif method == "quadrature":
        rho = _horosphere_distance_quadrature(h1, h2)
    else:
        raise ValueError(f"unknown oracle method: {method}")
    return math.exp(rho / 2.0)


def decoration_angle(h1: DecoratedHorosphereUHS, h2: DecoratedHorosphereUHS) -> float:
    """
    Rotation angle in [0, 2 pi) between decorations in standard position.

    h1 must be centred at infinity and h2 at 0, so the common perpendicular is the
    vertical axis and both decorations are horizontal.

    Raises:
        ValueError: If the horospheres are not in standard position
    """
    if not isinstance(h1.centre, Infinity) or not isinstance(h2.centre, Finite):
        raise ValueError("decoration_angle expects horospheres centred at infinity and 0")
    if abs(h2.centre.z) > config.tol * max(1.0, h2.size):
        raise ValueError("second horosphere must be centred at 0")
    return (cmath.phase(h1.direction) - cmath.phase(h2.direction)) % TWO_PI


def ptolemy_terms(
    k0: Spinor, k1: Spinor, k2: Spinor, k3: Spinor
) -> tuple[complex, complex, complex]:
    """
    The three products l01 l23, l03 l12 and l02 l13.

    Raises:
        ZeroSpinor: If any spinor is zero
    """
    for index, k in enumerate((k0, k1, k2, k3)):
        require_nonzero(k, index)
    return (
        bracket(k0, k1) * bracket(k2, k3),
        bracket(k0, k3) * bracket(k1, k2),
        bracket(k0, k2) * bracket(k1, k3),
    )


def ptolemy_residual(k0: Spinor, k1: Spinor, k2: Spinor, k3: Spinor) -> complex:
    """
    l01 l23 + l03 l12 - l02 l13, which vanishes by the Plucker relation.

    Raises:
        ZeroSpinor: If any spinor is zero
    """
    first, second, diagonal = ptolemy_terms(k0, k1, k2, k3)
    return first + second - diagonal


def flip_diagonal(l01: complex, l12: complex, l23: complex, l03: complex, l02: complex) -> complex:
    """
    Exchange relation: the diagonal l13 from the other five lambda lengths.

    Raises:
        DegenerateTetrahedron: If l02 vanishes
    """
    scale = max(abs(l01), abs(l12), abs(l23), abs(l03), 1.0)
    if abs(l02) <= config.degeneracy_tol * scale:
        raise DegenerateTetrahedron("diagonal l02 vanishes; cannot flip")
    return (l01 * l23 + l03 * l12) / l02


def shape_parameters(k0: Spinor, k1: Spinor, k2: Spinor, k3: Spinor) -> ShapeTriple:
    """
    Shape parameters of the ideal tetrahedron with spin-decorated vertices k0..k3.

    z = l02 l13 / (l03 l12), z' = -l03 l12 / (l01 l23), z'' = l01 l23 / (l02 l13).

    Raises:
        ZeroSpinor: If any spinor is zero
        DegenerateTetrahedron: If any pairwise bracket vanishes
    """
    spinors = (k0, k1, k2, k3)
    for index, k in enumerate(spinors):
        require_nonzero(k, index)

    lam: dict[tuple[int, int], complex] = {}
    for i in range(4):
        for j in range(i + 1, 4):
            value = bracket(spinors[i], spinors[j])
            if _is_degenerate(spinors[i], spinors[j], value):
                logger.debug(f"bracket ({i},{j}) = {value} counts as zero")
                raise DegenerateTetrahedron(f"vertices {i} and {j} share a centre")
            lam[(i, j)] = value

    z = lam[(0, 2)] * lam[(1, 3)] / (lam[(0, 3)] * lam[(1, 2)])
    zp = -lam[(0, 3)] * lam[(1, 2)] / (lam[(0, 1)] * lam[(2, 3)])
    zpp = lam[(0, 1)] * lam[(2, 3)] / (lam[(0, 2)] * lam[(1, 3)])
    return ShapeTriple(z, zp, zpp)


def lambda_antisymmetry_check(k1: Spinor, k2: Spinor, tol: float | None = None) -> bool:
    """
    Check l12 = -l21.

    Raises:
        ZeroSpinor: If either spinor is zero
    """
    tol = config.tol if tol is None else tol
    forward = lambda_length(k1, k2)
    backward = lambda_length(k2, k1)
    return abs(forward + backward) <= tol * max(1.0, abs(forward))
