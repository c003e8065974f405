"""Exception hierarchy for horospinors"""

from __future__ import annotations


class HorospinorsError(Exception):
    """Base class for all errors raised by horospinors"""

    exit_code: int = 1


class ParseError(HorospinorsError):
    """Input document or command-line value could not be parsed"""

    exit_code = 2


class GeometryError(HorospinorsError, ValueError):
    """Input is well-formed but geometrically degenerate or out of domain"""

    exit_code = 3


class NotHermitian(GeometryError):
    """Matrix fails the Hermitian predicate"""


class NotUnimodular(GeometryError):
    """Matrix determinant is not 1 within tolerance"""


class ZeroSpinor(GeometryError):
    """A spinor that must be nonzero is zero"""

    def __init__(self, message: str = "spinor is zero", index: int | None = None):
        if index is not None:
            message = f"spinor {index} is zero"
        super().__init__(message)
        self.index = index


class InvalidFlag(GeometryError):
    """Flag representative violates the null-flag invariants"""


class NotFutureLightlike(GeometryError):
    """Vector is not on the future light cone"""


class DegenerateInput(GeometryError):
    """Input lies outside the domain of a model conversion"""


class NotUnitVector(GeometryError):
    """Vector expected on the unit sphere is not"""


class CommonCentre(GeometryError):
    """Two horospheres share a centre; their lambda length vanishes"""


class DegenerateTetrahedron(GeometryError):
    """Some pairwise bracket of a tetrahedron vanishes"""


class DuplicateCentre(GeometryError):
    """Two polygon vertices coincide"""


class NonRealCentre(GeometryError):
    """A polygon vertex is not in R or infinity"""


class MultipleInfinities(GeometryError):
    """More than one polygon vertex is at infinity"""


class NotCyclicallyOrdered(GeometryError):
    """Centres are not in order around the oriented boundary circle"""


class RankDeficient(GeometryError):
    """All 2x2 minors of a spinor tuple vanish"""


class DegeneratePair(GeometryError):
    """The first two spinors of a tuple are proportional"""


class NotTotallyPositive(GeometryError):
    """Spinor tuple is not totally positive"""


class ZeroPlucker(GeometryError):
    """Some Plucker coordinate vanishes"""


class WrongArity(GeometryError):
    """Command received the wrong number of spinors"""


class EmptyWindow(GeometryError):
    """Rendering window has no area"""
