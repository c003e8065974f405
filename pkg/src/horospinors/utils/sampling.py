"""
Random generators for spinors, unimodular matrices and totally positive tuples.

All generators take a numpy Generator so runs are reproducible from a seed.
"""

from __future__ import annotations

import cmath

import numpy as np

from horospinors.complex_minkowski import ComplexMatrix2
from horospinors.config import config
from horospinors.horospheres import INFINITY, Finite
from horospinors.spinor_flags import Spinor, bracket


def _unit_square(rng: np.random.Generator) -> complex:
    re, im = rng.uniform(-1.0, 1.0, size=2)
    return complex(re, im)


def random_spinor(rng: np.random.Generator) -> Spinor:
    """Nonzero spinor with entries uniform in the complex unit square"""
    while True:
        k = Spinor(_unit_square(rng), _unit_square(rng))
        if k.norm() > 1e-3:
            return k


def random_spinor_pair(rng: np.random.Generator) -> tuple[Spinor, Spinor]:
    """Two spinors whose bracket is above the degeneracy threshold"""
    while True:
        k1, k2 = random_spinor(rng), random_spinor(rng)
        if abs(bracket(k1, k2)) > 1e3 * config.degeneracy_tol * k1.norm() * k2.norm():
            return k1, k2


def random_unimodular(rng: np.random.Generator) -> ComplexMatrix2:
    """
    Random element of SL(2, C).

    Entries are drawn from the complex unit square, matrices with |det| < 0.1 are
    rejected and the rest are divided by a square root of the determinant.
    """
    while True:
        M = ComplexMatrix2(*(_unit_square(rng) for _ in range(4)))
        det = M.det()
        if abs(det) >= 0.1:
            return M * (1.0 / cmath.sqrt(det))


def random_totally_positive(
    rng: np.random.Generator, d: int | None = None, with_infinity: bool | None = None
):
    """
    Random totally positive tuple built from a decorated ideal polygon.

    Real centres are sampled in decreasing order, optionally headed by infinity,
    rotated by a random offset and given random sizes.

    Args:
        rng: Random generator
        d: Number of vertices (default: uniform in 3..8)
        with_infinity: Put one vertex at infinity (default: coin flip)

    Returns:
        Tuple (SpinorTuple, centres, sizes)
    """
    # polygons_grassmannians imports horospinors.utils
    from horospinors.polygons_grassmannians import spinors_from_decorated_polygon

    d = int(rng.integers(3, 9)) if d is None else d
    with_infinity = bool(rng.integers(0, 2)) if with_infinity is None else with_infinity

    n_finite = d - 1 if with_infinity else d
    values = np.sort(rng.uniform(-5.0, 5.0, size=n_finite))[::-1]
    while n_finite > 1 and np.min(-np.diff(values)) < 1e-3:
        values = np.sort(rng.uniform(-5.0, 5.0, size=n_finite))[::-1]

    centres = [Finite(complex(v)) for v in values]
    if with_infinity:
        centres.insert(0, INFINITY)
    offset = int(rng.integers(0, d))
    centres = centres[offset:] + centres[:offset]
    sizes = [float(s) for s in rng.uniform(0.2, 3.0, size=d)]
    return spinors_from_decorated_polygon(centres, sizes), centres, sizes
