"""Tests for complex 2x2 matrices, Minkowski vectors and the SL(2,C) action"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from horospinors.complex_minkowski import (
    P0,
    Q0,
    ComplexMatrix2,
    MinkowskiVector,
    causal_type,
    celestial_point,
    herm_to_minkowski,
    is_future_lightlike,
    lorentz_inner,
    minkowski_to_herm,
    sl2c_action_minkowski,
    so13_matrix,
)
from horospinors.errors import NotFutureLightlike, NotHermitian, NotUnimodular
from horospinors.spinor_flags import phi1
from horospinors.utils import random_spinor, random_unimodular

LORENTZ_GRAM = np.diag([1.0, -1.0, -1.0, -1.0])

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def random_vector(rng) -> MinkowskiVector:
    return MinkowskiVector(*(float(c) for c in rng.uniform(-2.0, 2.0, size=4)))


class TestComplexMatrix2:
    def test_det_and_trace(self):
        A = ComplexMatrix2(1, 2j, 3, 4)
        assert A.det() == 4 - 6j
        assert A.trace() == 5

    def test_product_and_inverse(self, rng):
        A = random_unimodular(rng)
        product = (A @ A.inverse()).to_array()
        np.testing.assert_allclose(product, np.eye(2), atol=1e-12)

    def test_adjoint(self):
        A = ComplexMatrix2(1 + 1j, 2, 3j, 4)
        np.testing.assert_array_equal(A.adjoint().to_array(), A.to_array().conj().T)

    def test_unimodular_predicate(self):
        assert ComplexMatrix2.identity().is_unimodular()
        assert not ComplexMatrix2(2, 0, 0, 1).is_unimodular()

    def test_hermitian_predicate(self):
        assert ComplexMatrix2(1, 1j, -1j, 2).is_hermitian()
        assert not ComplexMatrix2(1, 1j, 1j, 2).is_hermitian()
        assert not ComplexMatrix2(1j, 0, 0, 1).is_hermitian()


class TestHermitianIdentification:
    def test_light_cone_point(self):
        assert herm_to_minkowski(ComplexMatrix2(1, 0, 0, 0)) == MinkowskiVector(1, 0, 0, 1)

    def test_zero(self):
        assert herm_to_minkowski(ComplexMatrix2(0, 0, 0, 0)) == MinkowskiVector(0, 0, 0, 0)

    def test_off_diagonal(self):
        S = ComplexMatrix2(0.5, 0.5j, -0.5j, 0.5)
        assert herm_to_minkowski(S) == MinkowskiVector(1, 0, 1, 0)

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            herm_to_minkowski(ComplexMatrix2(1, 1, 0, 1))

    def test_minkowski_to_herm_examples(self):
        np.testing.assert_array_equal(minkowski_to_herm(Q0).to_array(), 0.5 * np.eye(2))
        np.testing.assert_array_equal(minkowski_to_herm(P0).to_array(), [[1, 0], [0, 0]])
        np.testing.assert_array_equal(
            minkowski_to_herm(MinkowskiVector(2, 2, 0, 0)).to_array(), [[1, 1], [1, 1]]
        )

    def test_trace_and_determinant(self, rng):
        for _ in range(100):
            x = random_vector(rng)
            S = minkowski_to_herm(x)
            assert S.trace().real == pytest.approx(x.T, abs=1e-12)
            assert (4 * S.det()).real == pytest.approx(lorentz_inner(x, x), abs=1e-9)

    def test_round_trip_random_hermitian(self, rng):
        for _ in range(100):
            a, d = rng.uniform(-3, 3, size=2)
            b = complex(*rng.uniform(-3, 3, size=2))
            S = ComplexMatrix2(a, b, b.conjugate(), d)
            back = minkowski_to_herm(herm_to_minkowski(S))
            np.testing.assert_allclose(back.to_array(), S.to_array(), rtol=1e-12, atol=1e-12)

    @given(finite, finite, finite, finite)
    def test_round_trip_is_exact(self, T, X, Y, Z):
        x = MinkowskiVector(T, X, Y, Z)
        assert herm_to_minkowski(minkowski_to_herm(x), tol=1e-9).allclose(x, tol=1e-12)


class TestLorentzInner:
    def test_examples(self):
        assert lorentz_inner(Q0, Q0) == 1
        assert lorentz_inner(P0, P0) == 0
        assert lorentz_inner(P0, Q0) == 1

    def test_causal_type(self):
        assert causal_type(Q0) == "timelike"
        assert causal_type(P0) == "lightlike"
        assert causal_type(MinkowskiVector(0, 1, 0, 0)) == "spacelike"

    def test_future_light_cone(self):
        assert is_future_lightlike(P0)
        assert not is_future_lightlike(-P0)
        assert not is_future_lightlike(Q0)

    def test_celestial_point(self):
        assert celestial_point(MinkowskiVector(3, 0, 3, 0)) == MinkowskiVector(1, 0, 1, 0)
        with pytest.raises(NotFutureLightlike):
            celestial_point(Q0)


class TestSl2cAction:
    def test_identity(self, rng):
        x = random_vector(rng)
        assert sl2c_action_minkowski(ComplexMatrix2.identity(), x).allclose(x, tol=1e-15)

    def test_parabolic_on_q0(self):
        image = sl2c_action_minkowski(ComplexMatrix2(1, 1, 0, 1), Q0)
        assert image.allclose(MinkowskiVector(1.5, 1, 0, 0.5), tol=1e-15)

    def test_rotation_swaps_poles(self):
        image = sl2c_action_minkowski(ComplexMatrix2(0, -1, 1, 0), P0)
        assert image.allclose(MinkowskiVector(1, 0, 0, -1), tol=1e-15)

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            sl2c_action_minkowski(ComplexMatrix2(2, 0, 0, 2), Q0)

    def test_preserves_lorentz_form(self, rng):
        for _ in range(100):
            A = random_unimodular(rng)
            x, y = random_vector(rng), random_vector(rng)
            Ax, Ay = sl2c_action_minkowski(A, x), sl2c_action_minkowski(A, y)
            scale = max(1.0, Ax.euclidean_norm() * Ay.euclidean_norm())
            assert abs(lorentz_inner(Ax, Ay) - lorentz_inner(x, y)) <= 1e-9 * scale

    def test_preserves_future_light_cone(self, rng):
        for _ in range(1000):
            A = random_unimodular(rng)
            p = phi1(random_spinor(rng))
            assert is_future_lightlike(sl2c_action_minkowski(A, p))


class TestSo13Matrix:
    def test_identity(self):
        np.testing.assert_allclose(so13_matrix(ComplexMatrix2.identity()), np.eye(4), atol=1e-15)

    def test_kernel_of_double_cover(self, rng):
        A = random_unimodular(rng)
        np.testing.assert_allclose(so13_matrix(A), so13_matrix(-A), atol=1e-12)

    def test_parabolic_rows(self):
        expected = np.array(
            [
                [1.5, 0, 1, -0.5],
                [0, 1, 0, 0],
                [1, 0, 1, -1],
                [0.5, 0, 1, 0.5],
            ]
        )
        np.testing.assert_allclose(so13_matrix(ComplexMatrix2(1, 1j, 0, 1)), expected, atol=1e-15)

    def test_matches_action_and_preserves_form(self, rng):
        A = random_unimodular(rng)
        M = so13_matrix(A)
        x = random_vector(rng)
        np.testing.assert_allclose(
            M @ x.to_array(), sl2c_action_minkowski(A, x).to_array(), atol=1e-12
        )
        np.testing.assert_allclose(M.T @ LORENTZ_GRAM @ M, LORENTZ_GRAM, atol=1e-9)

    def test_homomorphism(self, rng):
        for _ in range(20):
            A, B = random_unimodular(rng), random_unimodular(rng)
            np.testing.assert_allclose(
                so13_matrix(A @ B), so13_matrix(A) @ so13_matrix(B), rtol=1e-9, atol=1e-9
            )
