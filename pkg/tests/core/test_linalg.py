"""Tests for the matrix core: symmetric types, branches and the index matrix."""

from __future__ import annotations

import cmath
import itertools

import numpy as np
import pytest

from siegel_jacobi.config.literals import (
    format_complex,
    format_matrix,
    parse_complex,
    parse_matrix,
    parse_real_matrix,
)
from siegel_jacobi.core.errors import (
    ConfigError,
    DimensionError,
    DomainError,
    SingularDenominatorError,
)
from siegel_jacobi.core.linalg import (
    ComplexSymMatrix,
    IndexMatrix,
    RealSymMatrix,
    analytic_sqrt_det,
    det_symplectic_denominator,
    is_positive_definite,
    principal_half_power,
    principal_sqrt,
    sqrt_det_denominator,
    trace_product,
)

# ---------------------------------------------------------------------------
# Symmetric matrix types
# ---------------------------------------------------------------------------


class TestSymmetricTypes:
    """RealSymMatrix and ComplexSymMatrix storage."""

    def test_real_mirrors_upper_triangle(self) -> None:
        s = RealSymMatrix(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert np.array_equal(s.entries, [[1.0, 2.0], [2.0, 4.0]])

    def test_entries_are_read_only(self) -> None:
        s = RealSymMatrix(np.eye(2))
        with pytest.raises(ValueError):
            s.entries[0, 0] = 5.0

    def test_non_square_rejected(self) -> None:
        with pytest.raises(DimensionError):
            RealSymMatrix(np.zeros((2, 3)))

    def test_complex_parts(self) -> None:
        w = ComplexSymMatrix(np.array([[1 + 2j, 0.5j], [0.5j, 3j]]))
        assert w.size == 2
        assert np.array_equal(w.imag.entries, [[2.0, 0.5], [0.5, 3.0]])
        assert np.array_equal(w.real.entries, [[1.0, 0.0], [0.0, 0.0]])


class TestPositiveDefinite:
    """is_positive_definite with its relative cutoff."""

    def test_identity(self) -> None:
        assert is_positive_definite(np.eye(3))

    def test_zero_matrix_is_not(self) -> None:
        assert not is_positive_definite(np.zeros((2, 2)))

    def test_indefinite(self) -> None:
        assert not is_positive_definite(np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_semidefinite_is_not(self) -> None:
        assert not is_positive_definite(np.array([[1.0, 1.0], [1.0, 1.0]]))

    def test_small_integer_matrices_follow_leading_minors(self) -> None:
        wrong = []
        for a, b, c, d, e, f in itertools.product(range(-2, 3), repeat=6):
            s = np.array([[a, b, c], [b, d, e], [c, e, f]], dtype=float)
            det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)
            expected = a > 0 and a * d - b * b > 0 and det > 0
            if is_positive_definite(s) != expected:
                wrong.append(s)
        assert not wrong


# ---------------------------------------------------------------------------
# Branches
# ---------------------------------------------------------------------------


class TestPrincipalBranch:
    """Square roots with -π/2 < arg <= π/2."""

    def test_negative_real_goes_to_upper_side(self) -> None:
        assert principal_sqrt(-1.0) == 1j
        assert principal_sqrt(complex(-1.0, -0.0)) == 1j

    def test_positive_real(self) -> None:
        assert principal_sqrt(4.0) == 2.0

    def test_half_power_squares_back(self) -> None:
        z = -0.3 + 1.7j
        assert principal_half_power(z, 2) == pytest.approx(z, rel=1e-15)

    def test_half_power_of_minus_i(self) -> None:
        assert principal_half_power(-1j, 1) == pytest.approx(cmath.exp(-0.25j * cmath.pi))

    def test_negative_exponent(self) -> None:
        z = 2.0 + 0.5j
        assert principal_half_power(z, -3) == pytest.approx(1.0 / principal_sqrt(z) ** 3)

    def test_zero_to_negative_power(self) -> None:
        with pytest.raises(DomainError):
            principal_half_power(0.0, -1)

    def test_zero_exponent(self) -> None:
        assert principal_half_power(0.0, 0) == 1.0


class TestDeterminants:
    """det(CΩ + D) and the analytic square root of det."""

    def test_identity_denominator(self) -> None:
        omega = np.array([[1j]])
        assert det_symplectic_denominator(np.zeros((1, 1)), np.eye(1), omega) == 1.0

    def test_singular_denominator(self) -> None:
        with pytest.raises(SingularDenominatorError):
            det_symplectic_denominator(np.eye(1), np.array([[-1j]]), np.array([[1j]]))

    def test_block_shape_mismatch(self) -> None:
        with pytest.raises(DimensionError):
            det_symplectic_denominator(np.eye(2), np.eye(2), np.array([[1j]]))

    def test_analytic_sqrt_det_positive_on_real(self) -> None:
        assert analytic_sqrt_det(2.0 * np.eye(2)) == pytest.approx(2.0)

    def test_analytic_sqrt_det_squares_to_det(self) -> None:
        a = np.array([[1.0 + 0.4j, 0.2], [0.2, 2.0 - 0.7j]])
        root = analytic_sqrt_det(a)
        assert root**2 == pytest.approx(np.linalg.det(a))
        assert root.real > 0

    def test_trace_product(self) -> None:
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert trace_product(a, np.eye(2), a) == pytest.approx(np.trace(a @ a))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_sigma_denominator_at_i(self, n: int) -> None:
        det = det_symplectic_denominator(np.eye(n), np.zeros((n, n)), 1j * np.eye(n))
        assert det == pytest.approx(1j**n)

    def test_degree_one_is_scalar(self) -> None:
        rng = np.random.default_rng(21)
        for _ in range(100):
            c, d = rng.normal(size=2)
            omega = complex(rng.normal(), rng.uniform(0.1, 3.0))
            det = det_symplectic_denominator(np.array([[c]]), np.array([[d]]), np.array([[omega]]))
            assert det == pytest.approx(c * omega + d, rel=1e-13)


def _random_siegel(rng: np.random.Generator, n: int) -> np.ndarray:
    x = rng.normal(size=(n, n))
    a = rng.normal(size=(n, n))
    return 0.5 * (x + x.T) + 1j * (a @ a.T + 0.3 * np.eye(n))


class TestSqrtDetDenominator:
    """The root of det(CΩ + D) continued analytically over H_n."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_sigma_at_i(self, n: int) -> None:
        root = sqrt_det_denominator(np.eye(n), np.zeros((n, n)), 1j * np.eye(n))
        assert root == pytest.approx(cmath.exp(0.25j * cmath.pi * n))

    def test_zero_c_is_principal_root_of_det_d(self) -> None:
        d = np.array([[-1.0, 0.0], [0.0, 2.0]])
        root = sqrt_det_denominator(np.zeros((2, 2)), d, 1j * np.eye(2))
        assert root == pytest.approx(principal_sqrt(-2.0))

    def test_degree_one_is_principal(self) -> None:
        rng = np.random.default_rng(22)
        for _ in range(200):
            c, d = rng.normal(size=2)
            omega = complex(rng.normal(), rng.uniform(0.1, 3.0))
            root = sqrt_det_denominator(np.array([[c]]), np.array([[d]]), np.array([[omega]]))
            assert root == pytest.approx(principal_sqrt(c * omega + d), rel=1e-12)

    @pytest.mark.parametrize("n", [2, 3])
    def test_squares_to_det(self, n: int) -> None:
        rng = np.random.default_rng(23 + n)
        for _ in range(50):
            omega = _random_siegel(rng, n)
            d = rng.normal(size=(n, n))
            d = d + d.T
            root = sqrt_det_denominator(np.eye(n), d, omega)
            assert root**2 == pytest.approx(np.linalg.det(omega + d), rel=1e-10)

    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_root_on_rotated_cone(self, n: int) -> None:
        # Ω + D stays in H_n, so -i(Ω + D) has positive definite real part.
        rng = np.random.default_rng(33 + n)
        for _ in range(50):
            omega = _random_siegel(rng, n)
            d = rng.normal(size=(n, n))
            d = 0.5 * (d + d.T) if rng.random() < 0.5 else np.zeros((n, n))
            root = sqrt_det_denominator(np.eye(n), d, omega)
            expected = cmath.exp(0.25j * cmath.pi * n) * analytic_sqrt_det(-1j * (omega + d))
            assert root == pytest.approx(expected, rel=1e-10)

    def test_singular_denominator(self) -> None:
        with pytest.raises(SingularDenominatorError):
            sqrt_det_denominator(np.eye(1), np.array([[-1j]]), np.array([[1j]]))


# ---------------------------------------------------------------------------
# Index matrix
# ---------------------------------------------------------------------------


class TestIndexMatrix:
    """Arithmetic flags of M."""

    def test_e8_flags(self) -> None:
        e8 = IndexMatrix.e8()
        assert e8.m == 8
        assert e8.positive_definite and e8.even and e8.unimodular
        assert e8.det == pytest.approx(1.0)

    def test_one_by_one_identity(self) -> None:
        one = IndexMatrix.of(1.0)
        assert one.integral and one.unimodular and one.half_integral
        assert not one.even

    def test_half_integral_not_integral(self) -> None:
        m = IndexMatrix.of([[1.0, 0.5], [0.5, 1.0]])
        assert m.half_integral
        assert not m.integral
        assert IndexMatrix.of(0.5).half_integral
        assert not IndexMatrix.of(0.3).half_integral

    def test_even_but_not_unimodular(self) -> None:
        m = IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]])
        assert m.even and not m.unimodular

    def test_semidefinite(self) -> None:
        m = IndexMatrix.of([[1.0, 1.0], [1.0, 1.0]])
        assert m.positive_semidefinite and not m.positive_definite

    def test_inverse_and_scaled(self) -> None:
        m = IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]])
        assert np.allclose(m.inverse().matrix @ m.matrix, np.eye(2))
        assert np.array_equal(m.scaled(0.5).matrix, [[1.0, 0.5], [0.5, 1.0]])

    def test_flags_dict(self) -> None:
        assert IndexMatrix.e8().flags()["unimodular"] is True


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------


class TestLiterals:
    """Complex and matrix literals of the job-file grammar."""

    @pytest.mark.parametrize(
        ("token", "expected"),
        [("1+2i", 1 + 2j), ("i", 1j), ("-2.5i", -2.5j), ("1e-3-4i", 0.001 - 4j), ("3", 3.0)],
    )
    def test_parse_complex(self, token: str, expected: complex) -> None:
        assert parse_complex(token) == expected

    def test_j_suffix_rejected(self) -> None:
        with pytest.raises(ConfigError):
            parse_complex("2j")

    def test_parse_matrix(self) -> None:
        a = parse_matrix("[1 0; 0 1+i]")
        assert np.array_equal(a, [[1, 0], [0, 1 + 1j]])

    def test_bare_scalar_is_one_by_one(self) -> None:
        assert parse_matrix("i").shape == (1, 1)

    def test_ragged_rows(self) -> None:
        with pytest.raises(ConfigError, match="ragged"):
            parse_matrix("[1 2; 3]")

    def test_unbalanced(self) -> None:
        with pytest.raises(ConfigError, match="unbalanced"):
            parse_matrix("[1 2")

    def test_real_matrix_rejects_complex(self) -> None:
        with pytest.raises(ConfigError):
            parse_real_matrix("[1 i]")

    def test_format_parses_back(self) -> None:
        a = np.array([[0.1 + 0.2j, -3.0], [-3.0, 1e-7 - 2.5j]])
        assert np.array_equal(parse_matrix(format_matrix(a)), a)
        assert parse_complex(format_complex(-0.5 - 1.25j)) == -0.5 - 1.25j
