"""Tests for the Schrödinger–Weil action on Gaussian vectors and on grids."""

from __future__ import annotations

import cmath

import numpy as np
import pytest
from scipy.integrate import quad

from siegel_jacobi.config.tolerances import (
    QUADRATURE_HALF_WIDTH,
    QUADRATURE_NODES_PER_PANEL,
    QUADRATURE_PANELS,
)
from siegel_jacobi.core.errors import DimensionError, DomainError, GridPreconditionError
from siegel_jacobi.core.groups import (
    Generator,
    HeisenbergElement,
    heisenberg_mul,
    parse_word,
    random_point,
)
from siegel_jacobi.core.linalg import IndexMatrix
from siegel_jacobi.core.schrodinger import GridSpec
from siegel_jacobi.core.weil import (
    GaussianVector,
    act_galpha,
    act_heisenberg,
    act_sigma,
    act_tb,
    apply_letter,
    apply_word,
    check_gaussian_integral,
    check_grid_consistency,
    gaussian_integral,
    integrate,
    parity_vector,
    quadrature_sigma,
    sample,
)
from siegel_jacobi.core.weil.quadrature import composite_rule

_FINE_GRID = GridSpec(1, 1, half_width=6.0, spacing=1.0 / 32.0)


def _vector(
    index: IndexMatrix,
    omega: complex = 0.2 + 1.1j,
    z: complex = 0.3 - 0.2j,
) -> GaussianVector:
    m = index.m
    return GaussianVector(1.0, np.array([[omega]]), np.full((m, 1), z), index)


def _same_vector(a: GaussianVector, b: GaussianVector, tol: float = 1e-12) -> bool:
    return (
        abs(a.prefactor - b.prefactor) <= tol * max(1.0, abs(b.prefactor))
        and np.allclose(a.omega_array, b.omega_array, atol=tol)
        and np.allclose(a.z, b.z, atol=tol)
    )


# ---------------------------------------------------------------------------
# Gaussian vectors
# ---------------------------------------------------------------------------


class TestGaussianVector:
    """Construction, evaluation and the closed-form integral."""

    def test_standard_gaussian_integrates_to_one(self) -> None:
        assert gaussian_integral(np.array([[1j]]), np.zeros((1, 1))) == pytest.approx(1.0)

    def test_index_scales_integral(self) -> None:
        value = gaussian_integral(np.array([[1j]]), np.zeros((1, 1)), IndexMatrix.of(2.0))
        assert value == pytest.approx(1.0 / np.sqrt(2.0))

    def test_integral_at_imaginary_omega_is_real_positive(self) -> None:
        value = gaussian_integral(np.diag([0.7j, 1.3j]), np.zeros((3, 2)))
        assert value.imag == pytest.approx(0.0, abs=1e-15)
        assert value.real > 0

    @pytest.mark.parametrize(("omega", "z"), [(2j, 0.0), (0.4 + 0.9j, 0.3 + 0.2j)])
    def test_closed_form_matches_scipy_quad(self, omega: complex, z: complex) -> None:
        def integrand(x: float) -> complex:
            return cmath.exp(1j * np.pi * (x * x * omega + 2.0 * x * z))

        re, _ = quad(lambda x: integrand(x).real, -np.inf, np.inf, epsabs=1e-13)
        im, _ = quad(lambda x: integrand(x).imag, -np.inf, np.inf, epsabs=1e-13)
        value = gaussian_integral(np.array([[omega]]), np.array([[z]]))
        assert value == pytest.approx(complex(re, im), rel=1e-8)

    @pytest.mark.parametrize(
        ("index", "omega", "z"),
        [
            (IndexMatrix.of(1.0), 1j, 0.0),
            (IndexMatrix.of(1.0), 0.4 + 0.9j, 0.3 + 0.2j),
            (IndexMatrix.of(3.0), -0.5 + 1.2j, -0.4 + 0.1j),
            (IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]]), 0.1 + 1.4j, 0.2 - 0.3j),
        ],
    )
    def test_closed_form_matches_quadrature(
        self, index: IndexMatrix, omega: complex, z: complex
    ) -> None:
        check = check_gaussian_integral(_vector(index, omega, z))
        assert check.passed, check

    def test_norm_squared_matches_quadrature(self) -> None:
        v = _vector(IndexMatrix.of(2.0))
        squared = GaussianVector(1.0, 2j * v.omega.imag.entries, 2j * v.z.imag, v.index)
        assert v.norm_squared() == pytest.approx(integrate(squared).real, rel=1e-10)

    def test_requires_positive_imaginary_part(self) -> None:
        with pytest.raises(DomainError):
            GaussianVector(1.0, np.array([[0.5 - 1j]]), np.zeros((1, 1)), IndexMatrix.of(1.0))

    def test_z_shape_checked(self) -> None:
        with pytest.raises(DimensionError):
            GaussianVector(1.0, np.array([[1j]]), np.zeros((2, 1)), IndexMatrix.of(1.0))

    def test_parity_vector(self) -> None:
        v = _vector(IndexMatrix.of(1.0))
        x = np.array([[[0.4]], [[-1.1]]])
        assert np.allclose(parity_vector(v).evaluate(x), v.evaluate(-x))

    def test_quadrature_dimension_limit(self) -> None:
        v = GaussianVector(1.0, 1j * np.eye(3), np.zeros((1, 3)), IndexMatrix.of(1.0))
        with pytest.raises(DimensionError):
            integrate(v)

    def test_composite_rule_layout(self) -> None:
        nodes, weights = composite_rule()
        assert len(nodes) == QUADRATURE_PANELS * QUADRATURE_NODES_PER_PANEL
        assert np.all(np.abs(nodes) < QUADRATURE_HALF_WIDTH)
        assert np.all(np.diff(nodes) > 0)
        assert weights.sum() == pytest.approx(2.0 * QUADRATURE_HALF_WIDTH, rel=1e-13)
        assert np.dot(weights, nodes**4) == pytest.approx(
            0.4 * QUADRATURE_HALF_WIDTH**5, rel=1e-12
        )


# ---------------------------------------------------------------------------
# Closed-form actions
# ---------------------------------------------------------------------------


class TestClosedFormActions:
    """Generator rewrites of (c, Ω, Z)."""

    def test_tb_shifts_omega(self) -> None:
        v = act_tb(np.array([[2.0]]), _vector(IndexMatrix.of(1.0)))
        assert v.omega_array[0, 0] == pytest.approx(2.2 + 1.1j)

    def test_sigma_on_standard_gaussian_is_fixed(self) -> None:
        v = GaussianVector(1.0, np.array([[1j]]), np.zeros((1, 1)), IndexMatrix.of(1.0))
        moved = act_sigma(v)
        assert moved.omega_array[0, 0] == pytest.approx(1j)
        assert moved.prefactor == pytest.approx(cmath.exp(-0.25j * np.pi))

    def test_galpha_negative_determinant(self) -> None:
        v = act_galpha(np.array([[-1.0]]), _vector(IndexMatrix.of(1.0)))
        assert v.prefactor == pytest.approx(1j)
        assert v.z[0, 0] == pytest.approx(-0.3 + 0.2j)

    def test_galpha_singular(self) -> None:
        with pytest.raises(DomainError):
            act_galpha(np.zeros((1, 1)), _vector(IndexMatrix.of(1.0)))

    def test_heisenberg_composes(self) -> None:
        v = _vector(IndexMatrix.of(2.0))
        h1 = HeisenbergElement(np.array([[0.5]]), np.array([[-0.25]]), np.array([[0.1]]))
        h2 = HeisenbergElement(np.array([[-0.75]]), np.array([[0.4]]), np.array([[0.3]]))
        stepwise = act_heisenberg(1.0, h1, act_heisenberg(1.0, h2, v))
        composite = act_heisenberg(1.0, heisenberg_mul(h1, h2), v)
        assert _same_vector(stepwise, composite)

    def test_central_scalar(self) -> None:
        v = _vector(IndexMatrix.of(1.0))
        h = HeisenbergElement.identity(1, 1)
        assert act_heisenberg(2.0, h, v).prefactor == pytest.approx(2.0 * v.prefactor)

    def test_apply_word_rightmost_first(self) -> None:
        v = _vector(IndexMatrix.of(1.0))
        word = parse_word("t([1]), sigma")
        assert _same_vector(apply_word(word, v), act_tb(np.array([[1.0]]), act_sigma(v)))

    @pytest.mark.parametrize(
        "text", ["sigma", "t([0.7])", "g([1.3])", "g([-0.6])", "h([0.5];[-0.2];[0.3])"]
    )
    def test_actions_preserve_norm(self, text: str) -> None:
        v = _vector(IndexMatrix.of(2.0))
        moved = apply_letter(parse_word(text)[0], v)
        assert moved.norm_squared() == pytest.approx(v.norm_squared(), rel=1e-10)

    @pytest.mark.parametrize(
        "index",
        [IndexMatrix.of(1.0), IndexMatrix.of(2.0), IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]])],
    )
    def test_sigma_matches_quadrature(self, index: IndexMatrix) -> None:
        v = _vector(index)
        x = np.random.default_rng(0).uniform(-1.0, 1.0, size=(4, index.m, 1))
        expected = act_sigma(v).evaluate(x)
        assert np.allclose(quadrature_sigma(v, x), expected, rtol=1e-9, atol=1e-12)


class TestSigmaSquared:
    """σ applied twice is the parity operator times (−i)^{mn}."""

    @pytest.mark.parametrize(
        ("index", "n"),
        [
            (IndexMatrix.of(1.0), 1),
            (IndexMatrix.of(2.0), 1),
            (IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]]), 1),
            (IndexMatrix.of(np.eye(2)), 3),
            (IndexMatrix.of(np.eye(3)), 1),
            (IndexMatrix.of(1.0), 2),
            (IndexMatrix.of(1.0), 3),
        ],
    )
    def test_constant_scalar(self, index: IndexMatrix, n: int) -> None:
        rng = np.random.default_rng(60 + 10 * index.m + n)
        expected = (-1j) ** (index.m * n)
        for _ in range(100):
            p = random_point(rng, n, index.m, real_half_width=2.0)
            v = GaussianVector(rng.normal() + 1j * rng.normal(), p.omega, p.z, index)
            twice = act_sigma(act_sigma(v))
            assert np.allclose(twice.omega_array, v.omega_array, atol=1e-10)
            assert np.allclose(twice.z, parity_vector(v).z, atol=1e-10)
            assert twice.prefactor / v.prefactor == pytest.approx(expected, abs=1e-9)


# ---------------------------------------------------------------------------
# Grid cross-checks
# ---------------------------------------------------------------------------


class TestGridConsistency:
    """Closed-form actions against their sampled counterparts."""

    @pytest.mark.parametrize(
        "letter",
        [
            Generator.t(np.array([[0.75]])),
            Generator.h(np.array([[0.5]]), np.array([[0.3]]), np.array([[-0.15]])),
            Generator.g(np.array([[1.25]])),
            Generator.g(np.array([[-0.8]])),
            Generator.sigma(),
        ],
    )
    def test_index_one(self, letter: Generator) -> None:
        check = check_grid_consistency(letter, _vector(IndexMatrix.of(1.0)), GridSpec(1, 1))
        assert check.passed, check

    @pytest.mark.parametrize("letter", [Generator.t(np.array([[1.0]])), Generator.sigma()])
    def test_index_two(self, letter: Generator) -> None:
        check = check_grid_consistency(letter, _vector(IndexMatrix.of(2.0)), _FINE_GRID)
        assert check.passed, check

    def test_sampled_vector_fits_default_grid(self) -> None:
        f = sample(_vector(IndexMatrix.of(1.0)), GridSpec(1, 1))
        assert f.boundary_magnitude() < 1e-14

    def test_off_grid_heisenberg(self) -> None:
        letter = Generator.h(np.array([[0.01]]), np.zeros((1, 1)), np.zeros((1, 1)))
        with pytest.raises(GridPreconditionError):
            check_grid_consistency(letter, _vector(IndexMatrix.of(1.0)), GridSpec(1, 1))

    def test_sigma_needs_diagonal_index(self) -> None:
        v = _vector(IndexMatrix.of([[2.0, 1.0], [1.0, 2.0]]))
        spec = GridSpec(2, 1, half_width=4.0, spacing=0.25)
        with pytest.raises(GridPreconditionError):
            check_grid_consistency(Generator.sigma(), v, spec)

    def test_galpha_needs_one_dimension(self) -> None:
        v = _vector(IndexMatrix.of(np.eye(2)))
        spec = GridSpec(2, 1, half_width=4.0, spacing=0.25)
        with pytest.raises(GridPreconditionError):
            check_grid_consistency(Generator.g(np.array([[2.0]])), v, spec)
