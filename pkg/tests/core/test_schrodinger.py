"""Tests for the sampling grid and the Schrödinger representation W_c."""

from __future__ import annotations

import cmath

import numpy as np
import pytest

from siegel_jacobi.core.errors import DimensionError, DomainError, GridPreconditionError
from siegel_jacobi.core.groups import HeisenbergElement, heisenberg_mul
from siegel_jacobi.core.schrodinger import (
    CentralCharacter,
    GridFunction,
    GridSpec,
    central_character,
    check_homomorphism,
    even_part,
    mackey_decompose,
    odd_part,
    parity,
    random_grid_heisenberg,
    schrodinger_apply,
)


def _gaussian(spec: GridSpec, shift: float = 0.0) -> GridFunction:
    return GridFunction.from_callable(
        spec, lambda x: np.exp(-np.pi * np.sum((x - shift) ** 2, axis=(-2, -1)))
    )


# ---------------------------------------------------------------------------
# Grid
# ---------------------------------------------------------------------------


class TestGridSpec:
    """Grid construction and translation steps."""

    def test_default_shape(self) -> None:
        spec = GridSpec(1, 1)
        assert spec.points_per_axis == 256
        assert spec.axis[0] == -8.0
        assert spec.axis[-1] == pytest.approx(8.0 - 1.0 / 16.0)

    def test_mesh_layout(self) -> None:
        spec = GridSpec(2, 1, half_width=1.0, spacing=0.5)
        mesh = spec.mesh()
        assert mesh.shape == (4, 4, 2, 1)
        assert mesh[1, 3, 0, 0] == -0.5
        assert mesh[1, 3, 1, 0] == 0.5

    def test_spacing_must_divide_width(self) -> None:
        with pytest.raises(GridPreconditionError):
            GridSpec(1, 1, half_width=1.0, spacing=0.3)

    def test_non_positive_spacing(self) -> None:
        with pytest.raises(GridPreconditionError):
            GridSpec(1, 1, spacing=0.0)

    def test_grid_steps(self) -> None:
        spec = GridSpec(1, 2)
        assert spec.grid_steps(np.array([[0.125, -1.0]])).tolist() == [2, -16]

    def test_off_grid_shift(self) -> None:
        with pytest.raises(GridPreconditionError):
            GridSpec(1, 1).grid_steps(np.array([[0.01]]))

    def test_shift_shape(self) -> None:
        with pytest.raises(DimensionError):
            GridSpec(1, 1).grid_steps(np.zeros((2, 1)))

    def test_values_shape_checked(self) -> None:
        with pytest.raises(DimensionError):
            GridFunction(GridSpec(1, 1, half_width=1.0, spacing=0.5), np.zeros(5))


class TestParity:
    """Reflection x ↦ −x and the even/odd split."""

    def test_parity_reflects_points(self) -> None:
        spec = GridSpec(1, 1, half_width=1.0, spacing=0.25)
        f = GridFunction.from_callable(spec, lambda x: x[..., 0, 0])
        assert np.allclose(parity(f).values[1:], -f.values[1:])

    def test_involution(self) -> None:
        f = _gaussian(GridSpec(1, 2, half_width=2.0, spacing=0.25), shift=0.3)
        assert np.array_equal(parity(parity(f)).values, f.values)

    def test_split_sums_back(self) -> None:
        f = _gaussian(GridSpec(1, 1), shift=0.7)
        total = even_part(f).values + odd_part(f).values
        assert np.allclose(total, f.values)

    def test_centred_gaussian_is_even(self) -> None:
        f = _gaussian(GridSpec(1, 1))
        assert odd_part(f).norm() < 1e-15


# ---------------------------------------------------------------------------
# Representation
# ---------------------------------------------------------------------------


class TestCentralCharacter:
    """χ_c on the abelian subgroup L."""

    def test_value(self) -> None:
        c = CentralCharacter(np.array([[2.0]]))
        h = HeisenbergElement(np.zeros((1, 1)), np.array([[0.3]]), np.array([[0.25]]))
        assert central_character(c, h) == pytest.approx(cmath.exp(0.5j * np.pi))

    def test_requires_zero_lambda(self) -> None:
        c = CentralCharacter(np.eye(1))
        h = HeisenbergElement(np.ones((1, 1)), np.zeros((1, 1)), np.zeros((1, 1)))
        with pytest.raises(DomainError):
            central_character(c, h)

    def test_zero_c_rejected(self) -> None:
        with pytest.raises(DomainError):
            CentralCharacter(np.zeros((2, 2)))

    def test_mackey_decomposition(self) -> None:
        rng = np.random.default_rng(0)
        h = random_grid_heisenberg(rng, GridSpec(2, 2))
        l_part, s_part = mackey_decompose(h)
        assert not np.any(l_part.lam)
        assert not np.any(s_part.mu) and not np.any(s_part.kappa)
        assert heisenberg_mul(l_part, s_part).allclose(h)


class TestSchrodinger:
    """W_c on Gaussian samples."""

    @pytest.mark.parametrize(
        ("m", "n", "c"),
        [(1, 1, [[1.0]]), (1, 1, [[-3.0]]), (2, 1, [[1.0, 0.5], [0.5, 2.0]])],
    )
    def test_homomorphism(self, m: int, n: int, c: list[list[float]]) -> None:
        rng = np.random.default_rng(m + n)
        spec = GridSpec(m, n)
        f = _gaussian(spec)
        character = CentralCharacter(np.array(c))
        for _ in range(4):
            h1, h2 = random_grid_heisenberg(rng, spec), random_grid_heisenberg(rng, spec)
            check = check_homomorphism(character, h1, h2, f)
            assert check.passed, check

    def test_central_elements_act_by_character(self) -> None:
        spec = GridSpec(1, 1)
        f = _gaussian(spec, shift=0.2)
        c = CentralCharacter(np.array([[2.0]]))
        h = HeisenbergElement(np.zeros((1, 1)), np.zeros((1, 1)), np.array([[0.1]]))
        moved = schrodinger_apply(c, h, f)
        assert np.allclose(moved.values, central_character(c, h) * f.values)

    def test_translation_moves_samples(self) -> None:
        spec = GridSpec(1, 1)
        f = _gaussian(spec)
        c = CentralCharacter(np.eye(1))
        h = HeisenbergElement(np.array([[0.5]]), np.zeros((1, 1)), np.zeros((1, 1)))
        moved = schrodinger_apply(c, h, f)
        assert np.allclose(moved.values, _gaussian(spec, shift=-0.5).values, atol=1e-14)

    def test_off_grid_lambda(self) -> None:
        spec = GridSpec(1, 1)
        h = HeisenbergElement(np.array([[0.01]]), np.zeros((1, 1)), np.zeros((1, 1)))
        with pytest.raises(GridPreconditionError):
            schrodinger_apply(CentralCharacter(np.eye(1)), h, _gaussian(spec))

    def test_dimension_mismatch(self) -> None:
        h = HeisenbergElement.identity(2, 1)
        with pytest.raises(DimensionError):
            schrodinger_apply(CentralCharacter(np.eye(2)), h, _gaussian(GridSpec(1, 1)))
