"""The covariant map F^(M) and the automorphic factor J_M."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.groups import JacobiElement, SiegelJacobiPoint
from siegel_jacobi.core.linalg import IndexMatrix, sqrt_det_denominator
from siegel_jacobi.core.weil import GaussianVector


@dataclass(frozen=True)
class AutomorphicFactorValue:
    """A value of J_M together with the data it was computed for.

    Attributes:
        value: The nonzero complex number ``J_M(x, p)``.
        weight_half: The exponent numerator m in ``det(CΩ + D)^{m/2}``.
        index: The index matrix M.
    """

    value: complex
    weight_half: int
    index: IndexMatrix

    def __post_init__(self) -> None:
        if self.value == 0:
            raise DomainError("an automorphic factor is never zero")


def covariant_vector(index: IndexMatrix, p: SiegelJacobiPoint) -> GaussianVector:
    """Return ``F^(M)_{Ω,Z}(x) = e^{πiσ(M(xΩᵗx + 2xᵗZ))}``.

    Raises:
        DomainError: M is not positive definite.
    """
    if not index.positive_definite:
        raise DomainError("the covariant map needs a positive definite M")
    return GaussianVector(1.0, p.omega, p.z, index)


def factor_exponents(
    m_mat: np.ndarray,
    x: JacobiElement,
    p: SiegelJacobiPoint,
) -> tuple[complex, complex, complex]:
    """Return the two traces and the root of the determinant a factor is built from.

    For ``x = (g, (λ, μ; κ))`` with ``g = (A, B; C, D)`` these are
    ``σ(M(Z + λΩ + μ)(CΩ + D)^{-1}C ᵗ(Z + λΩ + μ))``,
    ``σ(M(λΩᵗλ + 2λᵗZ + κ + μᵗλ))`` and ``det(CΩ + D)^{1/2}`` on the branch of
    :func:`~siegel_jacobi.core.linalg.sqrt_det_denominator`.

    Raises:
        SingularDenominatorError: ``CΩ + D`` is singular at *p*.
    """
    if (x.n, x.m) != (p.n, p.m) or m_mat.shape != (p.m, p.m):
        raise DimensionError(
            f"element of (n,m)={x.n, x.m}, point of {p.n, p.m}, index {m_mat.shape!r}"
        )
    w = p.omega_array
    g, h = x.g, x.h
    root = sqrt_det_denominator(g.C, g.D, w)
    shifted = p.z + h.lam @ w + h.mu
    first = np.trace(m_mat @ shifted @ np.linalg.solve(g.C @ w + g.D, g.C) @ shifted.T)
    second = np.trace(
        m_mat @ (h.lam @ w @ h.lam.T + 2.0 * h.lam @ p.z.T + h.kappa + h.mu @ h.lam.T)
    )
    return complex(first), complex(second), root


def automorphic_factor_J(
    index: IndexMatrix,
    x: JacobiElement,
    p: SiegelJacobiPoint,
) -> AutomorphicFactorValue:
    """Evaluate ``J_M(x, (Ω, Z))``::

        e^{πiσ(M(Z + λΩ + μ)(CΩ + D)^{-1}C ᵗ(Z + λΩ + μ))}
        · e^{−πiσ(M(λΩᵗλ + 2λᵗZ + κ + μᵗλ))}
        · det(CΩ + D)^{m/2}

    with the last factor on the branch analytic in Ω (principal for n = 1).

    Raises:
        SingularDenominatorError: ``CΩ + D`` is singular at *p*.
    """
    first, second, root = factor_exponents(index.matrix, x, p)
    value = (
        cmath.exp(1j * np.pi * first)
        * cmath.exp(-1j * np.pi * second)
        * root**index.m
    )
    return AutomorphicFactorValue(complex(value), index.m, index)
