"""Group laws of H^(n,m), Sp(n, ℝ) and G^J and their actions on H_n × ℂ^(m,n).

The Heisenberg law is the circle product

    (λ, μ; κ) ∘ (λ', μ'; κ') = (λ+λ', μ+μ'; κ+κ'+λᵗμ'−μᵗλ')

and the Jacobi law twists the second factor by ``(λ̃, μ̃) = (λ, μ)g'``.
The bracket coordinates ``[λ, μ; κ] = (λ, μ; κ − μᵗλ)`` with the diamond
product are provided as a coordinate change only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from siegel_jacobi.core.errors import DimensionError
from siegel_jacobi.core.groups.model import (
    HeisenbergElement,
    JacobiElement,
    SiegelJacobiPoint,
    SymplecticElement,
)
from siegel_jacobi.core.linalg import ComplexSymMatrix, det_symplectic_denominator, symmetrize


def _check_same_shape(a: HeisenbergElement, b: HeisenbergElement) -> None:
    if a.lam.shape != b.lam.shape:
        raise DimensionError(f"Heisenberg shapes {a.lam.shape!r} and {b.lam.shape!r} differ")


# ---------------------------------------------------------------------------
# Heisenberg group
# ---------------------------------------------------------------------------


def heisenberg_mul(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    """Return the circle product ``a ∘ b``."""
    _check_same_shape(a, b)
    return HeisenbergElement(
        a.lam + b.lam,
        a.mu + b.mu,
        a.kappa + b.kappa + a.lam @ b.mu.T - a.mu @ b.lam.T,
    )


def heisenberg_inv(a: HeisenbergElement) -> HeisenbergElement:
    """Return ``(−λ, −μ; −κ + λᵗμ − μᵗλ)``."""
    return HeisenbergElement(-a.lam, -a.mu, -a.kappa + a.lam @ a.mu.T - a.mu @ a.lam.T)


@dataclass(frozen=True, eq=False)
class BracketCoordinates:
    """Heisenberg element written as ``[λ, μ; κ]``."""

    lam: np.ndarray
    mu: np.ndarray
    kappa: np.ndarray


def to_bracket(a: HeisenbergElement) -> BracketCoordinates:
    return BracketCoordinates(a.lam, a.mu, a.kappa + a.mu @ a.lam.T)


def from_bracket(b: BracketCoordinates) -> HeisenbergElement:
    return HeisenbergElement(b.lam, b.mu, b.kappa - b.mu @ b.lam.T)


def bracket_mul(a: BracketCoordinates, b: BracketCoordinates) -> BracketCoordinates:
    """Diamond product ``[λ+λ₀, μ+μ₀; κ+κ₀+λᵗμ₀+μ₀ᵗλ]``."""
    return BracketCoordinates(
        a.lam + b.lam,
        a.mu + b.mu,
        a.kappa + b.kappa + a.lam @ b.mu.T + b.mu @ a.lam.T,
    )


def bracket_inv(a: BracketCoordinates) -> BracketCoordinates:
    return BracketCoordinates(-a.lam, -a.mu, -a.kappa + a.lam @ a.mu.T + a.mu @ a.lam.T)


# ---------------------------------------------------------------------------
# Symplectic and Jacobi groups
# ---------------------------------------------------------------------------


def symplectic_mul(g1: SymplecticElement, g2: SymplecticElement) -> SymplecticElement:
    if g1.n != g2.n:
        raise DimensionError(f"Sp({g1.n}) times Sp({g2.n})")
    return SymplecticElement.from_matrix(g1.matrix @ g2.matrix)


def symplectic_inv(g: SymplecticElement) -> SymplecticElement:
    """Return ``[[ᵗD, −ᵗB], [−ᵗC, ᵗA]]``."""
    return SymplecticElement(g.D.T, -g.B.T, -g.C.T, g.A.T)


def _twist(h: HeisenbergElement, g: SymplecticElement) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(λ̃, μ̃) = (λ, μ)g = (λA + μC, λB + μD)``."""
    return h.lam @ g.A + h.mu @ g.C, h.lam @ g.B + h.mu @ g.D


def jacobi_mul(x: JacobiElement, y: JacobiElement) -> JacobiElement:
    """Return ``x·y`` in G^J."""
    if (x.n, x.m) != (y.n, y.m):
        raise DimensionError(f"G^J elements of (n,m)={x.n, x.m} and {y.n, y.m}")
    lam_t, mu_t = _twist(x.h, y.g)
    h = HeisenbergElement(
        lam_t + y.h.lam,
        mu_t + y.h.mu,
        x.h.kappa + y.h.kappa + lam_t @ y.h.mu.T - mu_t @ y.h.lam.T,
    )
    return JacobiElement(symplectic_mul(x.g, y.g), h)


def jacobi_inv(x: JacobiElement) -> JacobiElement:
    g_inv = symplectic_inv(x.g)
    lam_t, mu_t = _twist(x.h, g_inv)
    h = HeisenbergElement(-lam_t, -mu_t, -x.h.kappa + lam_t @ mu_t.T - mu_t @ lam_t.T)
    return JacobiElement(g_inv, h)


def pure_heisenberg(h: HeisenbergElement) -> JacobiElement:
    return JacobiElement(SymplecticElement.identity(h.n), h)


def pure_symplectic(g: SymplecticElement, m: int) -> JacobiElement:
    return JacobiElement(g, HeisenbergElement.identity(m, g.n))


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


def _right_solve(numerator: np.ndarray, denominator: np.ndarray) -> np.ndarray:
    """Return ``numerator · denominator^{-1}``."""
    return np.linalg.solve(denominator.T, numerator.T).T


def act_siegel(g: SymplecticElement, omega: ComplexSymMatrix | np.ndarray) -> ComplexSymMatrix:
    """Return ``g·Ω = (AΩ + B)(CΩ + D)^{-1}``, re-symmetrised.

    Raises:
        SingularDenominatorError: ``CΩ + D`` is numerically singular.
    """
    w = omega.entries if isinstance(omega, ComplexSymMatrix) else np.asarray(omega, dtype=complex)
    det_symplectic_denominator(g.C, g.D, w)
    result = _right_solve(g.A @ w + g.B, g.C @ w + g.D)
    return ComplexSymMatrix(symmetrize(result))


def act_jacobi(x: JacobiElement, p: SiegelJacobiPoint) -> SiegelJacobiPoint:
    """Return ``(g·Ω, (Z + λΩ + μ)(CΩ + D)^{-1})``."""
    if (x.n, x.m) != (p.n, p.m):
        raise DimensionError(f"element of (n,m)={x.n, x.m} acting on point of {p.n, p.m}")
    w = p.omega_array
    new_omega = act_siegel(x.g, p.omega)
    shifted = p.z + x.h.lam @ w + x.h.mu
    new_z = _right_solve(shifted, x.g.C @ w + x.g.D)
    return SiegelJacobiPoint(new_omega, new_z)
