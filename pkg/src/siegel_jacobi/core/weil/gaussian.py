"""Gaussian vectors ``x ↦ c·e^{πiσ(M(xΩᵗx + 2xᵗZ))}`` and their integrals.

The family is closed under every generator of the Schrödinger–Weil
representation, which lets the actions be carried out exactly on the four
parameters (c, Ω, Z, M) instead of on samples.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.groups import SiegelJacobiPoint
from siegel_jacobi.core.linalg import (
    ComplexSymMatrix,
    IndexMatrix,
    analytic_sqrt_det,
    is_positive_definite,
    principal_half_power,
)
from siegel_jacobi.core.schrodinger import GridFunction, GridSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaussianVector:
    """The vector ``x ↦ prefactor·e^{πiσ(M(xΩᵗx + 2xᵗZ))}`` in L²(ℝ^(m,n))."""

    prefactor: complex
    omega: ComplexSymMatrix
    z: np.ndarray
    index: IndexMatrix

    def __post_init__(self) -> None:
        if not isinstance(self.omega, ComplexSymMatrix):
            object.__setattr__(self, "omega", ComplexSymMatrix(self.omega))
        z = np.array(self.z, dtype=complex, ndmin=2, copy=True)
        if z.shape != (self.index.m, self.omega.size):
            raise DimensionError(
                f"Z {z.shape!r} does not match m={self.index.m}, n={self.omega.size}"
            )
        if not is_positive_definite(self.omega.imag):
            raise DomainError("Im Omega must be positive definite for an L² Gaussian")
        z.setflags(write=False)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "prefactor", complex(self.prefactor))

    @property
    def m(self) -> int:
        return self.index.m

    @property
    def n(self) -> int:
        return self.omega.size

    @property
    def omega_array(self) -> np.ndarray:
        return self.omega.entries

    def replace(
        self,
        prefactor: complex | None = None,
        omega: np.ndarray | None = None,
        z: np.ndarray | None = None,
    ) -> GaussianVector:
        return GaussianVector(
            self.prefactor if prefactor is None else prefactor,
            self.omega if omega is None else ComplexSymMatrix(omega),
            self.z if z is None else z,
            self.index,
        )

    def point(self) -> SiegelJacobiPoint:
        return SiegelJacobiPoint(self.omega, self.z)

    def exponent(self, x: np.ndarray) -> np.ndarray:
        """Return ``πiσ(M(xΩᵗx + 2xᵗZ))`` at points shaped ``(..., m, n)``."""
        m_mat = self.index.matrix
        quad = np.einsum("rs,...sj,jk,...rk->...", m_mat, x, self.omega_array, x)
        lin = 2.0 * np.einsum("...sj,sj->...", x, m_mat @ self.z)
        return 1j * np.pi * (quad + lin)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return self.prefactor * np.exp(self.exponent(np.asarray(x, dtype=float)))

    def norm_squared(self) -> float:
        """Closed-form ``‖v‖²`` via the Gaussian integral at ``(2i·Im Ω, 2i·Im Z)``."""
        y = self.omega.imag.entries
        v = self.z.imag
        value = gaussian_integral(2j * y, 2j * v, self.index)
        return float(abs(self.prefactor) ** 2 * value.real)


def parity_vector(v: GaussianVector) -> GaussianVector:
    """Return ``x ↦ v(−x)``, i.e. Z ↦ −Z."""
    return v.replace(z=-v.z)


def gaussian_integral(
    omega: ComplexSymMatrix | np.ndarray,
    z: np.ndarray,
    index: IndexMatrix | None = None,
) -> complex:
    """Closed form of ``∫ e^{πiσ(M(xΩᵗx + 2xᵗZ))} dx`` over ℝ^(m,n).

    With ``M = I`` this is ``det(Ω/i)^{−m/2}·e^{−πiσ(ZΩ^{-1}ᵗZ)}``; a general
    positive definite M contributes ``det(M)^{−n/2}`` and moves inside the
    exponent, through the substitution ``u = M^{1/2}x``.

    ``det(Ω/i)^{1/2}`` is taken on the branch that is continuous on the Siegel
    upper half space and positive on ``Ω = iY``.

    Args:
        omega: n×n complex symmetric matrix with ``Im Ω ≻ 0``.
        z: m×n complex matrix.
        index: The matrix M; identity when omitted.

    Returns:
        The value of the integral.
    """
    w = omega.entries if isinstance(omega, ComplexSymMatrix) else np.atleast_2d(omega)
    w = np.asarray(w, dtype=complex)
    z = np.atleast_2d(np.asarray(z, dtype=complex))
    m, n = z.shape
    if w.shape != (n, n):
        raise DimensionError(f"Omega {w.shape!r} does not match Z {z.shape!r}")
    m_mat = np.eye(m) if index is None else index.matrix
    if m_mat.shape != (m, m):
        raise DimensionError(f"M {m_mat.shape!r} does not match Z {z.shape!r}")
    root = analytic_sqrt_det(-1j * w)
    w_inv = np.linalg.inv(w)
    phase = cmath.exp(-1j * np.pi * np.trace(m_mat @ z @ w_inv @ z.T))
    det_m = principal_half_power(float(np.linalg.det(m_mat)), -n)
    return det_m * root ** (-m) * phase


def sample(v: GaussianVector, spec: GridSpec) -> GridFunction:
    """Evaluate *v* on every grid point.

    Logs a warning when the samples on the outer layer exceed ``1e-14`` of the
    peak, since periodic wrap-around then stops being negligible.
    """
    if (spec.m, spec.n) != (v.m, v.n):
        raise DimensionError(f"grid for (m,n)={spec.m, spec.n} but vector has {v.m, v.n}")
    f = GridFunction(spec, v.evaluate(spec.mesh()))
    peak = float(np.max(np.abs(f.values)))
    boundary = f.boundary_magnitude()
    if peak > 0 and boundary > 1e-14 * peak:
        logger.warning(
            "Gaussian support overflows the grid: boundary/peak = %.2e", boundary / peak
        )
    return f
