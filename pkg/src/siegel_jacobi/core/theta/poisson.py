"""Poisson summation for Gaussian vectors.

For ``v(x) = c·e^{πiσ(M(xΩᵗx + 2xᵗZ))}`` the Fourier transform
``v̂(ξ) = ∫ v(x) e^{−2πiσ(xᵗξ)} dx`` is again a Gaussian, of index ``M^{-1}``:

    v̂ = c·(det M)^{−n/2}·det(Ω/i)^{−m/2}·e^{−πiσ(MZΩ^{-1}ᵗZ)}
        · e^{πiσ(M^{-1}(ξ(−Ω^{-1})ᵗξ + 2ξ ᵗ(MZΩ^{-1})))},

and ``Σ_ξ v(ξ) = Σ_ξ v̂(ξ)`` over ℤ^(m,n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import DEFAULT_THETA_EPS, POISSON_TOL, TINY_MODULUS
from siegel_jacobi.core.theta.series import ThetaEvaluation, gaussian_lattice_sum
from siegel_jacobi.core.weil import GaussianVector, gaussian_integral

logger = logging.getLogger(__name__)


def fourier_dual(v: GaussianVector) -> GaussianVector:
    """Return v̂ as a Gaussian vector of index ``M^{-1}``."""
    w_inv = np.linalg.inv(v.omega_array)
    m_mat = v.index.matrix
    prefactor = v.prefactor * gaussian_integral(v.omega, v.z, v.index)
    return GaussianVector(prefactor, -w_inv, m_mat @ v.z @ w_inv, v.index.inverse())


@dataclass(frozen=True)
class PoissonReport:
    """Both sides of the Poisson summation formula for one Gaussian."""

    lhs: ThetaEvaluation
    rhs: ThetaEvaluation
    tolerance: float
    asserted: bool = True

    @property
    def rel_error(self) -> float:
        return abs(self.lhs.value - self.rhs.value) / max(abs(self.lhs.value), TINY_MODULUS)

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tolerance


def poisson_check(
    v: GaussianVector,
    eps: float = DEFAULT_THETA_EPS,
    tolerance: float = POISSON_TOL,
) -> PoissonReport:
    lhs = gaussian_lattice_sum(v, eps)
    rhs = gaussian_lattice_sum(fourier_dual(v), eps)
    report = PoissonReport(lhs, rhs, tolerance)
    logger.debug("Poisson: lhs=%s rhs=%s rel=%.3e", lhs.value, rhs.value, report.rel_error)
    return report
