"""Independent quadrature for Gaussian integrals and the σ transform.

Composite Gauss–Legendre on ``[−L, L]^{mn}``: the interval is cut into equal
panels and each panel gets the same Legendre rule.  Tensor products are only
formed for ``m·n ≤ 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from siegel_jacobi.config.tolerances import (
    GAUSSIAN_INTEGRAL_TOL,
    QUADRATURE_HALF_WIDTH,
    QUADRATURE_NODES_PER_PANEL,
    QUADRATURE_PANELS,
    TINY_MODULUS,
)
from siegel_jacobi.core.errors import DimensionError
from siegel_jacobi.core.linalg import principal_half_power
from siegel_jacobi.core.weil.gaussian import GaussianVector, gaussian_integral

_MAX_QUADRATURE_DIM = 2


@lru_cache(maxsize=8)
def composite_rule(
    half_width: float = QUADRATURE_HALF_WIDTH,
    panels: int = QUADRATURE_PANELS,
    nodes_per_panel: int = QUADRATURE_NODES_PER_PANEL,
) -> tuple[np.ndarray, np.ndarray]:
    """Return nodes and weights of the composite rule on ``[−L, L]``."""
    base_x, base_w = np.polynomial.legendre.leggauss(nodes_per_panel)
    edges = np.linspace(-half_width, half_width, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * base_x[None, :]).reshape(-1)
    weights = (half[:, None] * base_w[None, :]).reshape(-1)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _tensor_rule(m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes shaped ``(N, m, n)`` and their weights for the product rule."""
    dim = m * n
    if dim > _MAX_QUADRATURE_DIM:
        raise DimensionError(f"quadrature is limited to m·n <= {_MAX_QUADRATURE_DIM}, got {dim}")
    x, w = composite_rule()
    grids = np.meshgrid(*([x] * dim), indexing="ij")
    wgrids = np.meshgrid(*([w] * dim), indexing="ij")
    points = np.stack([g.reshape(-1) for g in grids], axis=-1).reshape(-1, m, n)
    weights = np.prod(np.stack([g.reshape(-1) for g in wgrids], axis=-1), axis=-1)
    return points, weights


def integrate(v: GaussianVector) -> complex:
    """Numerically integrate *v* over ℝ^(m,n)."""
    points, weights = _tensor_rule(v.m, v.n)
    return complex(np.sum(weights * v.evaluate(points)))


def quadrature_sigma(v: GaussianVector, x: np.ndarray) -> np.ndarray:
    """Evaluate ``(R(σ)v)(x)`` by quadrature.

    ``R(σ)f(x) = (1/i)^{mn/2}(det M)^{n/2} ∫ f(y) e^{−2πiσ(M y ᵗx)} dy``.

    Args:
        v: The Gaussian to transform.
        x: Evaluation points shaped ``(k, m, n)``.
    """
    points, weights = _tensor_rule(v.m, v.n)
    x = np.asarray(x, dtype=float).reshape(-1, v.m, v.n)
    m_mat = v.index.matrix
    kernel = np.exp(-2j * np.pi * np.einsum("rs,psj,qrj->qp", m_mat, points, x))
    integral = kernel @ (weights * v.evaluate(points))
    constant = principal_half_power(-1j, v.m * v.n) * principal_half_power(v.index.det, v.n)
    return constant * integral


@dataclass(frozen=True)
class GaussianIntegralCheck:
    """Closed form against quadrature for one Gaussian."""

    closed_form: complex
    quadrature: complex
    relative_error: float
    tolerance: float
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.relative_error <= self.tolerance


def check_gaussian_integral(
    v: GaussianVector,
    tolerance: float = GAUSSIAN_INTEGRAL_TOL,
) -> GaussianIntegralCheck:
    closed = v.prefactor * gaussian_integral(v.omega, v.z, v.index)
    numeric = integrate(v)
    error = abs(closed - numeric) / max(abs(closed), TINY_MODULUS)
    return GaussianIntegralCheck(closed, numeric, float(error), tolerance)
