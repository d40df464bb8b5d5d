"""Closed-form action of the Schrödinger–Weil representation on Gaussians.

Each generator maps a Gaussian vector to another one, so the action is a
rewrite of ``(c, Ω, Z)``:

- ``h(λ, μ; κ)`` with central scalar t: ``Z ↦ Z + λΩ + μ`` and
  ``c ↦ c·t·e^{πiσ(M(κ + μᵗλ))}·e^{πiσ(M(λΩᵗλ + 2λᵗZ))}``
- ``t(b)``: ``Ω ↦ Ω + b``
- ``g(α)``: ``Ω ↦ ᵗαΩα``, ``Z ↦ Zα``, ``c ↦ c·(det α)^{m/2}``
- ``σ``: ``Ω ↦ −Ω^{-1}``, ``Z ↦ ZΩ^{-1}``,
  ``c ↦ c·(det Ω)^{−m/2}·e^{−πiσ(MZΩ^{-1}ᵗZ)}``

``(det α)^{m/2}`` uses the principal branch and ``(det Ω)^{−m/2}`` the branch of
:func:`~siegel_jacobi.core.linalg.sqrt_det_denominator`, which equals
``e^{−πimn/4}·det(−iΩ)^{−m/2}`` with the root positive on ``Ω = iY``.
"""

from __future__ import annotations

import cmath
import logging
from collections.abc import Sequence

import numpy as np

from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.groups import Generator, GeneratorKind, HeisenbergElement
from siegel_jacobi.core.linalg import principal_half_power, sqrt_det_denominator, symmetrize
from siegel_jacobi.core.weil.gaussian import GaussianVector

logger = logging.getLogger(__name__)


def act_heisenberg(t: complex, h: HeisenbergElement, v: GaussianVector) -> GaussianVector:
    """Apply ``(h, t)`` of H^(n,m) × ℂ* through the Schrödinger representation W_M."""
    if (h.m, h.n) != (v.m, v.n):
        raise DimensionError(f"h of (m,n)={h.m, h.n} acting on a Gaussian of {v.m, v.n}")
    m_mat = v.index.matrix
    w = v.omega_array
    central = np.trace(m_mat @ (h.kappa + h.mu @ h.lam.T))
    quadratic = np.trace(m_mat @ (h.lam @ w @ h.lam.T + 2.0 * h.lam @ v.z.T))
    prefactor = v.prefactor * complex(t) * cmath.exp(1j * np.pi * (central + quadratic))
    return v.replace(prefactor=prefactor, z=v.z + h.lam @ w + h.mu)


def act_tb(b: np.ndarray, v: GaussianVector) -> GaussianVector:
    b = symmetrize(np.array(b, dtype=float, ndmin=2))
    if b.shape != (v.n, v.n):
        raise DimensionError(f"b {b.shape!r} for n={v.n}")
    return v.replace(omega=v.omega_array + b)


def act_galpha(alpha: np.ndarray, v: GaussianVector) -> GaussianVector:
    alpha = np.array(alpha, dtype=float, ndmin=2)
    if alpha.shape != (v.n, v.n):
        raise DimensionError(f"alpha {alpha.shape!r} for n={v.n}")
    det = float(np.linalg.det(alpha))
    if det == 0.0:
        raise DomainError("alpha is singular")
    return v.replace(
        prefactor=v.prefactor * principal_half_power(det, v.m),
        omega=alpha.T @ v.omega_array @ alpha,
        z=v.z @ alpha,
    )


def act_sigma(v: GaussianVector) -> GaussianVector:
    w = v.omega_array
    w_inv = np.linalg.inv(w)
    root = sqrt_det_denominator(np.eye(v.n), np.zeros((v.n, v.n)), w)
    exponent = -1j * np.pi * np.trace(v.index.matrix @ v.z @ w_inv @ v.z.T)
    return v.replace(
        prefactor=v.prefactor * root ** (-v.m) * cmath.exp(exponent),
        omega=-w_inv,
        z=v.z @ w_inv,
    )


def apply_letter(letter: Generator, v: GaussianVector, t: complex = 1.0) -> GaussianVector:
    """Apply one generator; *t* is the central scalar used by ``h`` letters."""
    match letter.kind:
        case GeneratorKind.HEISENBERG:
            return act_heisenberg(t, letter.heisenberg, v)
        case GeneratorKind.TRANSLATION:
            return act_tb(letter.matrix, v)
        case GeneratorKind.LINEAR:
            return act_galpha(letter.matrix, v)
        case GeneratorKind.INVERSION:
            return act_sigma(v)
    raise DomainError(f"unknown generator kind {letter.kind!r}")


def apply_word(word: Sequence[Generator], v: GaussianVector) -> GaussianVector:
    """Apply ``R(x₁…x_k)`` as ``R(x₁)(…(R(x_k)v))``, rightmost letter first."""
    for letter in reversed(word):
        v = apply_letter(letter, v)
    logger.debug("applied word of length %d, prefactor now %s", len(word), v.prefactor)
    return v
