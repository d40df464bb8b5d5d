"""The Schrödinger representation W_c of H^(n,m) on grid functions.

W_c is induced from the character ``χ_c((0, μ; κ)) = e^{πiσ(cκ)}`` of the
abelian subgroup L = {(0, μ; κ)} and acts by

    (W_c(h₀)f)(λ) = e^{πiσ(c(κ₀ + μ₀ᵗλ₀ + 2λᵗμ₀))} f(λ + λ₀).

Translations must be whole grid steps; samples leaving the window wrap
around periodically.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import HOMOMORPHISM_TOL
from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.groups import HeisenbergElement, heisenberg_mul
from siegel_jacobi.core.linalg import RealSymMatrix
from siegel_jacobi.core.schrodinger.grid import GridFunction, GridSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CentralCharacter:
    """The nonzero symmetric m×m matrix c labelling W_c."""

    c: RealSymMatrix

    def __post_init__(self) -> None:
        if not isinstance(self.c, RealSymMatrix):
            object.__setattr__(self, "c", RealSymMatrix(self.c))
        if not np.any(self.c.entries):
            raise DomainError("the central character needs c != 0")

    @property
    def matrix(self) -> np.ndarray:
        return self.c.entries


def mackey_decompose(h: HeisenbergElement) -> tuple[HeisenbergElement, HeisenbergElement]:
    """Split ``h = l_h ∘ s_h`` with ``l_h = (0, μ; κ+μᵗλ)`` and ``s_h = (λ, 0; 0)``."""
    zeros = np.zeros_like(h.lam)
    l_part = HeisenbergElement(zeros, h.mu, h.kappa + h.mu @ h.lam.T)
    s_part = HeisenbergElement(h.lam, zeros, np.zeros_like(h.kappa))
    return l_part, s_part


def central_character(c: CentralCharacter, h: HeisenbergElement) -> complex:
    """Return ``χ_c(h) = e^{πiσ(cκ)}`` for h in L.

    Raises:
        DomainError: ``λ != 0``.
    """
    if np.any(h.lam):
        raise DomainError("the central character is defined on L = {(0, mu; kappa)} only")
    return cmath.exp(1j * np.pi * np.trace(c.matrix @ h.kappa))


def schrodinger_phase(c: np.ndarray, h0: HeisenbergElement, points: np.ndarray) -> np.ndarray:
    """Phase ``e^{πiσ(c(κ₀ + μ₀ᵗλ₀ + 2λᵗμ₀))}`` on points of shape ``(..., m, n)``."""
    constant = np.trace(c @ (h0.kappa + h0.mu @ h0.lam.T))
    linear = 2.0 * np.einsum("...ij,ij->...", points, c @ h0.mu)
    return np.exp(1j * np.pi * (constant + linear))


def schrodinger_apply(c: CentralCharacter, h0: HeisenbergElement, f: GridFunction) -> GridFunction:
    """Return ``W_c(h₀)f``.

    Raises:
        GridPreconditionError: ``λ₀`` is not a whole number of grid steps.
        DimensionError: ``h₀`` and the grid disagree on (m, n).
    """
    spec = f.spec
    if (h0.m, h0.n) != (spec.m, spec.n) or c.matrix.shape != (spec.m, spec.m):
        raise DimensionError(
            f"h of (m,n)={h0.m, h0.n} and c {c.matrix.shape!r} on a grid of {spec.m, spec.n}"
        )
    steps = spec.grid_steps(h0.lam)
    shifted = np.roll(f.values, tuple(-steps), axis=tuple(range(spec.dim)))
    return f.with_values(schrodinger_phase(c.matrix, h0, spec.mesh()) * shifted)


# ---------------------------------------------------------------------------
# Homomorphism and unitarity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepresentationCheck:
    """Outcome of comparing ``W(h₁∘h₂)f`` with ``W(h₁)W(h₂)f``."""

    homomorphism_error: float
    unitarity_error: float
    tolerance: float
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.homomorphism_error <= self.tolerance and self.unitarity_error <= 1e-12


def check_homomorphism(
    c: CentralCharacter,
    h1: HeisenbergElement,
    h2: HeisenbergElement,
    f: GridFunction,
    tolerance: float = HOMOMORPHISM_TOL,
) -> RepresentationCheck:
    """Measure the homomorphism and unitarity defects on one pair."""
    norm = f.norm()
    composite = schrodinger_apply(c, heisenberg_mul(h1, h2), f)
    stepwise = schrodinger_apply(c, h1, schrodinger_apply(c, h2, f))
    hom = composite.distance(stepwise) / norm
    unit = abs(schrodinger_apply(c, h1, f).norm() - norm) / norm
    logger.debug("Schrödinger homomorphism defect %.3e, unitarity defect %.3e", hom, unit)
    return RepresentationCheck(hom, unit, tolerance)


def random_grid_heisenberg(
    rng: np.random.Generator,
    spec: GridSpec,
    max_steps: int = 32,
) -> HeisenbergElement:
    """Draw a Heisenberg element whose λ is a whole number of grid steps."""
    m, n = spec.m, spec.n
    lam = spec.spacing * rng.integers(-max_steps, max_steps + 1, size=(m, n))
    mu = rng.uniform(-1.0, 1.0, size=(m, n))
    s = rng.uniform(-1.0, 1.0, size=(m, m))
    s = np.triu(s) + np.triu(s, 1).T
    return HeisenbergElement(lam, mu, s - mu @ lam.T)
