"""Generators of Sp(n, ℝ) and G^J.

Sp(n, ℝ) is generated by

- ``t₀(b) = [[I, b], [0, I]]`` for real symmetric b,
- ``g₀(α) = [[ᵗα, 0], [0, α^{-1}]]`` for invertible α,
- ``σ_{n,0} = [[0, −I], [I, 0]]``,

and G^J by those together with the Heisenberg elements ``h(λ, μ; κ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from siegel_jacobi.config.tolerances import TAU_SING
from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.groups.model import (
    HeisenbergElement,
    JacobiElement,
    SymplecticElement,
)
from siegel_jacobi.core.linalg import symmetrize


class GeneratorKind(Enum):
    """The four kinds of generator of G^J."""

    HEISENBERG = "h"
    TRANSLATION = "t"
    LINEAR = "g"
    INVERSION = "sigma"


def t0(b: np.ndarray) -> SymplecticElement:
    b = np.array(b, dtype=float, ndmin=2)
    n = b.shape[0]
    if b.shape != (n, n):
        raise DimensionError(f"b must be square, got {b.shape!r}")
    return SymplecticElement(np.eye(n), symmetrize(b), np.zeros((n, n)), np.eye(n))


def g0(alpha: np.ndarray) -> SymplecticElement:
    alpha = np.array(alpha, dtype=float, ndmin=2)
    n = alpha.shape[0]
    if alpha.shape != (n, n):
        raise DimensionError(f"alpha must be square, got {alpha.shape!r}")
    if abs(np.linalg.det(alpha)) < TAU_SING:
        raise DomainError("alpha is singular")
    zero = np.zeros((n, n))
    return SymplecticElement(alpha.T, zero, zero, np.linalg.inv(alpha))


def sigma0(n: int) -> SymplecticElement:
    eye, zero = np.eye(n), np.zeros((n, n))
    return SymplecticElement(zero, -eye, eye, zero)


def generators(
    n: int,
    kind: GeneratorKind | str,
    data: np.ndarray | None = None,
) -> SymplecticElement:
    """Return the named symplectic generator of degree *n*.

    Args:
        n: Degree of Sp(n, ℝ).
        kind: ``t``, ``g`` or ``sigma``.
        data: ``b`` for ``t`` and ``α`` for ``g``; ignored for ``sigma``.

    Raises:
        DomainError: α is singular or the kind has no symplectic part.
    """
    kind = GeneratorKind(kind)
    if kind is GeneratorKind.INVERSION:
        return sigma0(n)
    if kind is GeneratorKind.TRANSLATION:
        return t0(np.zeros((n, n)) if data is None else data)
    if kind is GeneratorKind.LINEAR:
        return g0(np.eye(n) if data is None else data)
    raise DomainError("Heisenberg generators have no symplectic part")


@dataclass(frozen=True, eq=False)
class Generator:
    """One letter of a generator word.

    Attributes:
        kind: Which of the four families the letter belongs to.
        heisenberg: The element for ``h(λ; μ; κ)``.
        matrix: ``b`` for ``t(b)`` or ``α`` for ``g(α)``.
    """

    kind: GeneratorKind
    heisenberg: HeisenbergElement | None = None
    matrix: np.ndarray | None = None

    @classmethod
    def h(cls, lam: np.ndarray, mu: np.ndarray, kappa: np.ndarray) -> Generator:
        return cls(GeneratorKind.HEISENBERG, heisenberg=HeisenbergElement(lam, mu, kappa))

    @classmethod
    def t(cls, b: np.ndarray) -> Generator:
        return cls(GeneratorKind.TRANSLATION, matrix=symmetrize(np.array(b, float, ndmin=2)))

    @classmethod
    def g(cls, alpha: np.ndarray) -> Generator:
        return cls(GeneratorKind.LINEAR, matrix=np.array(alpha, float, ndmin=2))

    @classmethod
    def sigma(cls) -> Generator:
        return cls(GeneratorKind.INVERSION)

    def to_jacobi(self, n: int, m: int) -> JacobiElement:
        """Embed the letter into G^J for the given dimensions."""
        if self.kind is GeneratorKind.HEISENBERG:
            h = self.heisenberg
            if (h.n, h.m) != (n, m):
                raise DimensionError(f"h of (n,m)={h.n, h.m} used with {n, m}")
            return JacobiElement(SymplecticElement.identity(n), h)
        if self.matrix is not None and self.matrix.shape != (n, n):
            raise DimensionError(
                f"{self.kind.value}-matrix of shape {self.matrix.shape!r} for n={n}"
            )
        g = generators(n, self.kind, self.matrix)
        return JacobiElement(g, HeisenbergElement.identity(m, n))
