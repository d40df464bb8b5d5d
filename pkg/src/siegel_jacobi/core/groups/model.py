"""Data model for the Heisenberg, symplectic and Jacobi groups.

This module defines the element types and the points of the Siegel–Jacobi
space they act on:

- :class:`HeisenbergElement`: ``(λ, μ; κ)`` with ``κ + μᵗλ`` symmetric
- :class:`SymplecticElement`: blocks ``(A, B; C, D)`` with ``ᵗg J g = J``
- :class:`JacobiElement`: a pair ``(g, h)`` of the two above
- :class:`SiegelJacobiPoint`: ``(Ω, Z)`` with ``Im Ω ≻ 0``

Every array held by these types is a read-only copy, so instances can be
shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import HEISENBERG_SYMMETRY_TOL, SYMPLECTIC_TOL
from siegel_jacobi.core.errors import DimensionError, DomainError
from siegel_jacobi.core.linalg import ComplexSymMatrix, is_positive_definite


def _frozen(a: np.ndarray | float | list, dtype: type = float) -> np.ndarray:
    out = np.array(a, dtype=dtype, ndmin=2, copy=True)
    out.setflags(write=False)
    return out


def standard_symplectic_form(n: int) -> np.ndarray:
    """Return ``J_n = [[0, I], [-I, 0]]``."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


@dataclass(frozen=True, eq=False)
class HeisenbergElement:
    """An element ``(λ, μ; κ)`` of the real Heisenberg group H^(n,m).

    ``lam`` and ``mu`` are m×n, ``kappa`` is m×m and ``kappa + mu @ lam.T``
    must be symmetric.
    """

    lam: np.ndarray
    mu: np.ndarray
    kappa: np.ndarray

    def __post_init__(self) -> None:
        lam, mu, kappa = _frozen(self.lam), _frozen(self.mu), _frozen(self.kappa)
        if lam.shape != mu.shape:
            raise DimensionError(f"lambda {lam.shape!r} and mu {mu.shape!r} differ")
        m = lam.shape[0]
        if kappa.shape != (m, m):
            raise DimensionError(f"kappa must be {m}x{m}, got {kappa.shape!r}")
        s = kappa + mu @ lam.T
        scale = max(1.0, float(np.max(np.abs(kappa))), float(np.max(np.abs(mu @ lam.T))))
        if np.max(np.abs(s - s.T)) > HEISENBERG_SYMMETRY_TOL * scale:
            raise DomainError("kappa + mu·ᵗlambda is not symmetric")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "kappa", kappa)

    @classmethod
    def identity(cls, m: int, n: int) -> HeisenbergElement:
        return cls(np.zeros((m, n)), np.zeros((m, n)), np.zeros((m, m)))

    @property
    def m(self) -> int:
        return self.lam.shape[0]

    @property
    def n(self) -> int:
        return self.lam.shape[1]

    def allclose(self, other: HeisenbergElement, atol: float = 1e-10) -> bool:
        return (
            self.lam.shape == other.lam.shape
            and np.allclose(self.lam, other.lam, rtol=0.0, atol=atol)
            and np.allclose(self.mu, other.mu, rtol=0.0, atol=atol)
            and np.allclose(self.kappa, other.kappa, rtol=0.0, atol=atol)
        )


@dataclass(frozen=True, eq=False)
class SymplecticElement:
    """An element of Sp(n, ℝ) in block form."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray

    def __post_init__(self) -> None:
        blocks = [_frozen(x) for x in (self.A, self.B, self.C, self.D)]
        n = blocks[0].shape[0]
        if any(b.shape != (n, n) for b in blocks):
            raise DimensionError(f"symplectic blocks must all be {n}x{n}")
        for name, b in zip("ABCD", blocks):
            object.__setattr__(self, name, b)
        g = self.matrix
        j = standard_symplectic_form(n)
        scale = max(1.0, float(np.max(np.abs(g))) ** 2)
        if np.max(np.abs(g.T @ j @ g - j)) > SYMPLECTIC_TOL * scale:
            raise DomainError("matrix is not symplectic: ᵗgJg != J")

    @classmethod
    def from_matrix(cls, g: np.ndarray) -> SymplecticElement:
        g = np.asarray(g, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] % 2:
            raise DimensionError(f"expected a 2n×2n matrix, got {g.shape!r}")
        n = g.shape[0] // 2
        return cls(g[:n, :n], g[:n, n:], g[n:, :n], g[n:, n:])

    @classmethod
    def identity(cls, n: int) -> SymplecticElement:
        eye, zero = np.eye(n), np.zeros((n, n))
        return cls(eye, zero, zero, eye)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.A, self.B], [self.C, self.D]])


@dataclass(frozen=True, eq=False)
class JacobiElement:
    """An element ``(g, (λ, μ; κ))`` of G^J = Sp(n, ℝ) ⋉ H^(n,m)."""

    g: SymplecticElement
    h: HeisenbergElement

    def __post_init__(self) -> None:
        if self.g.n != self.h.n:
            raise DimensionError(f"Sp({self.g.n}) paired with Heisenberg of n={self.h.n}")

    @classmethod
    def identity(cls, n: int, m: int) -> JacobiElement:
        return cls(SymplecticElement.identity(n), HeisenbergElement.identity(m, n))

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return self.h.m


@dataclass(frozen=True, eq=False)
class SiegelJacobiPoint:
    """A point ``(Ω, Z)`` of H_n × ℂ^(m,n)."""

    omega: ComplexSymMatrix
    z: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.omega, ComplexSymMatrix):
            object.__setattr__(self, "omega", ComplexSymMatrix(self.omega))
        z = _frozen(self.z, dtype=complex)
        if z.shape[1] != self.omega.size:
            raise DimensionError(
                f"Z has {z.shape[1]} columns but Omega has size {self.omega.size}"
            )
        if not is_positive_definite(self.omega.imag):
            raise DomainError("Im Omega is not positive definite")
        object.__setattr__(self, "z", z)

    @classmethod
    def of(
        cls,
        omega: np.ndarray | complex | list,
        z: np.ndarray | complex | list,
    ) -> SiegelJacobiPoint:
        return cls(ComplexSymMatrix(np.array(omega, dtype=complex, ndmin=2)), z)

    @property
    def n(self) -> int:
        return self.omega.size

    @property
    def m(self) -> int:
        return self.z.shape[0]

    @property
    def omega_array(self) -> np.ndarray:
        return self.omega.entries
