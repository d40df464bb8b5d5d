"""Dense symmetric matrices, branch conventions and denominator determinants.

Square roots of constants use the branch with ``-π/2 < arg(z^{1/2}) <= π/2``
and half-integral powers are defined as ``z^{k/2} = (z^{1/2})^k``
(:func:`principal_half_power`).  Powers of ``det(CΩ + D)``, which depend on
Ω, go through :func:`sqrt_det_denominator` instead, whose branch is analytic
on the whole Siegel upper half space.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import TAU_PD_RELATIVE, TAU_SING
from siegel_jacobi.core.errors import DimensionError, DomainError, SingularDenominatorError


def _upper_mirror(a: np.ndarray) -> np.ndarray:
    """Return the matrix whose lower triangle mirrors the upper one of *a*."""
    upper = np.triu(a)
    out = upper + np.triu(a, 1).T
    out.setflags(write=False)
    return out


def require_square(a: np.ndarray, name: str = "matrix") -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {a.shape!r}")


@dataclass(frozen=True, eq=False)
class RealSymMatrix:
    """Real symmetric k×k matrix, stored with an exactly mirrored lower half."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=float, ndmin=2)
        require_square(a, "RealSymMatrix")
        object.__setattr__(self, "entries", _upper_mirror(a))

    @property
    def size(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class ComplexSymMatrix:
    """Complex symmetric n×n matrix (upper triangle is authoritative)."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=complex, ndmin=2)
        require_square(a, "ComplexSymMatrix")
        object.__setattr__(self, "entries", _upper_mirror(a))

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def imag(self) -> RealSymMatrix:
        return RealSymMatrix(self.entries.imag)

    @property
    def real(self) -> RealSymMatrix:
        return RealSymMatrix(self.entries.real)


def symmetrize(a: np.ndarray) -> np.ndarray:
    """Return ``(a + aᵀ)/2``."""
    return 0.5 * (a + a.T)


def is_positive_definite(s: RealSymMatrix | np.ndarray) -> bool:
    """Return ``True`` iff every eigenvalue exceeds ``TAU_PD_RELATIVE·‖S‖_max``.

    A zero matrix is never positive definite.
    """
    a = s.entries if isinstance(s, RealSymMatrix) else np.asarray(s, dtype=float)
    require_square(a, "S")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if scale == 0.0:
        return False
    eigenvalues = np.linalg.eigvalsh(symmetrize(a))
    return bool(eigenvalues.min() > TAU_PD_RELATIVE * scale)


def principal_sqrt(z: complex) -> complex:
    """Square root with ``-π/2 < arg <= π/2``.

    A negative real input with a signed-zero imaginary part is treated as
    lying on the upper side of the cut, so ``principal_sqrt(-1) == 1j``.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


def principal_half_power(z: complex, k: int) -> complex:
    """Return ``(z^{1/2})^k``.

    Args:
        z: Base of the power.
        k: Numerator of the exponent ``k/2``.

    Returns:
        The principal-branch value.  ``principal_half_power(z, 2)`` equals
        ``z`` up to rounding.

    Raises:
        DomainError: ``z == 0`` and ``k < 0``.
    """
    if z == 0:
        if k < 0:
            raise DomainError(f"0 raised to the negative power {k}/2")
        return complex(1.0) if k == 0 else complex(0.0)
    root = principal_sqrt(z)
    if k >= 0:
        return root**k
    return 1.0 / root ** (-k)


def det_symplectic_denominator(C: np.ndarray, D: np.ndarray, omega: np.ndarray) -> complex:
    """Return ``det(CΩ + D)`` (LU with partial pivoting through LAPACK).

    Raises:
        DimensionError: Blocks and Ω disagree in size.
        SingularDenominatorError: ``|det| < TAU_SING``.
    """
    omega = omega.entries if isinstance(omega, ComplexSymMatrix) else np.asarray(omega)
    if C.shape != omega.shape or D.shape != omega.shape:
        raise DimensionError(
            f"blocks {C.shape!r}/{D.shape!r} do not match Omega {omega.shape!r}"
        )
    value = complex(np.linalg.det(C @ omega + D))
    if abs(value) < TAU_SING:
        raise SingularDenominatorError(f"det(CΩ+D) = {value!r} is numerically zero")
    return value


_PATH_STEPS = 64
_MAX_PATH_STEPS = 1 << 14
# Largest change of arg det(CΩ + D) accepted between two path samples.
_MAX_PHASE_STEP = np.pi / 4.0


def _product_of_roots(a: np.ndarray) -> complex:
    return complex(np.prod(np.sqrt(np.linalg.eigvals(a).astype(complex))))


def sqrt_det_denominator(C: np.ndarray, D: np.ndarray, omega: np.ndarray) -> complex:
    """Square root of ``det(CΩ + D)`` on a branch analytic in Ω over H_n.

    For ``C = 0`` this is the principal root of ``det D``.  Otherwise the root
    starts at ``Ω = iI`` from the product of the principal roots of the
    eigenvalues of ``D + iC`` and is continued along the segment from ``iI`` to
    Ω.  For ``σ = (0, −I; I, 0)`` the value at ``iI`` is ``e^{πin/4}``, and for
    n = 1 the result is the principal root.

    Raises:
        DimensionError: Blocks and Ω disagree in size.
        SingularDenominatorError: ``|det(CΩ + D)| < TAU_SING``.
    """
    omega = omega.entries if isinstance(omega, ComplexSymMatrix) else np.asarray(omega)
    det = det_symplectic_denominator(C, D, omega)
    if not np.any(C):
        return principal_sqrt(det)
    n = omega.shape[0]
    start = 1j * np.eye(n)
    base = _product_of_roots(D + 1j * C)
    steps = _PATH_STEPS
    while True:
        t = np.linspace(0.0, 1.0, steps + 1)[:, None, None]
        path = (1.0 - t) * start + t * omega
        dets = np.linalg.det(np.einsum("ij,kjl->kil", C, path) + D)
        phases = np.unwrap(np.angle(dets))
        if np.max(np.abs(np.diff(phases))) <= _MAX_PHASE_STEP or steps >= _MAX_PATH_STEPS:
            break
        steps *= 2
    phase = 0.5 * (phases[-1] - phases[0]) + cmath.phase(base)
    return cmath.sqrt(abs(det)) * cmath.exp(1j * phase)


def analytic_sqrt_det(a: np.ndarray) -> complex:
    """Square root of ``det(a)`` for complex symmetric *a* with ``Re a ≻ 0``.

    The eigenvalues of such a matrix lie in the open right half plane, so the
    product of their principal square roots is the branch that is continuous
    on the whole cone and positive on real positive definite matrices.
    """
    return _product_of_roots(a)


def trace_product(*factors: np.ndarray) -> complex:
    """Return ``σ(F₁F₂…F_k)``, the trace of the matrix product."""
    product = factors[0]
    for f in factors[1:]:
        product = product @ f
    return complex(np.trace(product))
