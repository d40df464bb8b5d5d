"""Fourier coefficients of Jacobi forms of degree one by sampling on a torus.

A function with the periodicities ``Ω ↦ Ω + λ_Γ`` and ``Z ↦ Z + μ`` (μ integral)
expands as

    f(Ω, Z) = Σ_{T, R} c(T, R)·e^{2πiTΩ/λ_Γ}·e^{2πiR·Z}.

Sampling ``Re Ω`` and every coordinate of ``Re Z`` at N equispaced points of
one period, at fixed heights ``Im Ω = y`` and ``Im Z = v``, the normalized
DFT returns ``c(T, R)·e^{−2π(Ty/λ_Γ + R·v)}`` plus aliases from indices
congruent mod N, so

    c(T, R) ≈ DFT[T mod N, R mod N]·e^{2π(Ty/λ_Γ + R·v)}.

T is resolved in ``[0, N)`` and each entry of R in ``[−N/2, N/2)``.  The
accuracy of a coefficient is the sampling floor plus a caller-supplied bound
on the aliased terms of one slot (for Θ_M see
:func:`~siegel_jacobi.core.theta.theta_aliasing_bound`), both scaled by
``e^{2π(Ty/λ_Γ + R·v)}``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import (
    DEFAULT_DFT_SAMPLES,
    DEFAULT_FOURIER_IMAG_OMEGA,
    DEFAULT_FOURIER_IMAG_Z,
)
from siegel_jacobi.core.errors import AliasingError, DomainError
from siegel_jacobi.core.groups import SiegelJacobiPoint
from siegel_jacobi.core.jacobi_forms.slash import JacobiFunction
from siegel_jacobi.core.linalg import RealSymMatrix

logger = logging.getLogger(__name__)

_ROUNDOFF = 1e-16


@dataclass(frozen=True)
class FourierIndex:
    """An index ``(T, R)`` of a degree-one Fourier expansion.

    Attributes:
        t: The 1×1 half-integral matrix T, stored as its entry.
        r: The integral 1×m row R.
        lambda_gamma: The period of ``Re Ω``.
    """

    t: int
    r: tuple[int, ...]
    lambda_gamma: int = 1

    def __post_init__(self) -> None:
        if self.t < 0:
            raise DomainError(f"T must be positive semidefinite, got {self.t}")
        if self.lambda_gamma < 1:
            raise DomainError(f"lambda_gamma must be a positive integer, got {self.lambda_gamma}")

    @property
    def T(self) -> RealSymMatrix:
        return RealSymMatrix(np.array([[float(self.t)]]))

    @property
    def R(self) -> np.ndarray:
        return np.array([self.r], dtype=float)


@dataclass(frozen=True)
class FourierTable:
    """Extracted coefficients with a per-coefficient accuracy estimate."""

    coefficients: dict[FourierIndex, complex]
    accuracy: dict[FourierIndex, float]
    samples: int
    imag_omega: float
    imag_z: float
    tolerance: float
    aliasing: float = 0.0
    asserted: bool = False

    @property
    def passed(self) -> bool:
        return all(a <= self.tolerance for a in self.accuracy.values())


def _sample_points(
    m: int,
    samples: int,
    lambda_gamma: int,
    imag_omega: float,
    imag_z: float,
) -> list[SiegelJacobiPoint]:
    """Sampling points in C order over ``(a, b_1, …, b_m)``."""
    grid = np.stack(
        np.meshgrid(*([np.arange(samples)] * (m + 1)), indexing="ij"), axis=-1
    ).reshape(-1, m + 1)
    points = []
    for row in grid:
        omega = lambda_gamma * row[0] / samples + 1j * imag_omega
        z = (row[1:] / samples + 1j * imag_z).reshape(m, 1)
        points.append(SiegelJacobiPoint.of(omega, z))
    return points


def fourier_coefficients(
    f: JacobiFunction,
    m: int,
    box: Sequence[FourierIndex],
    samples: int = DEFAULT_DFT_SAMPLES,
    imag_omega: float = DEFAULT_FOURIER_IMAG_OMEGA,
    imag_z: float = DEFAULT_FOURIER_IMAG_Z,
    sample_accuracy: float = 1e-12,
    tolerance: float = 1e-6,
    max_workers: int = 1,
    aliasing: float = 0.0,
) -> FourierTable:
    """Extract ``c(T, R)`` for every index in *box* (n = 1).

    Args:
        f: The function, periodic in ``Re Ω`` (period λ_Γ) and ``Re Z`` (period 1).
        m: Number of rows of Z.
        box: The requested indices; they must share one λ_Γ.
        samples: N, the number of samples per real period and axis.
        imag_omega: Fixed ``Im Ω`` of the samples.
        imag_z: Fixed imaginary part of every entry of Z.
        sample_accuracy: Absolute accuracy of one evaluation of f.
        tolerance: Largest accuracy estimate accepted for a coefficient.
        max_workers: Threads used to evaluate f.
        aliasing: Bound on the sum of the aliased terms in any one DFT slot,
            at the sampling heights.

    Raises:
        AliasingError: An index lies outside the resolvable range or its
            accuracy estimate exceeds *tolerance*.
    """
    if not box:
        raise DomainError("no Fourier indices requested")
    lambdas = {idx.lambda_gamma for idx in box}
    if len(lambdas) != 1:
        raise DomainError(f"indices mix lambda_gamma values {sorted(lambdas)}")
    lambda_gamma = lambdas.pop()
    for idx in box:
        if len(idx.r) != m:
            raise DomainError(f"R of length {len(idx.r)} for m={m}")
        if idx.t >= samples or any(not -samples // 2 <= r < samples // 2 for r in idx.r):
            raise AliasingError(
                f"index (T={idx.t}, R={idx.r}) is not resolvable with N={samples}"
            )

    points = _sample_points(m, samples, lambda_gamma, imag_omega, imag_z)
    if max_workers <= 1:
        values = [f(p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            values = list(executor.map(f, points))
    grid = np.asarray(values, dtype=complex).reshape((samples,) * (m + 1))
    spectrum = np.fft.fftn(grid) / grid.size
    floor = sample_accuracy + _ROUNDOFF * float(np.max(np.abs(grid))) * math.sqrt(grid.size)
    logger.debug(
        "Fourier sampling: %d points, accuracy floor %.3e, aliasing %.3e",
        grid.size,
        floor,
        aliasing,
    )

    coefficients: dict[FourierIndex, complex] = {}
    accuracy: dict[FourierIndex, float] = {}
    for idx in box:
        growth = 2.0 * math.pi * (idx.t * imag_omega / lambda_gamma + sum(idx.r) * imag_z)
        slot = (idx.t % samples, *(r % samples for r in idx.r))
        estimate = (floor + aliasing) * math.exp(growth)
        if estimate > tolerance:
            raise AliasingError(
                f"coefficient (T={idx.t}, R={idx.r}) only resolvable to {estimate:.2e}"
            )
        coefficients[idx] = complex(spectrum[slot] * math.exp(growth))
        accuracy[idx] = estimate
    return FourierTable(
        coefficients, accuracy, samples, imag_omega, imag_z, tolerance, aliasing
    )
