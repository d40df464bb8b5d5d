"""Generator actions of the Schrödinger–Weil representation on sampled functions.

These are the numeric counterparts of :mod:`siegel_jacobi.core.weil.actions`
and exist to cross-check the closed forms:

- ``h`` shifts by whole grid steps and multiplies by the Schrödinger phase,
- ``t(b)`` multiplies by ``e^{πiσ(M x b ᵗx)}``,
- ``g(α)`` evaluates the trigonometric interpolant at ``xα`` (``m·n = 1``),
- ``σ`` is a trapezoidal Fourier transform, separable for diagonal M.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import GRID_CONSISTENCY_TOL
from siegel_jacobi.core.errors import DimensionError, GridPreconditionError
from siegel_jacobi.core.groups import Generator, GeneratorKind, HeisenbergElement
from siegel_jacobi.core.linalg import IndexMatrix, principal_half_power, symmetrize
from siegel_jacobi.core.schrodinger import (
    CentralCharacter,
    GridFunction,
    GridSpec,
    parity,
    schrodinger_apply,
)
from siegel_jacobi.core.weil.actions import apply_letter
from siegel_jacobi.core.weil.gaussian import GaussianVector, sample

logger = logging.getLogger(__name__)


def grid_heisenberg(
    index: IndexMatrix,
    t: complex,
    h: HeisenbergElement,
    f: GridFunction,
) -> GridFunction:
    shifted = schrodinger_apply(CentralCharacter(index.entries), h, f)
    return shifted.with_values(complex(t) * shifted.values)


def grid_tb(index: IndexMatrix, b: np.ndarray, f: GridFunction) -> GridFunction:
    b = symmetrize(np.array(b, dtype=float, ndmin=2))
    x = f.spec.mesh()
    phase = np.exp(1j * np.pi * np.einsum("rs,...sj,jk,...rk->...", index.matrix, x, b, x))
    return f.with_values(phase * f.values)


def grid_galpha(index: IndexMatrix, alpha: np.ndarray, f: GridFunction) -> GridFunction:
    """Return ``(det α)^{m/2} f(xα)`` by spectral interpolation.

    Targets leaving ``[−L, L)`` are set to zero rather than wrapped.

    Raises:
        GridPreconditionError: ``m·n != 1``.
    """
    spec = f.spec
    if spec.dim != 1:
        raise GridPreconditionError("numeric g(alpha) is implemented for m·n = 1 only")
    a = float(np.asarray(alpha, dtype=float).reshape(-1)[0])
    count = spec.points_per_axis
    period = 2.0 * spec.half_width
    coefficients = np.fft.fft(f.values) / count
    freqs = np.fft.fftfreq(count, d=1.0 / count)
    targets = spec.axis * a
    modes = np.exp(2j * np.pi * np.outer(targets + spec.half_width, freqs) / period)
    values = modes @ coefficients
    values[np.abs(targets) >= spec.half_width] = 0.0
    return f.with_values(principal_half_power(a, index.m) * values)


def grid_sigma(index: IndexMatrix, f: GridFunction) -> GridFunction:
    """Trapezoidal ``(1/i)^{mn/2}(det M)^{n/2} ∫ f(y) e^{−2πiσ(M y ᵗx)} dy``.

    Raises:
        GridPreconditionError: M is not diagonal or ``m·n > 2``.
    """
    spec = f.spec
    m_mat = index.matrix
    if np.any(m_mat - np.diag(np.diag(m_mat))):
        raise GridPreconditionError("numeric sigma needs a diagonal index matrix")
    if spec.dim > 2:
        raise GridPreconditionError(f"numeric sigma is limited to m·n <= 2, got {spec.dim}")
    axis = spec.axis
    values = f.values
    for ax in range(spec.dim):
        row = ax // spec.n
        kernel = np.exp(-2j * np.pi * m_mat[row, row] * np.outer(axis, axis)) * spec.spacing
        values = np.moveaxis(np.tensordot(kernel, values, axes=([1], [ax])), 0, ax)
    constant = principal_half_power(-1j, spec.dim) * principal_half_power(index.det, spec.n)
    return f.with_values(constant * values)


def grid_apply_letter(index: IndexMatrix, letter: Generator, f: GridFunction) -> GridFunction:
    match letter.kind:
        case GeneratorKind.HEISENBERG:
            return grid_heisenberg(index, 1.0, letter.heisenberg, f)
        case GeneratorKind.TRANSLATION:
            return grid_tb(index, letter.matrix, f)
        case GeneratorKind.LINEAR:
            return grid_galpha(index, letter.matrix, f)
        case GeneratorKind.INVERSION:
            return grid_sigma(index, f)
    raise DimensionError(f"unknown generator kind {letter.kind!r}")


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridConsistencyCheck:
    """Closed-form action against the numeric one for a single letter."""

    letter: str
    relative_error: float
    parity_error: float
    tolerance: float
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.relative_error <= self.tolerance and self.parity_error <= self.tolerance


def check_grid_consistency(
    letter: Generator,
    v: GaussianVector,
    spec: GridSpec,
    tolerance: float = GRID_CONSISTENCY_TOL,
) -> GridConsistencyCheck:
    """Compare ``sample(R(x)v)`` with ``R_grid(x)(sample(v))``.

    For symplectic letters the numeric action must also commute with parity,
    which is what splits the representation into even and odd parts.
    """
    f = sample(v, spec)
    closed = sample(apply_letter(letter, v), spec)
    numeric = grid_apply_letter(v.index, letter, f)
    norm = f.norm()
    error = closed.distance(numeric) / norm
    parity_error = 0.0
    if letter.kind is not GeneratorKind.HEISENBERG:
        flipped = grid_apply_letter(v.index, letter, parity(f))
        parity_error = flipped.distance(parity(numeric)) / norm
    logger.debug(
        "grid consistency for %s: action %.3e, parity %.3e",
        letter.kind.value,
        error,
        parity_error,
    )
    return GridConsistencyCheck(letter.kind.value, float(error), float(parity_error), tolerance)
