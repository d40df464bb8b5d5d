"""Machine verification of the covariance relation and of the cocycle law.

The covariance relation

    ω_M(x)F_{Ω,Z} = J_M(x, (Ω, Z))^{-1} F_{x·(Ω,Z)}

is checked by applying the generator actions to ``F_{Ω,Z}`` and comparing the
resulting Gaussian with the right-hand side component by component.  Both
sides are Gaussians with identical Ω and Z when the relation holds, so the
only freedom left is the ratio s of the prefactors:

- a single generator must give ``s = 1``, except ``g(α)`` with ``det α < 0``
  where the principal branch forces ``s = (−1)^m``;
- a longer word passes when ``|s⁸ − 1|`` is small.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import COVARIANCE_TOL, EIGHTH_ROOT_TOL
from siegel_jacobi.core.covariance.factor import automorphic_factor_J, covariant_vector
from siegel_jacobi.core.groups import (
    Generator,
    GeneratorKind,
    JacobiElement,
    SiegelJacobiPoint,
    act_jacobi,
    format_word,
    jacobi_mul,
    word_element,
)
from siegel_jacobi.core.linalg import IndexMatrix
from siegel_jacobi.core.weil import GaussianVector, apply_word

logger = logging.getLogger(__name__)


def _relative_max_error(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


@dataclass(frozen=True)
class CovarianceReport:
    """Outcome of checking the covariance relation for one word and point.

    Attributes:
        word: The word in the generator mini-language.
        omega_error: Relative max-norm difference of the Ω components.
        z_error: Relative max-norm difference of the Z components.
        scalar: Ratio of the two prefactors.
        expected_scalar: The ratio a single generator must produce, or
            ``None`` for words of length two or more.
        tolerance: Threshold on the componentwise and scalar errors.
    """

    word: str
    omega_error: float
    z_error: float
    scalar: complex
    expected_scalar: complex | None
    tolerance: float
    asserted: bool = True

    @property
    def prefactor_error(self) -> float:
        if self.expected_scalar is None:
            return 0.0
        return abs(self.scalar - self.expected_scalar)

    @property
    def eighth_root_error(self) -> float:
        return abs(self.scalar**8 - 1.0)

    @property
    def max_rel_error(self) -> float:
        return max(self.omega_error, self.z_error, self.prefactor_error)

    @property
    def passed(self) -> bool:
        if self.omega_error > self.tolerance or self.z_error > self.tolerance:
            return False
        if self.expected_scalar is not None:
            return self.prefactor_error <= self.tolerance
        return self.eighth_root_error <= EIGHTH_ROOT_TOL


def expected_generator_scalar(letter: Generator, m: int) -> complex:
    if letter.kind is GeneratorKind.LINEAR and np.linalg.det(letter.matrix) < 0:
        return complex((-1) ** m)
    return 1.0 + 0.0j


def covariance_sides(
    index: IndexMatrix,
    word: Sequence[Generator],
    p: SiegelJacobiPoint,
) -> tuple[GaussianVector, GaussianVector]:
    """Return ``(ω_M(x)F_p, J_M(x, p)^{-1}F_{x·p})`` for the word's product x."""
    x = word_element(word, p.n, p.m)
    lhs = apply_word(word, covariant_vector(index, p))
    moved = act_jacobi(x, p)
    factor = automorphic_factor_J(index, x, p)
    rhs = GaussianVector(1.0 / factor.value, moved.omega, moved.z, index)
    return lhs, rhs


def verify_covariance(
    index: IndexMatrix,
    word: Sequence[Generator],
    p: SiegelJacobiPoint,
    tolerance: float = COVARIANCE_TOL,
) -> CovarianceReport:
    """Check the covariance relation for *word* at *p*.

    Raises:
        ValueError: *word* is empty.
        SingularDenominatorError: Some partial product hits ``det(CΩ + D) = 0``.
    """
    if not word:
        raise ValueError("covariance needs a nonempty generator word")
    lhs, rhs = covariance_sides(index, word, p)
    scalar = lhs.prefactor / rhs.prefactor
    expected = expected_generator_scalar(word[0], p.m) if len(word) == 1 else None
    report = CovarianceReport(
        word=format_word(word),
        omega_error=_relative_max_error(lhs.omega_array, rhs.omega_array),
        z_error=_relative_max_error(lhs.z, rhs.z),
        scalar=complex(scalar),
        expected_scalar=expected,
        tolerance=tolerance,
    )
    logger.debug(
        "covariance %s: scalar=%s omega=%.2e z=%.2e",
        report.word,
        report.scalar,
        report.omega_error,
        report.z_error,
    )
    return report


def verify_covariance_batch(
    index: IndexMatrix,
    cases: Sequence[tuple[Sequence[Generator], SiegelJacobiPoint]],
    tolerance: float = COVARIANCE_TOL,
    max_workers: int = 1,
) -> list[CovarianceReport]:
    """Run :func:`verify_covariance` over ``(word, point)`` pairs, results in input order."""
    if max_workers <= 1:
        return [verify_covariance(index, w, p, tolerance) for w, p in cases]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(lambda c: verify_covariance(index, c[0], c[1], tolerance), cases))


# ---------------------------------------------------------------------------
# Cocycle law
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CocycleReport:
    """Measured ``s = J(x₁x₂, p) / (J(x₁, x₂·p)·J(x₂, p))``.

    The law is asserted (``s = 1``) only for even m, where ``det^{m/2}``
    needs no branch.
    """

    scalar: complex
    tolerance: float
    asserted: bool

    @property
    def error(self) -> float:
        return abs(self.scalar - 1.0)

    @property
    def eighth_root_error(self) -> float:
        return abs(self.scalar**8 - 1.0)

    @property
    def passed(self) -> bool:
        if self.asserted:
            return self.error <= self.tolerance
        return self.eighth_root_error <= EIGHTH_ROOT_TOL


def check_cocycle(
    index: IndexMatrix,
    x1: JacobiElement,
    x2: JacobiElement,
    p: SiegelJacobiPoint,
    tolerance: float = 1e-10,
) -> CocycleReport:
    whole = automorphic_factor_J(index, jacobi_mul(x1, x2), p).value
    outer = automorphic_factor_J(index, x1, act_jacobi(x2, p)).value
    inner = automorphic_factor_J(index, x2, p).value
    report = CocycleReport(complex(whole / (outer * inner)), tolerance, index.m % 2 == 0)
    if not report.asserted and report.error > tolerance:
        logger.warning("cocycle scalar %s != 1 for odd m=%d", report.scalar, index.m)
    return report
