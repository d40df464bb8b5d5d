"""Numerical verification of the theta transformation law.

For a word γ with product x the law reads

    Θ_M(x·p) = ρ_M(x)·J_M(x, p)·Θ_M(p).

Both theta values are truncated with tails below eps times the largest term
modulus at their point, and the measured multiplier
``s = Θ_M(x·p) / (J_M(x, p)·Θ_M(p))`` is compared with ρ_M.
Single generators must reproduce the tabulated ρ_M; longer words pass when s
is an eighth root of unity.  The product ρ of generator values is reported
next to s, with ``rho_sign`` saying whether s equals ρ, −ρ or neither; for odd
m the factor ``det^{m/2}`` is not a cocycle and the sign can be −1.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from siegel_jacobi.config.tolerances import (
    DEFAULT_THETA_EPS,
    EIGHTH_ROOT_TOL,
    THETA_VERIFY_TOL,
    TINY_MODULUS,
)
from siegel_jacobi.core.covariance import automorphic_factor_J
from siegel_jacobi.core.groups import (
    Generator,
    SiegelJacobiPoint,
    act_jacobi,
    format_word,
    is_gamma_12_word,
    is_integral_word,
    word_element,
)
from siegel_jacobi.core.linalg import IndexMatrix
from siegel_jacobi.core.theta.character import character_rho, word_character
from siegel_jacobi.core.theta.series import ThetaSeries

logger = logging.getLogger(__name__)


def _nearest_eighth_root(s: complex) -> complex:
    k = round(cmath.phase(s) / (math.pi / 4.0))
    return cmath.exp(1j * math.pi * k / 4.0)


def is_strict_setting(index: IndexMatrix, word: Sequence[Generator]) -> bool:
    """True when the law is known to hold for (M, word), so failures are asserted.

    That is M unimodular even with an integral word, or M integral of
    determinant one with every letter in Γ_{1,2} (``t(b)`` with even diagonal).
    """
    if index.unimodular and index.even and index.positive_definite:
        return is_integral_word(word)
    if index.integral and index.unimodular and index.positive_definite:
        return is_gamma_12_word(word)
    return False


@dataclass(frozen=True)
class ThetaVerification:
    """Outcome of one theta transformation check.

    Attributes:
        word: The word in the generator mini-language.
        lhs: ``Θ_M(x·p)``.
        rhs: ``ρ·J_M(x, p)·Θ_M(p)`` with ρ the reference multiplier.
        scalar: The measured multiplier s.
        rho: Product of the tabulated generator values along the word.
        reference: The multiplier the check compares against: ρ for a
            single generator, the eighth root of unity nearest to s otherwise.
        tail_bound: Largest tail bound of the two theta evaluations.
    """

    word: str
    lhs: complex
    rhs: complex
    scalar: complex
    rho: complex
    reference: complex
    tail_bound: float
    tolerance: float
    asserted: bool

    @property
    def relative_error(self) -> float:
        return abs(self.lhs - self.rhs) / max(abs(self.lhs), TINY_MODULUS)

    @property
    def rho_sign(self) -> int:
        """``1`` if s equals rho, ``-1`` if it equals ``-rho``, ``0`` otherwise."""
        if abs(self.scalar - self.rho) <= EIGHTH_ROOT_TOL:
            return 1
        if abs(self.scalar + self.rho) <= EIGHTH_ROOT_TOL:
            return -1
        return 0

    @property
    def passed(self) -> bool:
        return self.relative_error <= self.tolerance


def verify_theta_transformation(
    index: IndexMatrix,
    word: Sequence[Generator],
    p: SiegelJacobiPoint,
    eps: float = DEFAULT_THETA_EPS,
    tolerance: float = THETA_VERIFY_TOL,
    series: ThetaSeries | None = None,
) -> ThetaVerification:
    """Evaluate both sides of the law for *word* at *p*.

    Raises:
        ValueError: *word* is empty.
        SingularDenominatorError: ``det(CΩ + D)`` vanishes at *p*.
        ThetaResourceError: One of the theta values needs too many terms.
    """
    if not word:
        raise ValueError("theta verification needs a nonempty generator word")
    series = series or ThetaSeries(index, eps, relative=True)
    x = word_element(word, p.n, p.m)
    moved = act_jacobi(x, p)
    factor = automorphic_factor_J(index, x, p).value
    before = series.evaluate(p)
    after = series.evaluate(moved)
    scalar = after.value / (factor * before.value)
    rho = word_character(index, word, p.n).value
    if len(word) == 1:
        reference = character_rho(index, word[0], p.n).value
    else:
        reference = _nearest_eighth_root(scalar)
    report = ThetaVerification(
        word=format_word(word),
        lhs=after.value,
        rhs=reference * factor * before.value,
        scalar=complex(scalar),
        rho=complex(rho),
        reference=complex(reference),
        tail_bound=max(before.tail_bound, after.tail_bound),
        tolerance=tolerance,
        asserted=is_strict_setting(index, word),
    )
    if not report.passed:
        level = logging.ERROR if report.asserted else logging.WARNING
        logger.log(
            level,
            "theta law off for %s: rel %.3e (scalar %s)",
            report.word,
            report.relative_error,
            report.scalar,
        )
    elif len(word) > 1 and report.rho_sign != 1:
        logger.info(
            "theta law for %s holds with multiplier %s, rho sign %d against the generator product",
            report.word,
            report.scalar,
            report.rho_sign,
        )
    return report
