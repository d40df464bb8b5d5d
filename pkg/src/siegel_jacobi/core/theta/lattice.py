"""Lattice-point enumeration in ellipsoids and rigorous Gaussian tail bounds.

A Gaussian lattice sum ``Σ_ξ e^{−π Q(ξ + c)}`` over ``ξ ∈ ℤ^d`` is truncated to
the ellipsoid ``Q(ξ + c) ≤ B``.  With the Cholesky factor ``G = ᵗR R`` of the
Gram matrix, the number of lattice points with ``Q(ξ + c) ≤ t`` is at most
``P(√t) = Π_j (1 + 2√t / r_jj)`` (each level of the enumeration tree admits an
interval of length ``2√t / r_jj``).  Integrating ``e^{−πt}`` against that count
gives

    Σ_{Q > B} e^{−πQ} ≤ Σ_k p_k π^{−k/2} Γ(k/2 + 1, πB),

where ``p_k`` are the coefficients of P.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import gamma, gammaincc

from siegel_jacobi.config.tolerances import MAX_THETA_TERMS
from siegel_jacobi.core.errors import DomainError, ThetaResourceError

logger = logging.getLogger(__name__)

_MAX_BOUND = 1e6
_BISECTION_STEPS = 60


def cholesky_upper(gram: np.ndarray) -> np.ndarray:
    """Return upper-triangular R with ``ᵗR R = gram``.

    Raises:
        DomainError: *gram* is not positive definite.
    """
    try:
        lower = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError as exc:
        raise DomainError("lattice Gram matrix is not positive definite") from exc
    return lower.T


def count_polynomial(r: np.ndarray) -> np.ndarray:
    """Coefficients ``p_0 … p_d`` of ``Π_j (1 + (2/r_jj) s)`` in ascending order."""
    coefficients = np.array([1.0])
    for rjj in np.diag(r):
        coefficients = np.convolve(coefficients, [1.0, 2.0 / rjj])
    return coefficients


def tail_bound(r: np.ndarray, bound: float) -> float:
    """Upper bound on ``Σ_{Q(ξ+c) > B} e^{−πQ(ξ+c)}`` for any center c."""
    coefficients = count_polynomial(r)
    x = math.pi * bound
    total = 0.0
    for k, pk in enumerate(coefficients):
        a = k / 2.0 + 1.0
        total += pk * math.pi ** (-k / 2.0) * float(gammaincc(a, x) * gamma(a))
    return total


def choose_bound(r: np.ndarray, scale: float, eps: float) -> tuple[float, float]:
    """Smallest ``B ≥ 1`` (to bisection accuracy) with ``scale·tail(B) ≤ eps``.

    Returns:
        ``(B, scale·tail(B))``.

    Raises:
        ThetaResourceError: Even ``B = 10⁶`` is not enough.
    """
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps!r}")
    lo = hi = 1.0
    first = scale * tail_bound(r, hi)
    if first <= eps:
        return hi, first
    while scale * tail_bound(r, hi) > eps:
        lo, hi = hi, 2.0 * hi
        if hi > _MAX_BOUND:
            raise ThetaResourceError(
                f"no truncation below B={_MAX_BOUND:g} reaches eps={eps:g}",
                terms_needed=MAX_THETA_TERMS + 1,
                partial_tail_bound=scale * tail_bound(r, _MAX_BOUND),
            )
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if scale * tail_bound(r, mid) <= eps:
            hi = mid
        else:
            lo = mid
    return hi, scale * tail_bound(r, hi)


def estimated_count(r: np.ndarray, bound: float) -> float:
    """Volume estimate ``V_d B^{d/2} / det R`` of the number of enclosed points."""
    d = r.shape[0]
    unit_ball = math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)
    return unit_ball * bound ** (d / 2.0) / float(np.prod(np.diag(r)))


def bound_for_count(r: np.ndarray, terms: int) -> float:
    """Inverse of :func:`estimated_count`."""
    d = r.shape[0]
    unit_ball = math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)
    return (terms * float(np.prod(np.diag(r))) / unit_ball) ** (2.0 / d)


def enumerate_ellipsoid(
    r: np.ndarray,
    center: np.ndarray,
    bound: float,
    max_terms: int = MAX_THETA_TERMS,
) -> np.ndarray:
    """All ``ξ ∈ ℤ^d`` with ``‖R(ξ + c)‖² ≤ B``, as a ``(K, d)`` integer array.

    Coordinates are fixed from the last to the first, one tree level at a time
    for the whole frontier.  Rows come out in a fixed order: lexicographic
    starting from the last coordinate, ascending within each level.

    Raises:
        ThetaResourceError: The frontier grows beyond *max_terms*.
    """
    d = r.shape[0]
    center = np.asarray(center, dtype=float).reshape(d)
    diag = np.diag(r)
    assigned = np.zeros((1, d))
    xi = np.zeros((1, d), dtype=np.int64)
    partial = np.zeros(1)
    for i in range(d - 1, -1, -1):
        shift = assigned @ r[i]
        room = np.sqrt(np.maximum(bound - partial, 0.0))
        lo = np.ceil((-room - shift) / diag[i] - center[i]).astype(np.int64)
        hi = np.floor((room - shift) / diag[i] - center[i]).astype(np.int64)
        counts = np.maximum(hi - lo + 1, 0)
        total = int(counts.sum())
        if total > max_terms:
            raise ThetaResourceError(
                f"lattice enumeration needs more than {max_terms} points",
                terms_needed=max(total, int(estimated_count(r, bound))),
                partial_tail_bound=math.inf,
            )
        parent = np.repeat(np.arange(len(counts)), counts)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        values = lo[parent] + (np.arange(total) - starts)
        xi = xi[parent]
        xi[:, i] = values
        assigned = assigned[parent]
        assigned[:, i] = values + center[i]
        partial = partial[parent] + (diag[i] * assigned[:, i] + shift[parent]) ** 2
    keep = partial <= bound
    logger.debug("enumerated %d lattice points in dimension %d (B=%.4g)", int(keep.sum()), d, bound)
    return xi[keep]
