"""Certified evaluation of Θ_M and of general Gaussian lattice sums.

    Θ_M(Ω, Z) = Σ_{ξ ∈ ℤ^(m,n)} e^{πiσ(M(ξΩᵗξ + 2ξᵗZ))}

is the sum of the covariant vector ``F_{Ω,Z}`` over the integer lattice, so
every sum here is written for a :class:`GaussianVector` v.  With
``Y = Im Ω``, ``V = Im Z`` and ``c = VY^{-1}``,

    |v(ξ)| = |v.prefactor|·e^{πQ(c)}·e^{−πQ(ξ + c)},   Q(u) = σ(M u Y ᵗu),

so the sum is truncated to an ellipsoid of the quadratic form
``kron(M, Y)`` and certified by :func:`~siegel_jacobi.core.theta.lattice.tail_bound`.
"""

from __future__ import annotations

import logging
import math
import threading
from collections import Counter
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import (
    DEFAULT_FOURIER_IMAG_OMEGA,
    DEFAULT_FOURIER_IMAG_Z,
    DEFAULT_THETA_EPS,
    MAX_THETA_TERMS,
)
from siegel_jacobi.core.errors import DomainError, ThetaResourceError
from siegel_jacobi.core.groups import SiegelJacobiPoint
from siegel_jacobi.core.linalg import IndexMatrix
from siegel_jacobi.core.theta.lattice import (
    bound_for_count,
    choose_bound,
    cholesky_upper,
    enumerate_ellipsoid,
    estimated_count,
    tail_bound,
)
from siegel_jacobi.core.weil import GaussianVector

logger = logging.getLogger(__name__)

# Larger exponents overflow a float term modulus.
_MAX_EXPONENT = 700.0


@dataclass(frozen=True)
class ThetaEvaluation:
    """A lattice sum with its truncation certificate.

    Attributes:
        value: The truncated sum.
        truncation_radius: Radius R of the ellipsoid ``Q(ξ + c) ≤ R²``.
        tail_bound: Proven bound on the omitted terms.
        epsilon_requested: The absolute accuracy asked for; ``eps`` times the
            term scale for a relative series.
        terms: Number of lattice points summed.
    """

    value: complex
    truncation_radius: float
    tail_bound: float
    epsilon_requested: float
    terms: int
    asserted: bool = False

    @property
    def passed(self) -> bool:
        return self.tail_bound <= self.epsilon_requested and self.truncation_radius >= 1.0


@dataclass(frozen=True, eq=False)
class Truncation:
    """Lattice points (shaped ``(K, m, n)``) inside one certified ellipsoid."""

    points: np.ndarray
    bound: float
    tail_bound: float
    target: float


def _geometry(v: GaussianVector) -> tuple[np.ndarray, np.ndarray, float]:
    """Cholesky factor, flattened center c and the modulus scale of the terms."""
    y = v.omega.imag.entries
    gram = np.kron(v.index.matrix, y)
    r = cholesky_upper(gram)
    center = np.linalg.solve(y, v.z.imag.T).T.reshape(-1)
    exponent = math.pi * float(center @ gram @ center)
    scale = abs(v.prefactor) * math.exp(exponent) if exponent < _MAX_EXPONENT else math.inf
    return r, center, scale


def _truncate(
    v: GaussianVector,
    eps: float,
    max_terms: int,
    relative: bool = False,
) -> Truncation:
    if not v.index.positive_definite:
        raise DomainError("lattice sums need a positive definite index matrix")
    r, center, scale = _geometry(v)
    if not math.isfinite(scale):
        raise ThetaResourceError(
            "lattice terms overflow at this Im Z",
            terms_needed=max_terms + 1,
            partial_tail_bound=math.inf,
        )
    target = eps * scale if relative else eps
    bound, tail = choose_bound(r, scale, target)
    try:
        flat = enumerate_ellipsoid(r, center, bound, max_terms)
    except ThetaResourceError as exc:
        reachable = bound_for_count(r, max_terms)
        raise ThetaResourceError(
            f"reaching eps={target:g} needs about {estimated_count(r, bound):.3g} lattice points",
            terms_needed=exc.terms_needed,
            partial_tail_bound=scale * tail_bound(r, reachable),
        ) from exc
    points = flat.reshape(-1, v.m, v.n).astype(float)
    points.setflags(write=False)
    logger.debug(
        "truncation B=%.4g, %d terms, tail bound %.3e (eps %.1e)", bound, len(points), tail, target
    )
    return Truncation(points, bound, tail, target)


def _evaluate(v: GaussianVector, truncation: Truncation) -> ThetaEvaluation:
    value = complex(np.sum(v.evaluate(truncation.points)))
    return ThetaEvaluation(
        value=value,
        truncation_radius=math.sqrt(truncation.bound),
        tail_bound=truncation.tail_bound,
        epsilon_requested=truncation.target,
        terms=len(truncation.points),
    )


def gaussian_lattice_sum(
    v: GaussianVector,
    eps: float = DEFAULT_THETA_EPS,
    max_terms: int = MAX_THETA_TERMS,
) -> ThetaEvaluation:
    """Return ``Σ_{ξ ∈ ℤ^(m,n)} v(ξ)`` to absolute accuracy *eps*."""
    return _evaluate(v, _truncate(v, eps, max_terms))


class ThetaSeries:
    """Θ_M for one index matrix, caching the truncation per ``(Im Ω, Im Z)``.

    Points that share their imaginary parts (e.g. the samples of a Fourier
    grid) reuse one enumeration.  Safe to share between threads.

    With *relative* the omitted terms are bounded by ``eps·|c|·e^{πQ(c)}``, the
    largest modulus a term can have, instead of by eps.  A point with large
    ``Im Z`` then needs as many terms as the same Ω at Z = 0.
    """

    def __init__(
        self,
        index: IndexMatrix,
        eps: float = DEFAULT_THETA_EPS,
        max_terms: int = MAX_THETA_TERMS,
        relative: bool = False,
    ) -> None:
        if not index.positive_definite:
            raise DomainError("Theta_M needs a positive definite M")
        if eps <= 0:
            raise DomainError(f"eps must be positive, got {eps!r}")
        self.index = index
        self.eps = eps
        self.max_terms = max_terms
        self.relative = relative
        self._cache: dict[tuple[bytes, bytes], Truncation] = {}
        self._lock = threading.Lock()

    def _vector(self, p: SiegelJacobiPoint) -> GaussianVector:
        return GaussianVector(1.0, p.omega, p.z, self.index)

    def truncation(self, p: SiegelJacobiPoint) -> Truncation:
        key = (p.omega.imag.entries.tobytes(), np.ascontiguousarray(p.z.imag).tobytes())
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        truncation = _truncate(self._vector(p), self.eps, self.max_terms, self.relative)
        with self._lock:
            self._cache.setdefault(key, truncation)
        return truncation

    def estimated_terms(self, p: SiegelJacobiPoint) -> float:
        """Volume estimate of the lattice points a truncation at *p* needs; inf if none."""
        r, _, scale = _geometry(self._vector(p))
        if not math.isfinite(scale):
            return math.inf
        target = self.eps * scale if self.relative else self.eps
        try:
            bound, _ = choose_bound(r, scale, target)
        except ThetaResourceError:
            return math.inf
        return estimated_count(r, bound)

    def evaluate(self, p: SiegelJacobiPoint) -> ThetaEvaluation:
        if p.m != self.index.m:
            raise DomainError(f"point has m={p.m} but M is {self.index.m}x{self.index.m}")
        return _evaluate(self._vector(p), self.truncation(p))

    def __call__(self, p: SiegelJacobiPoint) -> complex:
        return self.evaluate(p).value

    def evaluate_many(
        self,
        points: Sequence[SiegelJacobiPoint],
        max_workers: int = 1,
    ) -> list[ThetaEvaluation]:
        """Evaluate at every point; results keep the input order."""
        if max_workers <= 1:
            return [self.evaluate(p) for p in points]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(self.evaluate, points))


def theta_eval(
    index: IndexMatrix,
    p: SiegelJacobiPoint,
    eps: float = DEFAULT_THETA_EPS,
) -> ThetaEvaluation:
    """Return Θ_M(Ω, Z) with ``|value − Θ_M(Ω, Z)| ≤ eps``.

    Raises:
        ThetaResourceError: More than ``MAX_THETA_TERMS`` lattice points would
            be needed; carries the tail bound reachable under the cap.
    """
    return ThetaSeries(index, eps).evaluate(p)


def theta_sum(index: IndexMatrix, p: SiegelJacobiPoint, radius: float) -> ThetaEvaluation:
    """Sum Θ_M over the fixed ellipsoid ``Q(ξ + c) ≤ radius²``."""
    v = GaussianVector(1.0, p.omega, p.z, index)
    r, center, scale = _geometry(v)
    bound = radius**2
    flat = enumerate_ellipsoid(r, center, bound)
    tail = scale * tail_bound(r, bound)
    truncation = Truncation(flat.reshape(-1, v.m, v.n).astype(float), bound, tail, tail)
    return _evaluate(v, truncation)


# ---------------------------------------------------------------------------
# q-expansion (n = 1, Z = 0)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QExpansion:
    """Coefficients of ``Θ_M(Ω, 0) = Σ_k a_k q^k``, ``q = e^{2πiΩ}``."""

    coefficients: tuple[int, ...]
    asserted: bool = False

    @property
    def max_order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def passed(self) -> bool:
        return bool(self.coefficients) and self.coefficients[0] == 1

    def terms(self) -> list[tuple[int, int]]:
        return list(enumerate(self.coefficients))


def _short_vectors(index: IndexMatrix, max_value: float) -> np.ndarray:
    """All ξ ∈ ℤ^m with ``ξᵗMξ <= max_value``."""
    if not index.positive_definite:
        raise DomainError("short vectors need a positive definite M")
    r = cholesky_upper(index.matrix)
    bound = max_value + 0.5
    if estimated_count(r, bound) > MAX_THETA_TERMS:
        raise ThetaResourceError(
            f"enumerating ξᵗMξ <= {max_value:g} exceeds the term cap",
            terms_needed=int(estimated_count(r, bound)),
            partial_tail_bound=math.inf,
        )
    return enumerate_ellipsoid(r, np.zeros(index.m), bound)


def qexpansion(index: IndexMatrix, n: int, max_order: int) -> QExpansion:
    """Count ``#{ξ : ξᵗMξ/2 = k}`` for ``k = 0 … max_order``.

    Raises:
        DomainError: ``n != 1`` or M is not positive definite even integral.
        ThetaResourceError: *max_order* is too large to enumerate.
    """
    if max_order < 0:
        raise DomainError(f"max_order must be non-negative, got {max_order}")
    if n != 1:
        raise DomainError("q-expansions are implemented for n = 1")
    if not index.even or not index.positive_definite:
        raise DomainError("q-expansions need a positive definite even integral M")
    xi = _short_vectors(index, 2.0 * max_order).astype(float)
    norms = np.rint(np.einsum("ki,ij,kj->k", xi, index.matrix, xi) / 2.0).astype(np.int64)
    counts = np.bincount(norms, minlength=max_order + 1)[: max_order + 1]
    return QExpansion(tuple(int(c) for c in counts))


def sum_qexpansion(expansion: QExpansion, omega: complex) -> complex:
    q = np.exp(2j * np.pi * complex(omega))
    return complex(np.polynomial.polynomial.polyval(q, np.array(expansion.coefficients)))


def theta_fourier_support(
    index: IndexMatrix,
    t_max: float,
    lambda_gamma: int = 1,
) -> Counter[tuple[float, tuple[float, ...]]]:
    """Fourier indices ``(T, R)`` of Θ_M (n = 1) with ``T ≤ t_max``, with multiplicity.

    Term ξ contributes ``e^{2πi(T/λ_Γ)Ω}·e^{2πi R·Z}`` with
    ``T = λ_Γ·ξᵗMξ/2`` and ``R = ᵗξM``.
    """
    if not index.scaled(lambda_gamma).even:
        raise DomainError(
            f"Theta_M is not periodic under Omega -> Omega + {lambda_gamma}: lambda·M is not even"
        )
    xi = _short_vectors(index, 2.0 * t_max / lambda_gamma).astype(float)
    t_values = lambda_gamma * np.einsum("ki,ij,kj->k", xi, index.matrix, xi) / 2.0
    r_values = xi @ index.matrix
    support: Counter[tuple[float, tuple[float, ...]]] = Counter()
    for t, r in zip(t_values, r_values):
        if t <= t_max + 1e-9:
            support[(float(np.rint(t)), tuple(float(x) for x in np.rint(r)))] += 1
    return support


def theta_aliasing_bound(
    index: IndexMatrix,
    samples: int,
    lambda_gamma: int = 1,
    imag_omega: float = DEFAULT_FOURIER_IMAG_OMEGA,
    imag_z: float = DEFAULT_FOURIER_IMAG_Z,
) -> float:
    """Bound on the aliased Θ_M terms landing in one slot of an N-point DFT (n = 1).

    Sampling at ``Im Ω = y`` and ``Im Z = v`` (every entry), the term of ξ has
    index ``T = λ_Γ·ξᵗMξ/2``, ``R = ᵗξM`` and modulus ``e^{πQ(c)}·e^{−πQ(ξ + c)}``.
    A term aliasing onto a resolvable slot has ``T ≥ N`` or some ``|R_j| ≥ N/2``,
    hence ``ξᵗMξ ≥ min(2N/λ_Γ, N²/(4‖M‖))``, and the sum of all such terms is
    bounded by the lattice tail beyond that ellipsoid.  Returns ``inf`` when
    the grid is too coarse for the bound to say anything.
    """
    if samples < 1 or imag_omega <= 0:
        raise DomainError("aliasing needs samples >= 1 and a positive Im Omega")
    gram = index.matrix * imag_omega
    r = cholesky_upper(gram)
    center = np.full(index.m, imag_z / imag_omega)
    shift = float(center @ gram @ center)
    largest = float(np.linalg.eigvalsh(index.matrix).max())
    norm = min(2.0 * samples / lambda_gamma, samples**2 / (4.0 * largest))
    reach = math.sqrt(imag_omega * norm) - math.sqrt(shift)
    if reach <= 0 or math.pi * shift >= _MAX_EXPONENT:
        return math.inf
    return math.exp(math.pi * shift) * tail_bound(r, reach**2)
