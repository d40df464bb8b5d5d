"""Job runner: dispatches a validated job to the library and collects reports.

Each task handler draws its random inputs from one seeded generator, in a
fixed order, before any parallel work starts, and every parallel map keeps
input order; the report body is therefore a function of the job alone.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from siegel_jacobi.config.job import JobConfig, Task
from siegel_jacobi.config.tolerances import DEFAULT_DFT_SAMPLES
from siegel_jacobi.core.covariance import verify_covariance_batch
from siegel_jacobi.core.groups import (
    Generator,
    SiegelJacobiPoint,
    act_jacobi,
    random_point,
    random_word,
    word_element,
)
from siegel_jacobi.core.jacobi_forms import (
    FourierIndex,
    PositivityMode,
    block_positivity,
    fourier_coefficients,
)
from siegel_jacobi.core.reports import to_record
from siegel_jacobi.core.schrodinger import (
    CentralCharacter,
    GridFunction,
    GridSpec,
    check_homomorphism,
    random_grid_heisenberg,
)
from siegel_jacobi.core.theta import (
    ThetaEvaluation,
    ThetaSeries,
    poisson_check,
    qexpansion,
    sum_qexpansion,
    theta_aliasing_bound,
    theta_fourier_support,
    verify_theta_transformation,
)
from siegel_jacobi.core.weil import GaussianVector, check_gaussian_integral

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[str, float], None]

# Smallest eigenvalue of Im Ω accepted for a random theta-verify point and
# its image; lower points make Θ_{E8} exceed the term cap.
_MIN_THETA_HEIGHT = 0.8
_MAX_DRAWS = 1000
# Share of the term cap a volume estimate may claim; lattice counts overshoot it.
_TERM_HEADROOM = 0.5
# Coefficients below this are treated as zero in the support check.
_SUPPORT_THRESHOLD = 1e-6


@dataclass
class JobResult:
    """Summary of a job run."""

    body: dict[str, Any]
    passed: bool
    failures: int
    duration_seconds: float = 0.0


@dataclass(frozen=True)
class SeriesComparison:
    """``Σ a_k q^k`` against a certified Θ_M(Ω, 0) at one Ω."""

    omega: complex
    series_value: complex
    theta: ThetaEvaluation
    asserted: bool = False

    @property
    def difference(self) -> float:
        return abs(self.series_value - self.theta.value)


@dataclass(frozen=True)
class CoefficientCheck:
    """One extracted Θ_M coefficient against the lattice count of its index.

    ``supported`` is the block condition, ``singular`` the determinant-zero
    predicate; every index carried by Θ_M must satisfy both.
    """

    t: int
    r: tuple[int, ...]
    value: complex
    expected: int
    accuracy: float
    supported: bool
    singular: bool
    tolerance: float
    asserted: bool = True

    @property
    def error(self) -> float:
        return abs(self.value - self.expected)

    @property
    def passed(self) -> bool:
        if self.error > self.tolerance:
            return False
        return self.expected == 0 or (self.supported and self.singular)


# ---------------------------------------------------------------------------
# Random inputs
# ---------------------------------------------------------------------------


def _min_height(omega: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(omega.imag).min())


def _point(config: JobConfig) -> SiegelJacobiPoint:
    return SiegelJacobiPoint.of(config.omega, config.z)


def _theta_cases(
    config: JobConfig,
    rng: np.random.Generator,
    series: ThetaSeries,
) -> list[tuple[list[Generator], SiegelJacobiPoint]]:
    """Words and points at which both theta values fit under the term cap.

    A case is redrawn when its image drops below ``_MIN_THETA_HEIGHT`` in H_n
    or when the volume estimate for either point exceeds half the term cap of
    *series*.
    """
    index, n, m = config.index, config.n, config.m
    if config.word is not None and config.omega is not None:
        return [(list(config.word), _point(config))]
    count = config.sample_count(1 if config.word is not None else 5)
    cases = []
    for _ in range(count):
        for _ in range(_MAX_DRAWS):
            word = (
                list(config.word)
                if config.word is not None
                else random_word(
                    rng, n, m, config.word_length, integral=True, even_diagonal=not index.even
                )
            )
            p = _point(config) if config.omega is not None else random_point(rng, n, m)
            moved = act_jacobi(word_element(word, n, m), p)
            if _min_height(moved.omega_array) >= _MIN_THETA_HEIGHT and all(
                series.estimated_terms(q) <= _TERM_HEADROOM * series.max_terms for q in (p, moved)
            ):
                break
        else:
            logger.warning("no admissible point after %d draws, keeping the last one", _MAX_DRAWS)
        cases.append((word, p))
    return cases


def _gaussian_vectors(config: JobConfig, rng: np.random.Generator) -> list[GaussianVector]:
    if config.omega is not None:
        return [GaussianVector(1.0, config.omega, config.z, config.index)]
    vectors = []
    for _ in range(config.sample_count(5)):
        p = random_point(rng, config.n, config.m)
        vectors.append(GaussianVector(1.0, p.omega, p.z, config.index))
    return vectors


def _map(fn: Callable[[Any], Any], items: list[Any], threads: int) -> list[Any]:
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))


# ---------------------------------------------------------------------------
# Task handlers
# ---------------------------------------------------------------------------


def _theta_eval(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    return [ThetaSeries(config.index, config.eps).evaluate(_point(config))]


def _theta_verify(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    series = ThetaSeries(config.index, config.eps, relative=True)
    cases = _theta_cases(config, rng, series)
    return _map(
        lambda c: verify_theta_transformation(config.index, c[0], c[1], config.eps, series=series),
        cases,
        config.threads,
    )


def _covariance_verify(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    n, m = config.n, config.m
    if config.word is not None and config.omega is not None:
        cases = [(list(config.word), _point(config))]
    else:
        cases = []
        for _ in range(config.sample_count(10)):
            word = (
                list(config.word)
                if config.word is not None
                else random_word(rng, n, m, config.word_length)
            )
            p = _point(config) if config.omega is not None else random_point(rng, n, m)
            cases.append((word, p))
    return verify_covariance_batch(config.index, cases, max_workers=config.threads)


def _rep_check(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    spec = GridSpec(config.m, config.n)
    c = CentralCharacter(config.central_character)
    f = GridFunction.from_callable(spec, lambda x: np.exp(-np.pi * np.sum(x**2, axis=(-2, -1))))
    pairs = [
        (random_grid_heisenberg(rng, spec), random_grid_heisenberg(rng, spec))
        for _ in range(config.sample_count(10))
    ]
    return _map(lambda pair: check_homomorphism(c, pair[0], pair[1], f), pairs, config.threads)


def _gaussian_integral_check(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    return _map(check_gaussian_integral, _gaussian_vectors(config, rng), config.threads)


def _poisson_check(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    vectors = _gaussian_vectors(config, rng)
    return _map(lambda v: poisson_check(v, config.eps), vectors, config.threads)


def _qexpansion(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    expansion = qexpansion(config.index, 1, config.max_order)
    results: list[Any] = [expansion]
    if config.omega is not None:
        omega = complex(config.omega[0, 0])
        theta = ThetaSeries(config.index, config.eps).evaluate(
            SiegelJacobiPoint.of(omega, np.zeros((config.m, 1)))
        )
        results.append(SeriesComparison(omega, sum_qexpansion(expansion, omega), theta))
    return results


def _fourier_extract(config: JobConfig, rng: np.random.Generator) -> list[Any]:
    index, m, lam = config.index, config.m, config.lambda_gamma
    series = ThetaSeries(index, config.eps)
    box = [
        FourierIndex(t, r, lam)
        for t in range(int(math.floor(config.t_max)) + 1)
        for r in itertools.product(range(-config.r_max, config.r_max + 1), repeat=m)
    ]
    samples = config.sample_count(DEFAULT_DFT_SAMPLES)
    table = fourier_coefficients(
        series,
        m,
        box,
        samples=samples,
        imag_omega=config.imag_omega,
        imag_z=config.imag_z,
        sample_accuracy=config.eps,
        max_workers=config.threads,
        aliasing=theta_aliasing_bound(index, samples, lam, config.imag_omega, config.imag_z),
    )
    support = theta_fourier_support(index, config.t_max, lam)
    jacobi_index = index.scaled(0.5).matrix
    checks = []
    for idx in box:
        value = table.coefficients[idx]
        expected = support.get((float(idx.t), tuple(float(r) for r in idx.r)), 0)
        present = abs(value) > _SUPPORT_THRESHOLD
        checks.append(
            CoefficientCheck(
                t=idx.t,
                r=idx.r,
                value=value,
                expected=expected,
                accuracy=table.accuracy[idx],
                supported=not present
                or block_positivity(idx.T.entries, idx.R, jacobi_index, lam, PositivityMode.SEMI),
                singular=not present
                or block_positivity(
                    idx.T.entries, idx.R, jacobi_index, lam, PositivityMode.SINGULAR
                ),
                tolerance=table.tolerance,
            )
        )
    return [table, *checks]


_HANDLERS: dict[Task, Callable[[JobConfig, np.random.Generator], list[Any]]] = {
    Task.THETA_EVAL: _theta_eval,
    Task.THETA_VERIFY: _theta_verify,
    Task.COVARIANCE_VERIFY: _covariance_verify,
    Task.REP_CHECK: _rep_check,
    Task.GAUSSIAN_INTEGRAL_CHECK: _gaussian_integral_check,
    Task.POISSON_CHECK: _poisson_check,
    Task.QEXPANSION: _qexpansion,
    Task.FOURIER_EXTRACT: _fourier_extract,
}


def run_job(
    config: JobConfig,
    progress_callback: ProgressCallback | None = None,
) -> JobResult:
    """Run one job and build its report body.

    Args:
        config: A validated job.
        progress_callback: Optional ``(phase, progress)`` callback with
            *progress* in ``[0.0, 1.0]``.

    Returns:
        The body (inputs echoed, one record per result, pass/fail) and the
        number of asserted results that failed.

    Raises:
        ThetaResourceError: A theta sum needs more terms than the cap.
    """
    start = time.monotonic()

    def report(phase: str, pct: float) -> None:
        if progress_callback is not None:
            progress_callback(phase, pct)

    logger.info(
        "Starting %s (seed %d, %d thread(s))", config.task.value, config.seed, config.threads
    )
    report(f"Running {config.task.value}", 0.0)
    rng = np.random.default_rng(config.seed)
    results = _HANDLERS[config.task](config, rng)
    report(f"Running {config.task.value}", 1.0)

    asserted = [r for r in results if getattr(r, "asserted", False)]
    failures = sum(1 for r in asserted if not r.passed)
    body = {
        "task": config.task.value,
        "inputs": to_record(config.echo()),
        "results": [to_record(r) for r in results],
        "asserted": len(asserted),
        "failed": failures,
        "passed": failures == 0,
    }
    duration = time.monotonic() - start
    logger.info(
        "Finished %s: %d result(s), %d asserted, %d failed in %.2fs",
        config.task.value,
        len(results),
        len(asserted),
        failures,
        duration,
    )
    return JobResult(body=body, passed=failures == 0, failures=failures, duration_seconds=duration)
