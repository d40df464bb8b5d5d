"""End-to-end acceptance runs at desk scale.

Every check here goes through a job file and the runner, the same path the
CLI takes, except for the q-expansion comparison and the grid cross-check,
which sweep several points directly.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from typer.testing import CliRunner

from siegel_jacobi.cli.main import app
from siegel_jacobi.config.job import JobConfig, load_job, parse_job_text
from siegel_jacobi.core.groups import Generator, SiegelJacobiPoint
from siegel_jacobi.core.linalg import IndexMatrix
from siegel_jacobi.core.runner import run_job
from siegel_jacobi.core.schrodinger import GridSpec
from siegel_jacobi.core.theta import ThetaSeries, qexpansion, sum_qexpansion
from siegel_jacobi.core.weil import GaussianVector, check_grid_consistency

pytestmark = pytest.mark.slow


def _job(text: str) -> JobConfig:
    return load_job(parse_job_text(text))


def _assert_passes(text: str, asserted: int) -> None:
    result = run_job(_job(text))
    assert result.passed, result.body
    assert result.body["asserted"] == asserted


# ---------------------------------------------------------------------------
# Gaussians, grids and the Schrödinger representation
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "shape", ["M = [1]\nn = 1", "M = [2 1; 1 2]\nn = 1", "M = [3]\nn = 2"]
)
def test_gaussian_integral(shape: str) -> None:
    _assert_passes(f"task = gaussian-integral-check\n{shape}\nsamples = 25\nseed = 1\n", 25)


@pytest.mark.parametrize("shape", ["M = [1]", "M = [1 0.5; 0.5 2]"])
def test_schrodinger_homomorphism(shape: str) -> None:
    _assert_passes(f"task = rep-check\n{shape}\nsamples = 100\nseed = 2\n", 100)


@pytest.mark.parametrize("omega", [1j, 0.3 + 0.9j, -0.6 + 1.4j])
def test_grid_consistency(omega: complex) -> None:
    v = GaussianVector(1.0, np.array([[omega]]), np.array([[0.2 - 0.1j]]), IndexMatrix.of(1.0))
    letters = [
        Generator.h(np.array([[0.25]]), np.array([[-0.5]]), np.array([[0.125]])),
        Generator.t(np.array([[1.5]])),
        Generator.g(np.array([[1.1]])),
        Generator.sigma(),
    ]
    for letter in letters:
        check = check_grid_consistency(letter, v, GridSpec(1, 1))
        assert check.passed, check


# ---------------------------------------------------------------------------
# Covariance and the theta transformation law
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["h([0.3];[-0.7];[0.2])", "t([1.5])", "g([-1.3])", "sigma"])
def test_covariance_generators(kind: str) -> None:
    _assert_passes(f"task = covariance-verify\nM = [2]\nword = {kind}\nsamples = 50\n", 50)


def test_covariance_words() -> None:
    _assert_passes(
        "task = covariance-verify\nM = [2 1; 1 2]\nn = 2\nword_length = 6\n"
        "samples = 50\nseed = 3\n",
        50,
    )


_E8_SHIFT = "h([1; 0; 0; 0; 0; 0; 0; 0];[0; 1; 0; 0; 0; 0; 0; -1];[0])"


@pytest.mark.parametrize("word", ["t([1])", "g([-1])", "sigma", _E8_SHIFT])
def test_theta_e8_generators(word: str) -> None:
    _assert_passes(f"task = theta-verify\nindex = E8\nomega = [1.2i]\nword = {word}\n", 1)


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5, 6])
def test_theta_e8_words(seed: int) -> None:
    _assert_passes(
        f"task = theta-verify\nindex = E8\nsamples = 20\nword_length = 4\nseed = {seed}\n", 20
    )


def test_theta_unimodular_odd_index() -> None:
    _assert_passes("task = theta-verify\nM = [1]\nsamples = 20\nseed = 5\n", 20)


def test_theta_degree_two_sigma() -> None:
    _assert_passes(
        "task = theta-verify\nM = [1]\nn = 2\nword = sigma\nsamples = 20\nseed = 7\n", 20
    )


@pytest.mark.parametrize(
    "shape", ["M = [1]\nn = 1", "M = [2 1; 1 2]\nn = 1", "M = [1]\nn = 2"]
)
def test_poisson(shape: str) -> None:
    _assert_passes(f"task = poisson-check\n{shape}\nsamples = 25\nseed = 6\n", 25)


# ---------------------------------------------------------------------------
# Lattice counts and Fourier coefficients
# ---------------------------------------------------------------------------


def test_e8_qexpansion_against_theta() -> None:
    e8 = IndexMatrix.e8()
    expansion = qexpansion(e8, 1, 7)
    assert expansion.coefficients == (1, 240, 2160, 6720, 17520, 30240, 60480, 82560)
    series = ThetaSeries(e8, eps=1e-12)
    for omega in (1j, 2j, 1 + 1j, 0.5 + 0.8j, 3j):
        theta = series(SiegelJacobiPoint.of(omega, np.zeros((8, 1))))
        assert abs(sum_qexpansion(expansion, omega) - theta) <= 1e-9


@pytest.mark.parametrize(
    "shape",
    [
        "M = [2]\nsamples = 32",
        "M = [1]\nlambda_gamma = 2\nsamples = 32",
        "M = [2 1; 1 2]\nsamples = 32",
    ],
)
def test_fourier_support_and_singularity(shape: str) -> None:
    result = run_job(_job(f"task = fourier-extract\n{shape}\nt_max = 2\nr_max = 2\n"))
    assert result.passed, result.body
    checks = result.body["results"][1:]
    carried = [c for c in checks if c["expected"]]
    assert carried
    assert all(c["supported"] and c["singular"] for c in carried)


# ---------------------------------------------------------------------------
# Determinism
# ---------------------------------------------------------------------------


def test_cli_reports_repeat(tmp_path: Path) -> None:
    job = tmp_path / "job.txt"
    job.write_text("task = theta-verify\nM = [1]\nsamples = 5\nseed = 8\n", encoding="utf-8")
    bodies = []
    for name in ("first", "second"):
        out = tmp_path / name
        result = CliRunner().invoke(app, ["run", "--config", str(job), "--out", str(out)])
        assert result.exit_code == 0, result.output
        bodies.append(out.with_name(name + ".json").read_text(encoding="utf-8"))
    first, second = (text.split('"meta"')[0] for text in bodies)
    assert first == second
