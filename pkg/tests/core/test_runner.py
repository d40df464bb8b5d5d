"""Tests for the job runner."""

from __future__ import annotations

from typing import Any

import numpy as np
import pytest

from siegel_jacobi.config.job import JobConfig, load_job, parse_job_text
from siegel_jacobi.core import runner
from siegel_jacobi.core.covariance import CovarianceReport
from siegel_jacobi.core.errors import ThetaResourceError
from siegel_jacobi.core.groups import act_jacobi, word_element
from siegel_jacobi.core.runner import run_job
from siegel_jacobi.core.theta import ThetaSeries


def _job(text: str, **overrides: Any) -> JobConfig:
    return load_job(parse_job_text(text), **overrides)


class TestRunJob:
    """One small job per task."""

    def test_theta_eval(self) -> None:
        result = run_job(_job("task = theta-eval\nM = [2]\nomega = [i]\n"))
        assert result.passed
        (record,) = result.body["results"]
        assert record["value"]["re"] > 1.0
        assert record["tail_bound"] <= 1e-12
        assert result.body["inputs"]["omega"] == [[{"re": 0.0, "im": 1.0}]]

    def test_theta_verify(self) -> None:
        result = run_job(_job("task = theta-verify\nM = [1]\nsamples = 3\nseed = 2\n"))
        assert result.passed, result.body
        assert len(result.body["results"]) == 3

    def test_theta_verify_with_word_and_point(self) -> None:
        result = run_job(
            _job("task = theta-verify\nM = [1]\nomega = [0.2+1.3i]\nz = [0.1i]\nword = sigma\n")
        )
        assert result.passed
        assert result.body["asserted"] == 1

    def test_theta_verify_degree_two_sigma(self) -> None:
        result = run_job(
            _job("task = theta-verify\nM = [1]\nn = 2\nword = sigma\nsamples = 10\nseed = 3\n")
        )
        assert result.passed, result.body
        assert result.body["asserted"] == 10
        assert all(r["rho_sign"] == 1 for r in result.body["results"])

    def test_theta_verify_reports_rho_sign(self) -> None:
        result = run_job(
            _job("task = theta-verify\nM = [1]\nsamples = 6\nword_length = 4\nseed = 5\n")
        )
        assert result.passed, result.body
        assert {r["rho_sign"] for r in result.body["results"]} <= {1, -1}

    def test_theta_cases_fit_under_term_cap(self) -> None:
        config = _job("task = theta-verify\nM = [1]\nsamples = 10\nword_length = 4\n")
        series = ThetaSeries(config.index, 1e-12, max_terms=12, relative=True)
        cases = runner._theta_cases(config, np.random.default_rng(0), series)
        assert len(cases) == 10
        for word, p in cases:
            moved = act_jacobi(word_element(word, 1, 1), p)
            assert series.estimated_terms(p) <= 6
            assert series.estimated_terms(moved) <= 6

    @pytest.mark.slow
    def test_e8_words_match_generator_product(self) -> None:
        result = run_job(
            _job("task = theta-verify\nindex = E8\nsamples = 4\nword_length = 2\nseed = 1\n")
        )
        assert result.passed, result.body
        assert all(r["rho_sign"] == 1 for r in result.body["results"])

    def test_covariance_verify(self) -> None:
        result = run_job(_job("task = covariance-verify\nM = [2 1; 1 2]\nn = 2\nseed = 4\n"))
        assert result.passed
        assert result.body["asserted"] == 10

    def test_rep_check(self) -> None:
        result = run_job(_job("task = rep-check\nM = [-2]\nsamples = 3\n"))
        assert result.passed
        assert len(result.body["results"]) == 3

    def test_gaussian_integral_check(self) -> None:
        result = run_job(_job("task = gaussian-integral-check\nM = [1]\nsamples = 2\n"))
        assert result.passed

    def test_poisson_check(self) -> None:
        result = run_job(_job("task = poisson-check\nM = [2 1; 1 2]\nsamples = 2\n"))
        assert result.passed

    def test_qexpansion(self) -> None:
        result = run_job(_job("task = qexpansion\nM = [2]\nmax_order = 4\nomega = [i]\n"))
        expansion, comparison = result.body["results"]
        assert expansion["coefficients"] == [1, 2, 0, 0, 2]
        assert comparison["difference"] < 1e-6

    def test_fourier_extract(self) -> None:
        result = run_job(
            _job("task = fourier-extract\nM = [2]\nt_max = 2\nr_max = 2\nsamples = 16\n")
        )
        assert result.passed, result.body
        table, *checks = result.body["results"]
        assert table["samples"] == 16
        assert len(checks) == 15
        assert sum(c["expected"] for c in checks) == 3

    def test_resource_error_propagates(self) -> None:
        with pytest.raises(ThetaResourceError):
            run_job(_job("task = theta-eval\nindex = E8\nomega = [0.01i]\n"))

    def test_progress_callback(self) -> None:
        calls: list[tuple[str, float]] = []
        run_job(
            _job("task = qexpansion\nM = [2]\n"),
            progress_callback=lambda phase, pct: calls.append((phase, pct)),
        )
        assert [pct for _, pct in calls] == [0.0, 1.0]

    def test_failures_are_counted(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def forged(index: object, cases: list, max_workers: int = 1) -> list[CovarianceReport]:
            return [CovarianceReport("sigma", 0.0, 0.0, -1.0, 1.0, 1e-10)]

        monkeypatch.setattr(runner, "verify_covariance_batch", forged)
        result = run_job(_job("task = covariance-verify\nM = [1]\n"))
        assert not result.passed
        assert result.failures == 1
        assert result.body["failed"] == 1


class TestDeterminism:
    """Report bodies depend on the job alone."""

    @pytest.mark.parametrize(
        "text",
        [
            "task = covariance-verify\nM = [2 1; 1 2]\nseed = 7\nword_length = 4\n",
            "task = theta-verify\nM = [1]\nseed = 7\nsamples = 3\n",
            "task = rep-check\nM = [1]\nseed = 7\nsamples = 4\n",
        ],
    )
    def test_threads_do_not_change_body(self, text: str) -> None:
        serial = run_job(_job(text)).body
        threaded = run_job(_job(text, threads=2)).body
        assert serial == threaded

    def test_seed_changes_body(self) -> None:
        first = run_job(_job("task = covariance-verify\nM = [1]\nseed = 1\n")).body
        second = run_job(_job("task = covariance-verify\nM = [1]\nseed = 2\n")).body
        assert first["results"] != second["results"]
