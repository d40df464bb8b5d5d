"""Θ_M: certified lattice sums, ρ_M, Poisson summation and the transformation law."""

from siegel_jacobi.core.theta.character import (
    CharacterValue,
    character_rho,
    word_character,
)
from siegel_jacobi.core.theta.lattice import (
    choose_bound,
    cholesky_upper,
    enumerate_ellipsoid,
    tail_bound,
)
from siegel_jacobi.core.theta.poisson import PoissonReport, fourier_dual, poisson_check
from siegel_jacobi.core.theta.series import (
    QExpansion,
    ThetaEvaluation,
    ThetaSeries,
    gaussian_lattice_sum,
    qexpansion,
    sum_qexpansion,
    theta_aliasing_bound,
    theta_eval,
    theta_fourier_support,
    theta_sum,
)
from siegel_jacobi.core.theta.verify import (
    ThetaVerification,
    is_strict_setting,
    verify_theta_transformation,
)

__all__ = [
    "CharacterValue",
    "PoissonReport",
    "QExpansion",
    "ThetaEvaluation",
    "ThetaSeries",
    "ThetaVerification",
    "character_rho",
    "choose_bound",
    "cholesky_upper",
    "enumerate_ellipsoid",
    "fourier_dual",
    "gaussian_lattice_sum",
    "is_strict_setting",
    "poisson_check",
    "qexpansion",
    "sum_qexpansion",
    "tail_bound",
    "theta_aliasing_bound",
    "theta_eval",
    "theta_fourier_support",
    "theta_sum",
    "verify_theta_transformation",
    "word_character",
]
