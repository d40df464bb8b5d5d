"""Schrödinger–Weil representation on Gaussian vectors and on grids."""

from siegel_jacobi.core.weil.actions import (
    act_galpha,
    act_heisenberg,
    act_sigma,
    act_tb,
    apply_letter,
    apply_word,
)
from siegel_jacobi.core.weil.gaussian import (
    GaussianVector,
    gaussian_integral,
    parity_vector,
    sample,
)
from siegel_jacobi.core.weil.grid_actions import (
    GridConsistencyCheck,
    check_grid_consistency,
    grid_apply_letter,
    grid_galpha,
    grid_heisenberg,
    grid_sigma,
    grid_tb,
)
from siegel_jacobi.core.weil.quadrature import (
    GaussianIntegralCheck,
    check_gaussian_integral,
    composite_rule,
    integrate,
    quadrature_sigma,
)

__all__ = [
    "GaussianIntegralCheck",
    "GaussianVector",
    "GridConsistencyCheck",
    "act_galpha",
    "act_heisenberg",
    "act_sigma",
    "act_tb",
    "apply_letter",
    "apply_word",
    "check_gaussian_integral",
    "check_grid_consistency",
    "composite_rule",
    "gaussian_integral",
    "grid_apply_letter",
    "grid_galpha",
    "grid_heisenberg",
    "grid_sigma",
    "grid_tb",
    "integrate",
    "parity_vector",
    "quadrature_sigma",
    "sample",
]
