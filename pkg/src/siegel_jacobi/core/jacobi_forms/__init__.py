"""Jacobi forms: slash action, Fourier coefficients and the block predicates."""

from siegel_jacobi.core.jacobi_forms.fourier import (
    FourierIndex,
    FourierTable,
    fourier_coefficients,
)
from siegel_jacobi.core.jacobi_forms.positivity import (
    PositivityMode,
    block_positivity,
    fourier_block,
)
from siegel_jacobi.core.jacobi_forms.slash import (
    JacobiFunction,
    SlashParameters,
    automorphic_factor_jk,
    slash,
)

__all__ = [
    "FourierIndex",
    "FourierTable",
    "JacobiFunction",
    "PositivityMode",
    "SlashParameters",
    "automorphic_factor_jk",
    "block_positivity",
    "fourier_block",
    "fourier_coefficients",
    "slash",
]
