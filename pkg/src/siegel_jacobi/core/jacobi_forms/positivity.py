"""The block condition on Fourier indices and the cusp/singular predicates.

A coefficient ``c(T, R)`` of a Jacobi form of index 𝓜 may be nonzero only if

    ( T/λ_Γ   R/2 )
    ( ᵗR/2    𝓜   )  ≥ 0;

the form is cuspidal when every such block is positive definite and singular
when every such block has determinant zero.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from siegel_jacobi.config.tolerances import TAU_PD_RELATIVE
from siegel_jacobi.core.errors import DimensionError

_SINGULAR_TOL = 1e-9


class PositivityMode(Enum):
    SEMI = "semi"
    STRICT = "strict"
    SINGULAR = "singular"


def fourier_block(
    T: np.ndarray,
    R: np.ndarray,
    M: np.ndarray,
    lambda_gamma: int = 1,
) -> np.ndarray:
    T = np.array(T, dtype=float, ndmin=2)
    R = np.array(R, dtype=float, ndmin=2)
    M = np.array(M, dtype=float, ndmin=2)
    n, m = T.shape[0], M.shape[0]
    if T.shape != (n, n) or M.shape != (m, m) or R.shape != (n, m):
        raise DimensionError(f"T {T.shape!r}, R {R.shape!r} and M {M.shape!r} do not fit")
    return np.block([[T / lambda_gamma, R / 2.0], [R.T / 2.0, M]])


def block_positivity(
    T: np.ndarray,
    R: np.ndarray,
    M: np.ndarray,
    lambda_gamma: int = 1,
    mode: PositivityMode | str = PositivityMode.SEMI,
) -> bool:
    """Evaluate the block predicate in the requested mode.

    ``semi`` is the support condition, ``strict`` the cusp condition and
    ``singular`` tests ``|det| ≤ 1e-9``.
    """
    block = fourier_block(T, R, M, lambda_gamma)
    mode = PositivityMode(mode)
    if mode is PositivityMode.SINGULAR:
        return bool(abs(np.linalg.det(block)) <= _SINGULAR_TOL)
    scale = max(1.0, float(np.max(np.abs(block))))
    smallest = float(np.linalg.eigvalsh(block).min())
    if mode is PositivityMode.STRICT:
        return smallest > TAU_PD_RELATIVE * scale
    return smallest >= -TAU_PD_RELATIVE * scale
