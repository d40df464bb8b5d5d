"""Siegel–Jacobi configuration — tolerances, defaults and fixed matrices.

Job-file parsing lives in :mod:`siegel_jacobi.config.job` and is imported
explicitly by the CLI.
"""

from siegel_jacobi.config.tolerances import (
    DEFAULT_GRID_HALF_WIDTH,
    DEFAULT_GRID_SPACING,
    DEFAULT_THETA_EPS,
    E8_GRAM,
    MAX_THETA_TERMS,
    REPORT_SCHEMA,
    TAU_PD_RELATIVE,
    TAU_SING,
)

__all__ = [
    "DEFAULT_GRID_HALF_WIDTH",
    "DEFAULT_GRID_SPACING",
    "DEFAULT_THETA_EPS",
    "E8_GRAM",
    "MAX_THETA_TERMS",
    "REPORT_SCHEMA",
    "TAU_PD_RELATIVE",
    "TAU_SING",
]
