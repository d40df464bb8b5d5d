"""Numeric tolerances, defaults and fixed matrices shared by every module.

Everything here is a plain module-level constant so callers can import
exactly what they need and tests can monkeypatch a single value.
"""

from __future__ import annotations

import numpy as np

# ---------------------------------------------------------------------------
# Matrix predicates
# ---------------------------------------------------------------------------

# Eigenvalue cutoff for positive definiteness, relative to the max-norm.
TAU_PD_RELATIVE: float = 1e-12

# Absolute cutoff on |det(CΩ + D)| below which a denominator is singular.
TAU_SING: float = 1e-12

HEISENBERG_SYMMETRY_TOL: float = 1e-12
SYMPLECTIC_TOL: float = 1e-12
UNIMODULAR_TOL: float = 1e-9
INTEGRAL_TOL: float = 1e-9

# ---------------------------------------------------------------------------
# Discretisation
# ---------------------------------------------------------------------------

DEFAULT_GRID_HALF_WIDTH: float = 8.0
DEFAULT_GRID_SPACING: float = 1.0 / 16.0

# Composite Gauss–Legendre on [-L, L]: PANELS equal panels of NODES_PER_PANEL nodes.
QUADRATURE_HALF_WIDTH: float = 12.0
QUADRATURE_PANELS: int = 24
QUADRATURE_NODES_PER_PANEL: int = 48

DEFAULT_DFT_SAMPLES: int = 64
DEFAULT_FOURIER_IMAG_OMEGA: float = 0.25
DEFAULT_FOURIER_IMAG_Z: float = 0.0

# ---------------------------------------------------------------------------
# Theta series
# ---------------------------------------------------------------------------

MAX_THETA_TERMS: int = 10**6
DEFAULT_THETA_EPS: float = 1e-12

# ---------------------------------------------------------------------------
# Verification thresholds
# ---------------------------------------------------------------------------

COVARIANCE_TOL: float = 1e-12
EIGHTH_ROOT_TOL: float = 1e-8
THETA_VERIFY_TOL: float = 1e-8
# Floor on the modulus a relative error is divided by.
TINY_MODULUS: float = 1e-300
POISSON_TOL: float = 1e-9
HOMOMORPHISM_TOL: float = 1e-10
GRID_CONSISTENCY_TOL: float = 1e-8
GAUSSIAN_INTEGRAL_TOL: float = 1e-8

REPORT_SCHEMA: str = "report-v1"

# ---------------------------------------------------------------------------
# E8
# ---------------------------------------------------------------------------

# Cartan matrix of E8 in Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2
# attached to node 4.  Even, unimodular, positive definite.
_E8_EDGES: tuple[tuple[int, int], ...] = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _build_e8_gram() -> np.ndarray:
    gram = 2.0 * np.eye(8)
    for a, b in _E8_EDGES:
        gram[a - 1, b - 1] = gram[b - 1, a - 1] = -1.0
    gram.setflags(write=False)
    return gram


E8_GRAM: np.ndarray = _build_e8_gram()
