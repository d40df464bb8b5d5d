"""Covariant map F^(M), automorphic factor J_M and their verification."""

from siegel_jacobi.core.covariance.factor import (
    AutomorphicFactorValue,
    automorphic_factor_J,
    covariant_vector,
    factor_exponents,
)
from siegel_jacobi.core.covariance.verify import (
    CocycleReport,
    CovarianceReport,
    check_cocycle,
    covariance_sides,
    expected_generator_scalar,
    verify_covariance,
    verify_covariance_batch,
)

__all__ = [
    "AutomorphicFactorValue",
    "CocycleReport",
    "CovarianceReport",
    "automorphic_factor_J",
    "check_cocycle",
    "covariance_sides",
    "covariant_vector",
    "expected_generator_scalar",
    "factor_exponents",
    "verify_covariance",
    "verify_covariance_batch",
]
