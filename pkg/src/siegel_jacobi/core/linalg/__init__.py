"""Matrix core — symmetric matrix types, predicates and branch conventions."""

from siegel_jacobi.core.linalg.index import IndexMatrix
from siegel_jacobi.core.linalg.matrices import (
    ComplexSymMatrix,
    RealSymMatrix,
    analytic_sqrt_det,
    det_symplectic_denominator,
    is_positive_definite,
    principal_half_power,
    principal_sqrt,
    sqrt_det_denominator,
    symmetrize,
    trace_product,
)

__all__ = [
    "ComplexSymMatrix",
    "IndexMatrix",
    "RealSymMatrix",
    "analytic_sqrt_det",
    "det_symplectic_denominator",
    "is_positive_definite",
    "principal_half_power",
    "principal_sqrt",
    "sqrt_det_denominator",
    "symmetrize",
    "trace_product",
]
