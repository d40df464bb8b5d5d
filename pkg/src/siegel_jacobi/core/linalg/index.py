"""The index matrix M and the arithmetic flags that gate each identity."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from siegel_jacobi.config.tolerances import E8_GRAM, INTEGRAL_TOL, UNIMODULAR_TOL
from siegel_jacobi.core.linalg.matrices import RealSymMatrix, is_positive_definite


def _is_integral(a: np.ndarray) -> bool:
    return bool(np.all(np.abs(a - np.rint(a)) <= INTEGRAL_TOL))


@dataclass(frozen=True, eq=False)
class IndexMatrix:
    """Symmetric real m×m matrix M with precomputed flags.

    ``even`` means integral with an even diagonal (so ``ᵗxMx`` is even for
    integral x); ``half_integral`` means ``2M`` is integral, which holds for
    M/2 whenever M is integral.
    """

    entries: RealSymMatrix
    positive_definite: bool = field(init=False)
    positive_semidefinite: bool = field(init=False)
    integral: bool = field(init=False)
    even: bool = field(init=False)
    unimodular: bool = field(init=False)
    half_integral: bool = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.entries, RealSymMatrix):
            object.__setattr__(self, "entries", RealSymMatrix(self.entries))
        a = self.entries.entries
        integral = _is_integral(a)
        even = integral and bool(np.all(np.rint(np.diag(a)) % 2 == 0))
        unimodular = integral and abs(abs(np.linalg.det(a)) - 1.0) <= UNIMODULAR_TOL
        half_integral = _is_integral(2.0 * a)
        eigenvalues = np.linalg.eigvalsh(a)
        scale = max(1.0, float(np.max(np.abs(a))))
        object.__setattr__(self, "positive_definite", is_positive_definite(self.entries))
        object.__setattr__(self, "positive_semidefinite", bool(eigenvalues.min() >= -1e-12 * scale))
        object.__setattr__(self, "integral", integral)
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "unimodular", bool(unimodular))
        object.__setattr__(self, "half_integral", half_integral)

    @classmethod
    def of(cls, a: np.ndarray | list | float) -> IndexMatrix:
        return cls(RealSymMatrix(np.array(a, dtype=float, ndmin=2)))

    @classmethod
    def e8(cls) -> IndexMatrix:
        """The E8 Gram matrix, the smallest positive definite even unimodular M."""
        return cls.of(E8_GRAM)

    @property
    def matrix(self) -> np.ndarray:
        return self.entries.entries

    @property
    def m(self) -> int:
        return self.entries.size

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def scaled(self, factor: float) -> IndexMatrix:
        return IndexMatrix.of(factor * self.matrix)

    def inverse(self) -> IndexMatrix:
        return IndexMatrix.of(np.linalg.inv(self.matrix))

    def flags(self) -> dict[str, bool]:
        return {
            "positive_definite": self.positive_definite,
            "integral": self.integral,
            "even": self.even,
            "unimodular": self.unimodular,
            "half_integral": self.half_integral,
        }

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(f"{x:g}" for x in row) for row in self.matrix)
        return f"IndexMatrix([{rows}])"
