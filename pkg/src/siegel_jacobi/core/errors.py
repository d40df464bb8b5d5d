"""Exception types raised across the package.

Each one derives from the built-in exception a caller would naturally catch,
so ``except ValueError`` keeps working for dimension and domain problems.
"""

from __future__ import annotations


class DimensionError(ValueError):
    """Shapes of the operands do not fit together."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class SingularDenominatorError(ArithmeticError):
    """``det(CΩ + D)`` (or a similar denominator) vanished numerically."""


class GridPreconditionError(ValueError):
    """A translation or evaluation does not land on the sampling grid."""


class AliasingError(RuntimeError):
    """A Fourier coefficient cannot be resolved to the requested accuracy."""


class ThetaResourceError(RuntimeError):
    """A lattice sum would need more terms than the hard cap allows.

    Attributes:
        terms_needed: Lower estimate of the number of lattice points required.
        partial_tail_bound: Tail bound achieved by the largest admissible
            truncation, or ``inf`` when not even that was computed.
    """

    def __init__(self, message: str, terms_needed: int, partial_tail_bound: float) -> None:
        super().__init__(message)
        self.terms_needed = terms_needed
        self.partial_tail_bound = partial_tail_bound


class ConfigError(ValueError):
    """A job file or CLI override could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
