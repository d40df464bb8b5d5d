"""Uniform periodic grids on ℝ^(m,n) and functions sampled on them."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.config.tolerances import DEFAULT_GRID_HALF_WIDTH, DEFAULT_GRID_SPACING
from siegel_jacobi.core.errors import DimensionError, GridPreconditionError


@dataclass(frozen=True)
class GridSpec:
    """The grid ``{−L + kδ : 0 ≤ k < 2L/δ}`` in each of the m·n coordinates.

    A point of ℝ^(m,n) is flattened row-major, so axis ``r*n + j`` carries the
    entry ``x[r, j]``.
    """

    m: int
    n: int
    half_width: float = DEFAULT_GRID_HALF_WIDTH
    spacing: float = DEFAULT_GRID_SPACING

    def __post_init__(self) -> None:
        if self.half_width <= 0 or self.spacing <= 0:
            raise GridPreconditionError("grid half-width and spacing must be positive")
        count = 2.0 * self.half_width / self.spacing
        if abs(count - round(count)) > 1e-9 or round(count) < 1:
            raise GridPreconditionError(
                f"2L/δ = {count!r} is not a positive integer"
            )

    @property
    def points_per_axis(self) -> int:
        return int(round(2.0 * self.half_width / self.spacing))

    @property
    def dim(self) -> int:
        return self.m * self.n

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.points_per_axis,) * self.dim

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.dim

    @property
    def axis(self) -> np.ndarray:
        return -self.half_width + self.spacing * np.arange(self.points_per_axis)

    def mesh(self) -> np.ndarray:
        """Return all grid points as an array of shape ``(*shape, m, n)``."""
        axes = np.meshgrid(*([self.axis] * self.dim), indexing="ij")
        return np.stack(axes, axis=-1).reshape(*self.shape, self.m, self.n)

    def grid_steps(self, shift: np.ndarray) -> np.ndarray:
        """Return ``shift/δ`` as integers, one per flattened axis.

        Raises:
            GridPreconditionError: Some entry is not a multiple of δ.
        """
        shift = np.asarray(shift, dtype=float)
        if shift.shape != (self.m, self.n):
            raise DimensionError(f"shift of shape {shift.shape!r} on an {self.m}x{self.n} grid")
        steps = shift.reshape(-1) / self.spacing
        rounded = np.rint(steps)
        if np.any(np.abs(steps - rounded) > 1e-9):
            raise GridPreconditionError(f"translation {shift.tolist()!r} is off the grid")
        return rounded.astype(int)


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Complex samples of a function on a :class:`GridSpec`."""

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=complex, copy=True)
        if values.shape != self.spec.shape:
            raise DimensionError(f"values {values.shape!r} do not match grid {self.spec.shape!r}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_callable(
        cls,
        spec: GridSpec,
        fn: Callable[[np.ndarray], np.ndarray],
    ) -> GridFunction:
        """Sample ``fn`` on the mesh; ``fn`` receives points shaped ``(..., m, n)``."""
        return cls(spec, fn(spec.mesh()))

    def norm(self) -> float:
        """Discrete L² norm ``(δ^{mn} Σ |f|²)^{1/2}``."""
        return float(np.sqrt(self.spec.cell_volume * np.sum(np.abs(self.values) ** 2)))

    def with_values(self, values: np.ndarray) -> GridFunction:
        return GridFunction(self.spec, values)

    def distance(self, other: GridFunction) -> float:
        return self.with_values(self.values - other.values).norm()

    def boundary_magnitude(self) -> float:
        """Largest |f| on the outermost layer of grid points."""
        v = np.abs(self.values)
        edges = [np.take(v, idx, axis=ax) for ax in range(v.ndim) for idx in (0, -1)]
        return float(max(e.max() for e in edges))


def parity(f: GridFunction) -> GridFunction:
    """Return ``x ↦ f(−x)``.

    On the grid ``−x_k = x_{N−k}`` (indices mod N), so the reflection is a
    reversal followed by a one-step roll on each axis.
    """
    values = f.values
    for ax in range(values.ndim):
        values = np.roll(np.flip(values, axis=ax), 1, axis=ax)
    return f.with_values(values)


def even_part(f: GridFunction) -> GridFunction:
    return f.with_values(0.5 * (f.values + parity(f).values))


def odd_part(f: GridFunction) -> GridFunction:
    return f.with_values(0.5 * (f.values - parity(f).values))
