"""The multiplier ρ_M of the theta transformation law on generators.

With the law written as ``Θ_M(γ·p) = ρ_M(γ)·J_M(γ, p)·Θ_M(p)``:

==========  ====================================
generator   ρ_M
==========  ====================================
h(λ, μ; κ)  ``e^{−πiσ(M(κ + μᵗλ))}``
t(b)        ``1``
g(α)        ``((det α)^{1/2})^{−m}``
σ_n         ``((−i)^{1/2})^{mn}``
==========  ====================================
"""

from __future__ import annotations

import cmath
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.core.errors import DomainError
from siegel_jacobi.core.groups import Generator, GeneratorKind
from siegel_jacobi.core.linalg import IndexMatrix, principal_half_power

_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class CharacterValue:
    """A unit-modulus value of ρ_M."""

    value: complex

    def __post_init__(self) -> None:
        if abs(abs(self.value) - 1.0) > _UNIT_TOL:
            raise DomainError(f"character value {self.value!r} is not of modulus one")

    @property
    def eighth_root_error(self) -> float:
        return abs(self.value**8 - 1.0)


def character_rho(index: IndexMatrix, letter: Generator, n: int) -> CharacterValue:
    """Return ρ_M on one generator of degree *n*."""
    m = index.m
    match letter.kind:
        case GeneratorKind.HEISENBERG:
            h = letter.heisenberg
            phase = np.trace(index.matrix @ (h.kappa + h.mu @ h.lam.T))
            value = cmath.exp(-1j * np.pi * phase)
        case GeneratorKind.TRANSLATION:
            value = 1.0 + 0.0j
        case GeneratorKind.LINEAR:
            det = float(np.linalg.det(letter.matrix))
            if abs(abs(det) - 1.0) > 1e-9:
                raise DomainError(f"rho is tabulated for unimodular alpha, det = {det!r}")
            value = principal_half_power(det, -m)
        case GeneratorKind.INVERSION:
            value = principal_half_power(-1j, m * n)
        case _:
            raise DomainError(f"not a generator: {letter!r}")
    return CharacterValue(complex(value))


def word_character(index: IndexMatrix, word: Sequence[Generator], n: int) -> CharacterValue:
    """Product of the generator values along *word*."""
    value = 1.0 + 0.0j
    for letter in word:
        value *= character_rho(index, letter, n).value
    return CharacterValue(value)
