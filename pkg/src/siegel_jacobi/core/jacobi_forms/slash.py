"""The slash action on functions of H_{n,m} and the factor J_{k,𝓜}.

For ``x = (g, (λ, μ; κ))`` with ``g = (A, B; C, D)``,

    J_{k,𝓜}(x, (Ω, Z)) = e^{2πiσ(𝓜(Z + λΩ + μ)(CΩ + D)^{-1}C ᵗ(Z + λΩ + μ))}
                         · e^{−2πiσ(𝓜(λΩᵗλ + 2λᵗZ + κ + μᵗλ))}·det(CΩ + D)^k

and ``(f|_{k,𝓜}[x])(p) = J_{k,𝓜}(x, p)^{-1}·f(x·p)``.  Only the scalar weight
``ρ = det^k`` is implemented, with k a half-integer stored as 2k.

Θ_M is a Jacobi form of weight m/2 and index M/2; :meth:`SlashParameters.for_theta`
builds exactly those parameters, and then ``J_{m/2, M/2} = J_M``.
"""

from __future__ import annotations

import cmath
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from siegel_jacobi.core.covariance import factor_exponents
from siegel_jacobi.core.errors import DomainError
from siegel_jacobi.core.groups import JacobiElement, SiegelJacobiPoint, act_jacobi
from siegel_jacobi.core.linalg import IndexMatrix

JacobiFunction = Callable[[SiegelJacobiPoint], complex]


@dataclass(frozen=True)
class SlashParameters:
    """Weight ``k = weight_half / 2`` and index 𝓜 of a slash action.

    Attributes:
        weight_half: Twice the weight.
        index: Symmetric semi-positive half-integral 𝓜.
    """

    weight_half: int
    index: IndexMatrix

    def __post_init__(self) -> None:
        if not self.index.positive_semidefinite:
            raise DomainError("the index of a slash action must be positive semidefinite")
        if not self.index.half_integral:
            raise DomainError("the index of a slash action must be half-integral")

    @classmethod
    def for_theta(cls, index: IndexMatrix) -> SlashParameters:
        """Weight m/2 and index M/2, the parameters of Θ_M."""
        return cls(index.m, index.scaled(0.5))

    @property
    def weight(self) -> float:
        return self.weight_half / 2.0


def automorphic_factor_jk(
    params: SlashParameters,
    x: JacobiElement,
    p: SiegelJacobiPoint,
) -> complex:
    """Evaluate ``J_{k,𝓜}(x, p)`` with ``det^k = (det^{1/2})^{2k}`` on the branch analytic in Ω.

    Raises:
        SingularDenominatorError: ``CΩ + D`` is singular at *p*.
    """
    first, second, root = factor_exponents(params.index.matrix, x, p)
    return complex(
        cmath.exp(2j * np.pi * first)
        * cmath.exp(-2j * np.pi * second)
        * root**params.weight_half
    )


def slash(f: JacobiFunction, params: SlashParameters, x: JacobiElement) -> JacobiFunction:
    """Return ``f|_{k,𝓜}[x]`` as a new function of the point."""

    def slashed(p: SiegelJacobiPoint) -> complex:
        return f(act_jacobi(x, p)) / automorphic_factor_jk(params, x, p)

    return slashed
