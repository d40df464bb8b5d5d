"""Generator words: parsing, evaluation, random sampling and membership.

A word ``[γ₁, γ₂, …, γ_k]`` stands for the product ``γ₁γ₂⋯γ_k``; acting on a
point or a vector it applies ``γ_k`` first.  The textual form is a
comma-separated list of ``h(λ;μ;κ)``, ``t(b)``, ``g(α)`` and ``sigma``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from siegel_jacobi.config.literals import format_matrix, parse_real_matrix
from siegel_jacobi.core.errors import ConfigError
from siegel_jacobi.core.groups.generators import Generator, GeneratorKind
from siegel_jacobi.core.groups.model import JacobiElement, SiegelJacobiPoint
from siegel_jacobi.core.groups.operations import jacobi_mul
from siegel_jacobi.core.linalg import is_positive_definite

logger = logging.getLogger(__name__)

Word = Sequence[Generator]


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def _split_top_level(text: str, sep: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ConfigError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ConfigError(f"unbalanced brackets in {text!r}")
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _parse_letter(token: str) -> Generator:
    if token == "sigma":
        return Generator.sigma()
    if len(token) < 4 or token[1] != "(" or not token.endswith(")"):
        raise ConfigError(f"unknown generator {token!r}")
    head, inner = token[0], token[2:-1]
    if head == "h":
        parts = _split_top_level(inner, ";")
        if len(parts) != 3:
            raise ConfigError(f"h(...) needs lambda;mu;kappa, got {token!r}")
        lam, mu, kappa = (parse_real_matrix(p) for p in parts)
        try:
            return Generator.h(lam, mu, kappa)
        except ValueError as exc:
            raise ConfigError(f"{token!r}: {exc}") from exc
    if head == "t":
        return Generator.t(parse_real_matrix(inner))
    if head == "g":
        return Generator.g(parse_real_matrix(inner))
    raise ConfigError(f"unknown generator {token!r}")


def parse_word(text: str) -> list[Generator]:
    """Parse ``"t([2]), sigma, h([1];[0];[0])"`` into generators.

    Raises:
        ConfigError: The text is not a valid word.
    """
    tokens = [t for t in _split_top_level(text.strip(), ",") if t]
    if not tokens:
        raise ConfigError("empty generator word")
    return [_parse_letter(t) for t in tokens]


def format_letter(letter: Generator) -> str:
    if letter.kind is GeneratorKind.INVERSION:
        return "sigma"
    if letter.kind is GeneratorKind.HEISENBERG:
        h = letter.heisenberg
        return f"h({format_matrix(h.lam)};{format_matrix(h.mu)};{format_matrix(h.kappa)})"
    return f"{letter.kind.value}({format_matrix(letter.matrix)})"


def format_word(word: Word) -> str:
    return ", ".join(format_letter(letter) for letter in word)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def word_element(word: Word, n: int, m: int) -> JacobiElement:
    """Return the product ``γ₁γ₂⋯γ_k`` as a single element of G^J."""
    result = JacobiElement.identity(n, m)
    for letter in word:
        result = jacobi_mul(result, letter.to_jacobi(n, m))
    return result


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def _is_integer(a: np.ndarray) -> bool:
    return bool(np.all(np.abs(a - np.rint(a)) <= 1e-9))


def is_integral_letter(letter: Generator) -> bool:
    if letter.kind is GeneratorKind.INVERSION:
        return True
    if letter.kind is GeneratorKind.HEISENBERG:
        h = letter.heisenberg
        return _is_integer(h.lam) and _is_integer(h.mu) and _is_integer(h.kappa)
    if not _is_integer(letter.matrix):
        return False
    if letter.kind is GeneratorKind.LINEAR:
        return abs(abs(np.linalg.det(letter.matrix)) - 1.0) <= 1e-9
    return True


def is_integral_word(word: Word) -> bool:
    """True iff every letter lies in the integral Jacobi group Γ^J."""
    return all(is_integral_letter(letter) for letter in word)


def is_gamma_12_word(word: Word) -> bool:
    """True iff the word is integral and every ``t(b)`` has an even diagonal."""
    for letter in word:
        if not is_integral_letter(letter):
            return False
        if letter.kind is GeneratorKind.TRANSLATION:
            if np.any(np.rint(np.diag(letter.matrix)) % 2 != 0):
                return False
    return True


# ---------------------------------------------------------------------------
# Random sampling
# ---------------------------------------------------------------------------

_ALL_KINDS: tuple[GeneratorKind, ...] = tuple(GeneratorKind)


def _random_symmetric(rng: np.random.Generator, k: int, scale: float) -> np.ndarray:
    a = rng.uniform(-scale, scale, size=(k, k))
    return np.triu(a) + np.triu(a, 1).T


def _random_unimodular(rng: np.random.Generator, n: int) -> np.ndarray:
    alpha = np.eye(n)
    for _ in range(2 * n):
        op = rng.integers(3) if n > 1 else 2
        i, j = rng.choice(n, size=2, replace=False) if n > 1 else (0, 0)
        if op == 0:
            alpha[i] += rng.choice([-1, 1]) * alpha[j]
        elif op == 1:
            alpha[[i, j]] = alpha[[j, i]]
        else:
            alpha[i] *= -1 if rng.random() < 0.5 else 1
    return alpha


def random_letter(
    rng: np.random.Generator,
    n: int,
    m: int,
    kind: GeneratorKind,
    integral: bool = False,
    even_diagonal: bool = False,
) -> Generator:
    """Draw one generator of the requested kind.

    Real letters have entries in [−1, 1] (α is a perturbation of the identity
    with ``|det α| ≥ 0.2``); integral letters have small integer entries and
    unimodular α.
    """
    if kind is GeneratorKind.INVERSION:
        return Generator.sigma()
    if kind is GeneratorKind.HEISENBERG:
        if integral:
            lam = rng.integers(-1, 2, size=(m, n)).astype(float)
            mu = rng.integers(-1, 2, size=(m, n)).astype(float)
            s = np.rint(_random_symmetric(rng, m, 1.49))
        else:
            lam = rng.uniform(-1.0, 1.0, size=(m, n))
            mu = rng.uniform(-1.0, 1.0, size=(m, n))
            s = _random_symmetric(rng, m, 1.0)
        return Generator.h(lam, mu, s - mu @ lam.T)
    if kind is GeneratorKind.TRANSLATION:
        if integral:
            b = np.rint(_random_symmetric(rng, n, 2.49))
            if even_diagonal:
                b[np.diag_indices(n)] = 2 * np.rint(np.diag(b) / 2)
        else:
            b = _random_symmetric(rng, n, 1.0)
        return Generator.t(b)
    if integral:
        return Generator.g(_random_unimodular(rng, n))
    while True:
        alpha = np.eye(n) + 0.4 * rng.uniform(-1.0, 1.0, size=(n, n))
        if abs(np.linalg.det(alpha)) >= 0.2:
            return Generator.g(alpha)


def random_word(
    rng: np.random.Generator,
    n: int,
    m: int,
    length: int,
    integral: bool = False,
    even_diagonal: bool = False,
    kinds: Sequence[GeneratorKind] = _ALL_KINDS,
) -> list[Generator]:
    """Draw a word of the given length with letters chosen uniformly by kind."""
    word = [
        random_letter(rng, n, m, kinds[int(rng.integers(len(kinds)))], integral, even_diagonal)
        for _ in range(length)
    ]
    logger.debug("Random word of length %d: %s", length, format_word(word))
    return word


def random_point(
    rng: np.random.Generator,
    n: int,
    m: int,
    imag_range: tuple[float, float] = (0.8, 1.5),
    real_half_width: float = 0.5,
    z_half_width: float = 0.5,
) -> SiegelJacobiPoint:
    """Draw ``(Ω, Z)`` with ``Im Ω`` diagonally dominant inside *imag_range*."""
    lo, hi = imag_range
    while True:
        x = _random_symmetric(rng, n, real_half_width)
        y = np.diag(rng.uniform(lo, hi, size=n)) + _random_symmetric(rng, n, 0.1 * lo) * (
            1 - np.eye(n)
        )
        if is_positive_definite(y):
            break
    z = rng.uniform(-z_half_width, z_half_width, size=(m, n)) + 1j * rng.uniform(
        -z_half_width, z_half_width, size=(m, n)
    )
    return SiegelJacobiPoint.of(x + 1j * y, z)
