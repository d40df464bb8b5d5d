"""Scalar and matrix literals used in job files.

Complex numbers are written ``a+bi`` (``i``, ``-2.5i``, ``1e-3-4i`` …) and
matrices row-major in brackets with ``;`` between rows and whitespace
between entries: ``[1 0; 0 1]``.  A bare scalar is a 1×1 matrix.
"""

from __future__ import annotations

import numpy as np

from siegel_jacobi.core.errors import ConfigError


def parse_complex(token: str) -> complex:
    text = token.strip()
    if not text or "j" in text.lower():
        raise ConfigError(f"invalid complex literal {token!r}")
    try:
        return complex(text.replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise ConfigError(f"invalid complex literal {token!r}") from exc


def parse_matrix(text: str) -> np.ndarray:
    """Parse ``[a b; c d]`` (or a bare scalar) into a 2-D complex array.

    Raises:
        ConfigError: Unbalanced brackets, ragged rows or a bad entry.
    """
    body = text.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise ConfigError(f"unbalanced matrix literal {text!r}")
        body = body[1:-1]
    rows = [row.split() for row in body.split(";")]
    if not rows or any(not row for row in rows):
        raise ConfigError(f"empty row in matrix literal {text!r}")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ConfigError(f"ragged matrix literal {text!r}")
    return np.array([[parse_complex(tok) for tok in row] for row in rows], dtype=complex)


def parse_real_matrix(text: str) -> np.ndarray:
    values = parse_matrix(text)
    if np.any(values.imag != 0):
        raise ConfigError(f"expected a real matrix, got {text!r}")
    return values.real.copy()


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.17g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.17g}{sign}{abs(z.imag):.17g}i"


def format_matrix(a: np.ndarray) -> str:
    a = np.atleast_2d(a)
    if np.iscomplexobj(a):
        rows = (" ".join(format_complex(x) for x in row) for row in a)
    else:
        rows = (" ".join(f"{x:.17g}" for x in row) for row in a)
    return "[" + "; ".join(rows) + "]"
