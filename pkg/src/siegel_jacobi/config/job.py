"""Job files: a line-oriented ``key = value`` grammar.

    file    = { line } ;
    line    = blank | comment | entry ;
    comment = "#" { any } ;
    entry   = key "=" value [ comment ] ;
    value   = matrix | word | scalar ;
    matrix  = "[" row { ";" row } "]" ;
    word    = generator { "," generator } ;
    generator = "h(" matrix ";" matrix ";" matrix ")" | "t(" matrix ")"
              | "g(" matrix ")" | "sigma" ;

Matrices and complex numbers follow :mod:`siegel_jacobi.config.literals`.
Every error carries the line number of the offending entry.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from siegel_jacobi.config.literals import parse_matrix, parse_real_matrix
from siegel_jacobi.config.tolerances import (
    DEFAULT_FOURIER_IMAG_OMEGA,
    DEFAULT_FOURIER_IMAG_Z,
    DEFAULT_THETA_EPS,
)
from siegel_jacobi.core.errors import ConfigError
from siegel_jacobi.core.groups import Generator, GeneratorKind, parse_word
from siegel_jacobi.core.linalg import IndexMatrix, is_positive_definite

logger = logging.getLogger(__name__)


class Task(Enum):
    THETA_EVAL = "theta-eval"
    THETA_VERIFY = "theta-verify"
    COVARIANCE_VERIFY = "covariance-verify"
    REP_CHECK = "rep-check"
    GAUSSIAN_INTEGRAL_CHECK = "gaussian-integral-check"
    POISSON_CHECK = "poisson-check"
    QEXPANSION = "qexpansion"
    FOURIER_EXTRACT = "fourier-extract"


TASK_DESCRIPTIONS: dict[Task, str] = {
    Task.THETA_EVAL: "Evaluate Theta_M(Omega, Z) with a certified tail bound.",
    Task.THETA_VERIFY: "Check the theta transformation law on generator words.",
    Task.COVARIANCE_VERIFY: "Check covariance of F^(M) under generator words.",
    Task.REP_CHECK: "Check the Schrödinger homomorphism law on a grid.",
    Task.GAUSSIAN_INTEGRAL_CHECK: "Compare the Gaussian integral with quadrature.",
    Task.POISSON_CHECK: "Compare both sides of Poisson summation for Gaussians.",
    Task.QEXPANSION: "Count lattice vectors by norm (q-expansion of Theta_M).",
    Task.FOURIER_EXTRACT: "Extract Fourier coefficients of Theta_M by sampling.",
}

_KEY_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")

_KNOWN_KEYS: frozenset[str] = frozenset(
    {
        "task",
        "M",
        "index",
        "omega",
        "z",
        "word",
        "eps",
        "seed",
        "samples",
        "word_length",
        "n",
        "m",
        "c",
        "max_order",
        "lambda_gamma",
        "t_max",
        "r_max",
        "imag_omega",
        "imag_z",
        "output",
    }
)

# Tasks that integrate or sample on ℝ^(m,n) and so need m·n ≤ 2.
_LOW_DIMENSION_TASKS: frozenset[Task] = frozenset({Task.GAUSSIAN_INTEGRAL_CHECK, Task.REP_CHECK})


@dataclass(frozen=True)
class JobEntry:
    value: str
    line: int


@dataclass(frozen=True, eq=False)
class JobConfig:
    """A validated job.

    ``samples`` is the number of random cases for verification tasks and the
    DFT size N for ``fourier-extract``; ``None`` picks the task default.
    """

    task: Task
    index: IndexMatrix
    n: int = 1
    omega: np.ndarray | None = None
    z: np.ndarray | None = None
    word: tuple[Generator, ...] | None = None
    word_text: str | None = None
    eps: float = DEFAULT_THETA_EPS
    seed: int = 0
    samples: int | None = None
    word_length: int = 3
    c: np.ndarray | None = None
    max_order: int = 3
    lambda_gamma: int = 1
    t_max: float = 2.0
    r_max: int = 2
    imag_omega: float = DEFAULT_FOURIER_IMAG_OMEGA
    imag_z: float = DEFAULT_FOURIER_IMAG_Z
    output: Path = Path("report")
    threads: int = 1
    lines: dict[str, int] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return self.index.m

    @property
    def central_character(self) -> np.ndarray:
        return self.index.matrix if self.c is None else self.c

    def sample_count(self, default: int) -> int:
        return default if self.samples is None else self.samples

    def echo(self) -> dict[str, Any]:
        """The inputs as they are echoed into a report body (seed included, threads not)."""
        echoed: dict[str, Any] = {
            "task": self.task.value,
            "M": self.index.matrix,
            "n": self.n,
            "eps": self.eps,
            "seed": self.seed,
        }
        optional = {
            "omega": self.omega,
            "z": self.z,
            "word": self.word_text,
            "samples": self.samples,
            "c": self.c,
        }
        echoed.update({k: v for k, v in optional.items() if v is not None})
        match self.task:
            case Task.THETA_VERIFY | Task.COVARIANCE_VERIFY if self.word is None:
                echoed["word_length"] = self.word_length
            case Task.QEXPANSION:
                echoed["max_order"] = self.max_order
            case Task.FOURIER_EXTRACT:
                echoed.update(
                    lambda_gamma=self.lambda_gamma,
                    t_max=self.t_max,
                    r_max=self.r_max,
                    imag_omega=self.imag_omega,
                    imag_z=self.imag_z,
                )
        return echoed


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_job_text(text: str) -> dict[str, JobEntry]:
    """Split a job file into entries keyed by name.

    Raises:
        ConfigError: A line is not ``key = value``, a key is unknown or repeated.
    """
    entries: dict[str, JobEntry] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", line=number)
        if not _KEY_RE.match(key):
            raise ConfigError(f"invalid key {key!r}", line=number)
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", line=number)
        if key in entries:
            raise ConfigError(
                f"duplicate key {key!r} (first set on line {entries[key].line})", line=number
            )
        entries[key] = JobEntry(value, number)
    return entries


def _convert(entry: JobEntry, kind: type, key: str) -> Any:
    try:
        value = kind(entry.value)
    except ValueError as exc:
        message = f"{key} must be {kind.__name__}, got {entry.value!r}"
        raise ConfigError(message, entry.line) from exc
    return value


def _at_line(entry: JobEntry | None, fn: Any, *args: Any) -> Any:
    """Call *fn* and attach the entry's line number to any ConfigError."""
    try:
        return fn(*args)
    except ConfigError as exc:
        if entry is None or exc.line is not None:
            raise
        raise ConfigError(str(exc), line=entry.line) from exc


def _index_matrix(entries: dict[str, JobEntry]) -> IndexMatrix:
    matrix_entry, named_entry, m_entry = entries.get("M"), entries.get("index"), entries.get("m")
    if matrix_entry and named_entry:
        raise ConfigError("give either M or index, not both", named_entry.line)
    if named_entry:
        if named_entry.value.upper() != "E8":
            raise ConfigError(f"unknown named index {named_entry.value!r}", named_entry.line)
        index = IndexMatrix.e8()
    elif matrix_entry:
        a = _at_line(matrix_entry, parse_real_matrix, matrix_entry.value)
        if a.shape[0] != a.shape[1] or not np.allclose(a, a.T):
            raise ConfigError(f"M must be square and symmetric, got {a.shape!r}", matrix_entry.line)
        index = IndexMatrix.of(a)
    else:
        size = _convert(m_entry, int, "m") if m_entry else 1
        index = IndexMatrix.of(np.eye(size))
    if m_entry and _convert(m_entry, int, "m") != index.m:
        raise ConfigError(f"m = {m_entry.value} but M is {index.m}x{index.m}", m_entry.line)
    return index


def _check_word(word: list[Generator], n: int, m: int, entry: JobEntry) -> None:
    for letter in word:
        match letter.kind:
            case GeneratorKind.HEISENBERG:
                if letter.heisenberg.lam.shape != (m, n):
                    raise ConfigError(
                        f"h(...) has lambda {letter.heisenberg.lam.shape!r}, expected {(m, n)!r}",
                        entry.line,
                    )
            case GeneratorKind.TRANSLATION | GeneratorKind.LINEAR:
                if letter.matrix.shape != (n, n):
                    raise ConfigError(
                        f"{letter.kind.value}(...) is {letter.matrix.shape!r}, expected {(n, n)!r}",
                        entry.line,
                    )


def load_job(entries: dict[str, JobEntry], **overrides: Any) -> JobConfig:
    """Validate parsed entries and apply command-line overrides.

    Overrides with value ``None`` are ignored; recognised overrides are
    ``task``, ``eps``, ``seed``, ``output`` and ``threads``.

    Raises:
        ConfigError: A value is malformed, out of range or of the wrong shape.
    """
    overrides = {k: v for k, v in overrides.items() if v is not None}
    task_name = overrides.get("task") or (entries["task"].value if "task" in entries else None)
    if task_name is None:
        raise ConfigError("no task given (set 'task' or pass --task)")
    try:
        task = Task(task_name)
    except ValueError as exc:
        line = entries["task"].line if "task" in entries and "task" not in overrides else None
        raise ConfigError(f"unknown task {task_name!r}", line) from exc

    index = _index_matrix(entries)
    m = index.m
    values: dict[str, Any] = {}

    omega_entry = entries.get("omega")
    n_entry = entries.get("n")
    n = _convert(n_entry, int, "n") if n_entry else 1
    if omega_entry:
        omega = _at_line(omega_entry, parse_matrix, omega_entry.value)
        if omega.shape[0] != omega.shape[1] or not np.allclose(omega, omega.T):
            raise ConfigError(
                f"omega must be square and symmetric, got {omega.shape!r}", omega_entry.line
            )
        if not is_positive_definite(omega.imag):
            raise ConfigError("Im omega must be positive definite", omega_entry.line)
        if n_entry and omega.shape[0] != n:
            raise ConfigError(f"n = {n} but omega is {omega.shape[0]}-square", n_entry.line)
        n = omega.shape[0]
        values["omega"] = omega
    if n < 1:
        raise ConfigError(f"n must be positive, got {n}", n_entry.line if n_entry else None)

    if z_entry := entries.get("z"):
        z = _at_line(z_entry, parse_matrix, z_entry.value)
        if z.shape == (1, 1) and z[0, 0] == 0 and (m, n) != (1, 1):
            z = np.zeros((m, n), dtype=complex)
        if z.shape != (m, n):
            raise ConfigError(f"z is {z.shape!r}, expected {(m, n)!r}", z_entry.line)
        values["z"] = z
    elif "omega" in values:
        values["z"] = np.zeros((m, n), dtype=complex)

    if word_entry := entries.get("word"):
        word = _at_line(word_entry, parse_word, word_entry.value)
        _check_word(word, n, m, word_entry)
        values["word"] = tuple(word)
        values["word_text"] = word_entry.value

    if c_entry := entries.get("c"):
        c = _at_line(c_entry, parse_real_matrix, c_entry.value)
        if c.shape != (m, m) or not np.allclose(c, c.T) or not np.any(c):
            raise ConfigError(f"c must be a nonzero symmetric {m}x{m} matrix", c_entry.line)
        values["c"] = c

    for key, kind in (
        ("eps", float),
        ("seed", int),
        ("samples", int),
        ("word_length", int),
        ("max_order", int),
        ("lambda_gamma", int),
        ("t_max", float),
        ("r_max", int),
        ("imag_omega", float),
        ("imag_z", float),
    ):
        if entry := entries.get(key):
            values[key] = _convert(entry, kind, key)
    if entry := entries.get("output"):
        values["output"] = Path(entry.value)
    values.update({k: v for k, v in overrides.items() if k != "task"})
    if "output" in values:
        values["output"] = Path(values["output"])

    def line_of(key: str) -> int | None:
        return entries[key].line if key in entries and key not in overrides else None

    if values.get("eps", DEFAULT_THETA_EPS) <= 0:
        raise ConfigError(f"eps must be positive, got {values['eps']!r}", line_of("eps"))
    for key in ("samples", "word_length", "lambda_gamma", "imag_omega", "threads"):
        if key in values and values[key] <= 0:
            raise ConfigError(f"{key} must be positive, got {values[key]!r}", line_of(key))
    for key in ("max_order", "t_max", "r_max"):
        if key in values and values[key] < 0:
            raise ConfigError(f"{key} must be non-negative, got {values[key]!r}", line_of(key))

    config = JobConfig(
        task=task,
        index=index,
        n=n,
        lines={k: e.line for k, e in entries.items()},
        **values,
    )
    _check_task(config)
    logger.debug("Loaded job %s (M %dx%d, n=%d)", task.value, m, m, n)
    return config


def _check_task(config: JobConfig) -> None:
    lines = config.lines
    m_line = lines.get("M") or lines.get("index") or lines.get("m")
    task = config.task
    needs_pd = task not in (Task.REP_CHECK,)
    if needs_pd and not config.index.positive_definite:
        raise ConfigError(f"{task.value} needs a positive definite M", m_line)
    if task is Task.THETA_EVAL and config.omega is None:
        raise ConfigError("theta-eval needs omega")
    if task in _LOW_DIMENSION_TASKS and config.m * config.n > 2:
        raise ConfigError(f"{task.value} supports m*n <= 2, got m={config.m}, n={config.n}", m_line)
    if task is Task.QEXPANSION:
        if config.n != 1:
            raise ConfigError("qexpansion needs n = 1", lines.get("n") or lines.get("omega"))
        if not config.index.even:
            raise ConfigError("qexpansion needs an even integral M", m_line)
    if task is Task.FOURIER_EXTRACT:
        if config.n != 1:
            raise ConfigError("fourier-extract needs n = 1", lines.get("n") or lines.get("omega"))
        if config.m > 2:
            raise ConfigError(f"fourier-extract needs m <= 2, got m={config.m}", m_line)
        if not config.index.integral:
            raise ConfigError("fourier-extract needs an integral M", m_line)
        if not config.index.scaled(config.lambda_gamma).even:
            raise ConfigError(
                f"Theta_M is not periodic under Omega -> Omega + {config.lambda_gamma}; "
                "use an even lambda_gamma for odd M",
                lines.get("lambda_gamma"),
            )


def parse_job_file(path: Path, **overrides: Any) -> JobConfig:
    """Read, parse and validate a job file.

    Raises:
        ConfigError: The file cannot be read or fails validation.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read job file {str(path)!r}: {exc}") from exc
    return load_job(parse_job_text(text), **overrides)

