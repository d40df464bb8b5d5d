"""Schrödinger representation W_c of the Heisenberg group on grid functions."""

from siegel_jacobi.core.schrodinger.grid import (
    GridFunction,
    GridSpec,
    even_part,
    odd_part,
    parity,
)
from siegel_jacobi.core.schrodinger.representation import (
    CentralCharacter,
    RepresentationCheck,
    central_character,
    check_homomorphism,
    mackey_decompose,
    random_grid_heisenberg,
    schrodinger_apply,
    schrodinger_phase,
)

__all__ = [
    "CentralCharacter",
    "GridFunction",
    "GridSpec",
    "RepresentationCheck",
    "central_character",
    "check_homomorphism",
    "even_part",
    "mackey_decompose",
    "odd_part",
    "parity",
    "random_grid_heisenberg",
    "schrodinger_apply",
    "schrodinger_phase",
]
