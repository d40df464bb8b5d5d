"""Groups — H^(n,m), Sp(n, ℝ), G^J, their generators and actions."""

from siegel_jacobi.core.groups.generators import (
    Generator,
    GeneratorKind,
    g0,
    generators,
    sigma0,
    t0,
)
from siegel_jacobi.core.groups.model import (
    HeisenbergElement,
    JacobiElement,
    SiegelJacobiPoint,
    SymplecticElement,
    standard_symplectic_form,
)
from siegel_jacobi.core.groups.operations import (
    BracketCoordinates,
    act_jacobi,
    act_siegel,
    bracket_inv,
    bracket_mul,
    from_bracket,
    heisenberg_inv,
    heisenberg_mul,
    jacobi_inv,
    jacobi_mul,
    pure_heisenberg,
    pure_symplectic,
    symplectic_inv,
    symplectic_mul,
    to_bracket,
)
from siegel_jacobi.core.groups.words import (
    Word,
    format_word,
    is_gamma_12_word,
    is_integral_word,
    parse_word,
    random_letter,
    random_point,
    random_word,
    word_element,
)

__all__ = [
    "BracketCoordinates",
    "Generator",
    "GeneratorKind",
    "HeisenbergElement",
    "JacobiElement",
    "SiegelJacobiPoint",
    "SymplecticElement",
    "Word",
    "act_jacobi",
    "act_siegel",
    "bracket_inv",
    "bracket_mul",
    "format_word",
    "from_bracket",
    "g0",
    "generators",
    "heisenberg_inv",
    "heisenberg_mul",
    "is_gamma_12_word",
    "is_integral_word",
    "jacobi_inv",
    "jacobi_mul",
    "parse_word",
    "pure_heisenberg",
    "pure_symplectic",
    "random_letter",
    "random_point",
    "random_word",
    "sigma0",
    "standard_symplectic_form",
    "symplectic_inv",
    "symplectic_mul",
    "t0",
    "word_element",
]
