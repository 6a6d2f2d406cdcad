"""Finitely presented group toolkit: Tietze moves, abelianization,
coset enumeration and index-two Reidemeister–Schreier rewriting."""

from .coset import DEFAULT_CAP, EnumerationResult, check_table, todd_coxeter
from .presentation import (
    Presentation,
    canonical_relator,
    cyclic_reduce,
    free_reduce,
    invert,
)
from .schreier import (
    CharacterError,
    character_value,
    kills_relators,
    reidemeister_schreier,
    two_characters,
)
from .smith import AbelianInvariants, abelian_invariants, abelianization, hermite_rows, smith_diagonal
from .tietze import tietze_simplify

__all__ = [
    "AbelianInvariants",
    "CharacterError",
    "DEFAULT_CAP",
    "EnumerationResult",
    "Presentation",
    "abelian_invariants",
    "abelianization",
    "canonical_relator",
    "character_value",
    "check_table",
    "cyclic_reduce",
    "free_reduce",
    "hermite_rows",
    "invert",
    "kills_relators",
    "reidemeister_schreier",
    "smith_diagonal",
    "tietze_simplify",
    "todd_coxeter",
    "two_characters",
]
