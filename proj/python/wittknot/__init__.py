"""Rational Witt classes of knots and unknotting-number obstructions.

Thin wrapper around the compiled ``_core`` extension.  Matrices are lists
of lists of ints; diagonal forms travel as lists of rational strings such
as ``"7/4"`` so arbitrary precision survives the language boundary.
"""

from ._core import (
    determinant,
    diagonalize_symmetric,
    invariant,
    is_equal,
    lickorish_solvable,
    pretzel_class,
    rational_witt_class,
    signature,
    torsion_order,
    u1_obstruction,
    u2_candidate_filter,
)

__all__ = [
    "determinant",
    "diagonalize_symmetric",
    "invariant",
    "is_equal",
    "lickorish_solvable",
    "pretzel_class",
    "rational_witt_class",
    "signature",
    "torsion_order",
    "u1_obstruction",
    "u2_candidate_filter",
]
