"""Exhaustive, exact checks of prefix-increasing permutation counts and their q-analogues."""

from .permcore import Permutation, SizeLimitError
from .qpoly import QPolynomial
from .tableau import QuasiTableau, StandardTableau, Tableau, TableauPair

__all__ = [
    "Permutation",
    "QPolynomial",
    "QuasiTableau",
    "SizeLimitError",
    "StandardTableau",
    "Tableau",
    "TableauPair",
]
