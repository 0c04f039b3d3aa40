"""Exact arithmetic: the cyclotomic field Q(zeta_60), residues, integer matrices, abelian groups."""

from .abelian import AbHom, FGAbelianGroup
from .cyclotomic import CyclotomicNumber
from .intmatrix import IntMatrix, smith_normal_form
from .modint import ModInt

__all__ = ["AbHom", "CyclotomicNumber", "FGAbelianGroup", "IntMatrix", "ModInt", "smith_normal_form"]
