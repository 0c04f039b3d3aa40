"""Todd genera of manifolds known only through their characteristic numbers.

td_1 = c1/2, td_2 = (c2 + c1^2)/12, td_3 = c1 c2/24.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ToddData:
    c1_squared_number: int
    c2_tangent_number: int
    dimension: int

    def __post_init__(self):
        if self.dimension not in (4, 6):
            raise ValueError(f"dimension must be 4 or 6, got {self.dimension}")


def todd_genus_dim4(c1sq: int, c2: int = 0, *, split_tangent: bool = True) -> Fraction:
    """Todd genus (c2 + c1^2)/12 of a closed 4-manifold.

    With ``split_tangent`` the tangent bundle is stably C + L, which forces
    c2(TM) = 0; a nonzero ``c2`` is then rejected.
    """
    if split_tangent and c2 != 0:
        raise ValueError("a stably split tangent bundle C + L has c2(TM) = 0")
    return Fraction(c2 + c1sq, 12)


def todd_genus_dim6_split(c1_cubed: int) -> Fraction:
    """Todd genus c1 c2 / 24 of a 6-manifold whose tangent bundle is stably trivial plus a line.

    The total Chern class is 1 + c1(L), so c2 = 0 and the genus vanishes
    whatever ``c1_cubed`` is.
    """
    c2 = 0
    return Fraction(c1_cubed * c2, 24)


def c2_on_pi4_bu(a: int, b: int) -> int:
    """Value of a c1^2 + b c2 on the quaternionic Hopf bundle over S^4.

    H^2(S^4) = 0 kills c1; c2 of the Hopf bundle is the generator (sign
    fixed to +1).
    """
    c1 = 0
    c2 = 1
    return a * c1 * c1 + b * c2
