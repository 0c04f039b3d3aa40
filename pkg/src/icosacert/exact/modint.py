from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class ModInt:
    """Residue class modulo a positive integer."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other: ModInt | int) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.residue
        return other

    def __add__(self, other):
        return ModInt(self.residue + self._check(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return ModInt(self.residue - self._check(other), self.modulus)

    def __neg__(self):
        return ModInt(-self.residue, self.modulus)

    def __mul__(self, other):
        return ModInt(self.residue * self._check(other), self.modulus)

    __rmul__ = __mul__

    def order(self) -> int:
        """Additive order of the residue."""
        return self.modulus // gcd(self.residue, self.modulus)

    def __int__(self):
        return self.residue

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"
