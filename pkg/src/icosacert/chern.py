"""Degree <= 4 integral cohomology of BZ/n, BQ8 and B(binary icosahedral), and Chern classes.

Rings, truncated above degree 4:

* H*(BZ/n)  = Z[v]/(n v),            |v| = 2
* H*(BQ8)   = Z[a, b, u]/(8u, 2a, 2b, ab, a^2, b^2),  |a| = |b| = 2, |u| = 4
* H^4(BG^)  = Z/120, read through its restrictions to Z/8 + Z/3 + Z/5
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .characters import (
    CyclicDecomposition,
    Q8Decomposition,
    decompose_cyclic,
    decompose_q8,
    h1_complex_character,
    h1_holomorphic_character,
    trivial_character,
)
from .exact.abelian import FGAbelianGroup, direct_sum, ext_group, hom_group
from .exact.modint import ModInt
from .groups import CharacterVector, build_binary_icosahedral, icosahedral_generators


@dataclass(frozen=True)
class CyclicCohClass:
    """x0 + x2 v + x4 v^2 in H^{<=4}(BZ/n)."""

    modulus: int
    deg0: int
    deg2: ModInt
    deg4: ModInt

    @classmethod
    def make(cls, n: int, d0: int = 0, d2: int = 0, d4: int = 0) -> CyclicCohClass:
        return cls(n, d0, ModInt(d2, n), ModInt(d4, n))

    def __add__(self, o: CyclicCohClass) -> CyclicCohClass:
        return CyclicCohClass(self.modulus, self.deg0 + o.deg0, self.deg2 + o.deg2, self.deg4 + o.deg4)

    def __mul__(self, o: CyclicCohClass) -> CyclicCohClass:
        if self.modulus != o.modulus:
            raise ValueError("classes live in different rings")
        return CyclicCohClass(
            self.modulus,
            self.deg0 * o.deg0,
            self.deg2 * o.deg0 + o.deg2 * self.deg0,
            self.deg4 * o.deg0 + o.deg4 * self.deg0 + self.deg2 * o.deg2,
        )


@dataclass(frozen=True)
class Q8CohClass:
    """x0 + alpha a + beta b + gamma u in H^{<=4}(BQ8)."""

    deg0: int
    deg2: tuple[ModInt, ModInt]
    deg4: ModInt

    @classmethod
    def make(cls, d0: int = 0, a: int = 0, b: int = 0, u: int = 0) -> Q8CohClass:
        return cls(d0, (ModInt(a, 2), ModInt(b, 2)), ModInt(u, 8))

    def __add__(self, o: Q8CohClass) -> Q8CohClass:
        return Q8CohClass(
            self.deg0 + o.deg0,
            (self.deg2[0] + o.deg2[0], self.deg2[1] + o.deg2[1]),
            self.deg4 + o.deg4,
        )

    def __mul__(self, o: Q8CohClass) -> Q8CohClass:
        # degree-2 products vanish: ab = a^2 = b^2 = 0
        return Q8CohClass(
            self.deg0 * o.deg0,
            (self.deg2[0] * o.deg0 + o.deg2[0] * self.deg0, self.deg2[1] * o.deg0 + o.deg2[1] * self.deg0),
            self.deg4 * o.deg0 + o.deg4 * self.deg0,
        )


@dataclass(frozen=True)
class ChernPair:
    c1: CyclicCohClass | Q8CohClass
    c2: CyclicCohClass | Q8CohClass

    def total(self):
        one = _one_like(self.c1)
        return one + self.c1 + self.c2

    def whitney(self, other: ChernPair) -> ChernPair:
        """Chern classes of a direct sum."""
        return chern_from_total(self.total() * other.total())


def _one_like(x):
    if isinstance(x, CyclicCohClass):
        return CyclicCohClass.make(x.modulus, 1)
    return Q8CohClass.make(1)


def chern_from_total(t) -> ChernPair:
    if isinstance(t, CyclicCohClass):
        n = t.modulus
        return ChernPair(CyclicCohClass.make(n, 0, t.deg2.residue), CyclicCohClass.make(n, 0, 0, t.deg4.residue))
    return ChernPair(Q8CohClass.make(0, t.deg2[0].residue, t.deg2[1].residue), Q8CohClass.make(0, 0, 0, t.deg4.residue))


def chern_of_cyclic_rep(d: CyclicDecomposition) -> ChernPair:
    """c1, c2 as the first two elementary symmetric functions of the Chern roots r v."""
    n = d.modulus
    e1 = sum(r * m for r, m in enumerate(d.multiplicities))
    p2 = sum(r * r * m for r, m in enumerate(d.multiplicities))
    e2 = (e1 * e1 - p2) // 2
    return ChernPair(CyclicCohClass.make(n, 0, e1), CyclicCohClass.make(n, 0, 0, e2))


def chern_of_cyclic_rep_whitney(d: CyclicDecomposition) -> ChernPair:
    """Same classes as a product of the line-bundle total classes 1 + r v."""
    n = d.modulus
    total = CyclicCohClass.make(n, 1)
    for r, m in enumerate(d.multiplicities):
        for _ in range(m):
            total = total * CyclicCohClass.make(n, 1, r)
    return chern_from_total(total)


_Q8_LINE_CLASSES = {
    "a": Q8CohClass.make(1, a=1),
    "b": Q8CohClass.make(1, b=1),
    "ab": Q8CohClass.make(1, a=1, b=1),
    "U": Q8CohClass.make(1, u=1),  # c(U) = 1 + u
}


def chern_of_q8_rep(d: Q8Decomposition) -> ChernPair:
    total = Q8CohClass.make(1)
    for name, mult in (("a", d.a), ("b", d.b), ("ab", d.ab), ("U", d.U)):
        for _ in range(mult):
            total = total * _Q8_LINE_CLASSES[name]
    return chern_from_total(total)


@dataclass(frozen=True)
class GhatH4:
    """Element of H^4(BG^) = Z/120 by its restrictions to the Sylow subgroups."""

    mod8: ModInt
    mod3: ModInt
    mod5: ModInt

    @classmethod
    def make(cls, r8: int, r3: int, r5: int) -> GhatH4:
        return cls(ModInt(r8, 8), ModInt(r3, 3), ModInt(r5, 5))

    @classmethod
    def from_mod120(cls, r: int) -> GhatH4:
        return cls.make(r, r, r)

    def to_mod120(self) -> ModInt:
        # CRT: 120/8 = 15 ≡ 7 (mod 8), 120/3 = 40 ≡ 1 (mod 3), 120/5 = 24 ≡ 4 (mod 5)
        r = (
            self.mod8.residue * 15 * pow(15, -1, 8)
            + self.mod3.residue * 40 * pow(40, -1, 3)
            + self.mod5.residue * 24 * pow(24, -1, 5)
        )
        return ModInt(r, 120)

    def orders(self) -> tuple[int, int, int]:
        return (self.mod8.order(), self.mod3.order(), self.mod5.order())

    def to_json(self) -> dict:
        return {
            "mod8": self.mod8.residue,
            "mod3": self.mod3.residue,
            "mod5": self.mod5.residue,
            "mod120": self.to_mod120().residue,
            "order": crt_order(self),
        }


def crt_order(x: GhatH4) -> int:
    o8, o3, o5 = x.orders()
    out = 1
    for o in (o8, o3, o5):
        out = out * o // gcd(out, o)
    return out


def restricted_second_chern(char: CharacterVector) -> GhatH4:
    """c2 of a representation of the binary icosahedral group, read on its Sylow subgroups."""
    g = build_binary_icosahedral()
    gens = icosahedral_generators()
    c2_q8 = chern_of_q8_rep(decompose_q8(char)).c2.deg4
    c2_3 = chern_of_cyclic_rep(decompose_cyclic(g.power(gens.x3, 2), char)).c2.deg4
    c2_5 = chern_of_cyclic_rep(decompose_cyclic(g.power(gens.x5, 2), char)).c2.deg4
    return GhatH4(c2_q8, c2_3, c2_5)


def certify_order24(representation: str = "holomorphic") -> int:
    """Order of c2 of H^1(F; O) in H^4(BG^) = Z/120 (24 expected).

    ``representation`` may also be "complex" (H^1(F; C)) or "trivial"
    (the trivial 14-dimensional representation) for comparison runs.
    """
    return crt_order(restricted_second_chern(_representation(representation)))


def _representation(name: str) -> CharacterVector:
    if name == "holomorphic":
        return h1_holomorphic_character()
    if name == "complex":
        return h1_complex_character()
    if name == "trivial":
        return trivial_character(build_binary_icosahedral(), 14)
    raise ValueError(f"unknown representation {name!r}")


def uct_h3_with_z24(h2: FGAbelianGroup, h3: FGAbelianGroup) -> FGAbelianGroup:
    """H^3(-; Z/24) = Hom(H_3, Z/24) + Ext(H_2, Z/24)."""
    return direct_sum(hom_group(h3, 24), ext_group(h2, 24))
