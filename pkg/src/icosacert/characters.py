"""Characters of the binary icosahedral group on H^1(F; C) and H^1(F; O)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact.cyclotomic import ORDER, ONE, CyclotomicNumber
from .groups import (
    Q8_LABELS,
    CharacterVector,
    GroupModel,
    build_binary_icosahedral,
    q8_irreducible,
    sylow_subgroup,
)
from .surface import all_fixed_point_reports, build_surface


class DecompositionError(ArithmeticError):
    """A multiplicity came out non-integral or negative."""


def char_h1_complex(g: int) -> CyclotomicNumber:
    """Topological Lefschetz: trace on H^1(F; C) is 2 - #Fix for g != 1."""
    group = build_binary_icosahedral()
    if g == group.identity:
        return CyclotomicNumber.from_rational(2 * build_surface().genus)
    return CyclotomicNumber.from_rational(2 - all_fixed_point_reports()[g].total)


@lru_cache(maxsize=ORDER)
def _inv_one_minus(e: int) -> CyclotomicNumber:
    return (ONE - CyclotomicNumber.zeta_power(e)).inverse()


def char_h1_holomorphic(g: int) -> CyclotomicNumber:
    """Holomorphic Lefschetz: trace on H^1(F; O) is 1 - sum 1/(1 - rotation)."""
    group = build_binary_icosahedral()
    if g == group.identity:
        return CyclotomicNumber.from_rational(build_surface().genus)
    total = CyclotomicNumber.from_rational(0)
    for e in all_fixed_point_reports()[g].rotations():
        if e % ORDER == 0:
            raise DecompositionError("fixed point with trivial rotation")
        total = total + _inv_one_minus(e)
    return ONE - total


@lru_cache(maxsize=None)
def h1_complex_character() -> CharacterVector:
    g = build_binary_icosahedral()
    return CharacterVector(g, tuple(char_h1_complex(a) for a in range(g.order)))


@lru_cache(maxsize=None)
def h1_holomorphic_character() -> CharacterVector:
    g = build_binary_icosahedral()
    return CharacterVector(g, tuple(char_h1_holomorphic(a) for a in range(g.order)))


def trivial_character(g: GroupModel, dim: int) -> CharacterVector:
    return CharacterVector(g, (CyclotomicNumber.from_rational(dim),) * g.order)


@dataclass(frozen=True)
class CyclicDecomposition:
    """Multiplicities of L_0, ..., L_(n-1), where L_r sends the generator to exp(2 pi i r / n)."""

    modulus: int
    multiplicities: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def residues(self) -> list[int]:
        out = []
        for r, m in enumerate(self.multiplicities):
            out += [r] * m
        return out

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "multiplicities": list(self.multiplicities)}


@dataclass(frozen=True)
class Q8Decomposition:
    trivial: int
    a: int
    b: int
    ab: int
    U: int

    @property
    def dimension(self) -> int:
        return self.trivial + self.a + self.b + self.ab + 2 * self.U

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.trivial, self.a, self.b, self.ab, self.U)

    def to_json(self) -> dict:
        return {"q8": list(self.as_tuple())}


def _as_multiplicity(value: CyclotomicNumber, what: str) -> int:
    if not value.is_rational():
        raise DecompositionError(f"{what}: multiplicity {value!r} is irrational")
    q = value.to_fraction()
    if q.denominator != 1 or q < 0:
        raise DecompositionError(f"{what}: multiplicity {q} is not a non-negative integer")
    return int(q)


def decompose_cyclic(gen: int, char: CharacterVector) -> CyclicDecomposition:
    """Restrict ``char`` to the cyclic group generated by ``gen`` and split it into the L_r."""
    g = char.group
    powers = g.powers(gen)
    n = len(powers)
    step = ORDER // n
    mults = []
    for r in range(n):
        acc = CyclotomicNumber.from_rational(0)
        for k, a in enumerate(powers):
            acc = acc + char(a) * CyclotomicNumber.zeta_power(-step * r * k)
        mults.append(_as_multiplicity(acc * Fraction(1, n), f"L_{r} mod {n}"))
    return CyclicDecomposition(n, tuple(mults))


def _restrict_to_q8(char: CharacterVector) -> CharacterVector:
    if char.group.order == 8:
        return char
    return char.restrict(sylow_subgroup(char.group, 2))


def decompose_q8(char: CharacterVector) -> Q8Decomposition:
    """Multiplicities over the hard-coded Q8 table (trivial, a, b, ab, U)."""
    chi = _restrict_to_q8(char)
    q = chi.group
    mults = []
    for name in Q8_LABELS:
        psi = q8_irreducible(q, name)
        acc = sum((chi(x) * psi(x).conjugate() for x in range(8)), CyclotomicNumber.from_rational(0))
        mults.append(_as_multiplicity(acc * Fraction(1, 8), f"Q8 {name}"))
    return Q8Decomposition(*mults)
