"""Exact arithmetic in the 60th cyclotomic field Q(zeta_60).

Elements are stored as an integer numerator vector of length 16 over a
positive common denominator, i.e. as a polynomial in ``x = zeta_60`` reduced
modulo the 60th cyclotomic polynomial.  The power basis of Z[zeta_60] is an
integral basis, so an element is an algebraic integer exactly when its
reduced denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

ORDER = 60


class UnsupportedOrderError(ValueError):
    """Requested root of unity does not live in Q(zeta_60)."""


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Coefficient lists are low degree first; ``den`` is monic.
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    rem = num[:dd] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


PHI60 = cyclotomic_polynomial(ORDER)
DEGREE = len(PHI60) - 1  # 16


def _build_power_table() -> tuple[tuple[int, ...], ...]:
    # x^k reduced modulo PHI60, for 0 <= k < 2*DEGREE - 1
    table = []
    cur = [0] * DEGREE
    cur[0] = 1
    for _ in range(2 * DEGREE - 1):
        table.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(DEGREE):
                cur[j] -= top * PHI60[j]
    return tuple(table)


_POW = _build_power_table()


def _normalize(coeffs: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        coeffs = [-c for c in coeffs]
        den = -den
    g = den
    for c in coeffs:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        coeffs = [c // g for c in coeffs]
        den //= g
    if not any(coeffs):
        den = 1
    return tuple(coeffs), den


Scalar = Union[int, Fraction]


class CyclotomicNumber:
    """Immutable element of Q(zeta_60)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coefficients: Iterable[Scalar] = (), denominator: int = 1):
        coeffs = list(coefficients)
        if len(coeffs) > DEGREE:
            coeffs = _reduce_long([Fraction(c) for c in coeffs])
        coeffs += [0] * (DEGREE - len(coeffs))
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in coeffs):
            lcm = denominator
            for c in coeffs:
                d = Fraction(c).denominator
                lcm = lcm * d // gcd(lcm, d)
            ints = [int(Fraction(c) * lcm) for c in coeffs]
            num, den = _normalize([i * denominator for i in ints], lcm * denominator)
        else:
            num, den = _normalize([int(c) for c in coeffs], denominator)
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: tuple[int, ...], den: int) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _from_ints(cls, coeffs: list[int], den: int) -> "CyclotomicNumber":
        num, den = _normalize(coeffs, den)
        return cls._raw(num, den)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rational(cls, q: Scalar) -> "CyclotomicNumber":
        q = Fraction(q)
        return cls._from_ints([q.numerator] + [0] * (DEGREE - 1), q.denominator)

    @classmethod
    def zeta_power(cls, k: int) -> "CyclotomicNumber":
        """zeta_60 ** k for any integer k."""
        return _zeta_power(k % ORDER)

    # -- accessors --------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def key(self) -> tuple[tuple[int, ...], int]:
        return self._num, self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def is_algebraic_integer(self) -> bool:
        return self._den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def to_int(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CyclotomicNumber._from_ints([a + b for a, b in zip(self._num, other._num)], d1)
        return CyclotomicNumber._from_ints(
            [a * d2 + b * d1 for a, b in zip(self._num, other._num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(tuple(-a for a in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicNumber._from_ints(
                [a * q.numerator for a in self._num], self._den * q.denominator
            )
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return _mul_cached(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_60)")
        return _inverse_cached(self)

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta_60 -> zeta_60**k (gcd(k, 60) = 1)."""
        if gcd(k, ORDER) != 1:
            raise ValueError(f"{k} is not a unit modulo {ORDER}")
        acc = [0] * DEGREE
        for i, c in enumerate(self._num):
            if c:
                for j, p in enumerate(_zeta_power((i * k) % ORDER)._num):
                    if p:
                        acc[j] += c * p
        return CyclotomicNumber._from_ints(acc, self._den)

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugate: zeta_60 -> zeta_60**-1."""
        return self.galois(ORDER - 1)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicNumber({Fraction(self._num[0], self._den)})"
        terms = []
        for i, c in enumerate(self._num):
            if c:
                q = Fraction(c, self._den)
                terms.append(f"{q}" if i == 0 else f"{q}*z^{i}")
        return "CyclotomicNumber(" + " + ".join(terms) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "CyclotomicNumber":
        if len(data) != DEGREE:
            raise ValueError(f"expected {DEGREE} coefficients, got {len(data)}")
        return cls([Fraction(c) for c in data])


def _reduce_long(coeffs: list[Fraction]) -> list[Fraction]:
    _, rem = _poly_divmod_monic_frac(coeffs, list(PHI60))
    return rem


def _poly_divmod_monic_frac(num, den):
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    return None, num[:dd]


def _mul_raw(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    an = [(i, c) for i, c in enumerate(a._num) if c]
    bn = [(j, c) for j, c in enumerate(b._num) if c]
    prod = [0] * (2 * DEGREE - 1)
    for i, ca in an:
        for j, cb in bn:
            prod[i + j] += ca * cb
    acc = prod[:DEGREE]
    for k in range(DEGREE, 2 * DEGREE - 1):
        c = prod[k]
        if c:
            for j, p in enumerate(_POW[k]):
                if p:
                    acc[j] += c * p
    return CyclotomicNumber._from_ints(acc, a._den * b._den)


@lru_cache(maxsize=1 << 16)
def _mul_cached(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return _mul_raw(a, b)


@lru_cache(maxsize=None)
def _zeta_power(k: int) -> CyclotomicNumber:
    if k < 2 * DEGREE - 1:
        return CyclotomicNumber._raw(_POW[k], 1)
    half = _zeta_power(k // 2)
    sq = _mul_raw(half, half)
    return _mul_raw(sq, _zeta_power(1)) if k % 2 else sq


@lru_cache(maxsize=1 << 12)
def _inverse_cached(a: CyclotomicNumber) -> CyclotomicNumber:
    # a^-1 = (product of the other Galois conjugates) / norm(a), and the norm is rational
    cofactor = ONE
    for k in _UNITS[1:]:
        cofactor = cofactor * a.galois(k)
    norm = a * cofactor
    if not norm.is_rational():
        raise ArithmeticError("norm is not rational; multiplication table is inconsistent")
    return cofactor * (1 / norm.to_fraction())


_UNITS = tuple(k for k in range(1, ORDER) if gcd(k, ORDER) == 1)
ZERO = CyclotomicNumber.from_rational(0)
ONE = CyclotomicNumber.from_rational(1)


def cyclo_root_of_unity(n: int) -> CyclotomicNumber:
    """Primitive n-th root of unity zeta_60 ** (60 // n)."""
    if n < 1 or ORDER % n:
        raise UnsupportedOrderError(f"order {n} does not divide {ORDER}")
    return CyclotomicNumber.zeta_power(ORDER // n)


def multiplicative_order(z: CyclotomicNumber, bound: int = ORDER) -> int | None:
    """Smallest k <= bound with z**k == 1, or None."""
    acc = z
    for k in range(1, bound + 1):
        if acc == ONE:
            return k
        acc = acc * z
    return None


I = cyclo_root_of_unity(4)
GOLDEN = cyclo_root_of_unity(5) + cyclo_root_of_unity(5).conjugate() + 1
GOLDEN_INV = GOLDEN - 1
