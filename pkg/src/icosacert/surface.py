"""The genus-14 double cover of the projective line branched at the 30 edge midpoints.

The surface is never built point by point.  It is described by the half
degree m = 15 (the cover lives inside O(15) as the square root of an
invariant section of O(30)), the branch locus, and a lifting rule that
turns eigen-data of SU(2) matrices into fixed points and rotation numbers.

Convention: O(-1) is the tautological line, so on an eigenline with
eigenvalue zeta_60^e the fibre of O(k) is acted on by zeta_60^(-k e) and the
tangent line of the base by zeta_60^(-2 e).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exact.cyclotomic import ORDER, ONE, ZERO, CyclotomicNumber, I
from .groups import GroupModel, Quaternion, build_binary_icosahedral

HALF_DEGREE = 15

Matrix2 = tuple[tuple[CyclotomicNumber, CyclotomicNumber], tuple[CyclotomicNumber, CyclotomicNumber]]


class SurfaceError(ValueError):
    pass


class ConsistencyError(AssertionError):
    pass


def su2_matrix(q: Quaternion) -> Matrix2:
    """[[w + x i, y + z i], [-y + z i, w - x i]]."""
    return (
        (q.w + q.x * I, q.y + q.z * I),
        (-q.y + q.z * I, q.w - q.x * I),
    )


def det2(m: Matrix2) -> CyclotomicNumber:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def trace2(m: Matrix2) -> CyclotomicNumber:
    return m[0][0] + m[1][1]


@dataclass(frozen=True)
class ProjPoint:
    """Point of CP^1 as [z0 : z1], first nonzero coordinate scaled to 1."""

    z0: CyclotomicNumber
    z1: CyclotomicNumber

    @classmethod
    def of(cls, z0: CyclotomicNumber, z1: CyclotomicNumber) -> ProjPoint:
        if not z0.is_zero():
            return cls(ONE, z1 / z0)
        if z1.is_zero():
            raise SurfaceError("[0 : 0] is not a point")
        return cls(ZERO, ONE)

    def apply(self, m: Matrix2) -> ProjPoint:
        return ProjPoint.of(m[0][0] * self.z0 + m[0][1] * self.z1, m[1][0] * self.z0 + m[1][1] * self.z1)

    def is_fixed_by(self, m: Matrix2) -> bool:
        a = m[0][0] * self.z0 + m[0][1] * self.z1
        b = m[1][0] * self.z0 + m[1][1] * self.z1
        return (a * self.z1 - b * self.z0).is_zero()

    def to_json(self) -> list[list[str]]:
        return [self.z0.to_json(), self.z1.to_json()]


@lru_cache(maxsize=None)
def _two_cos_table() -> dict:
    table: dict = {}
    for k in range(ORDER):
        v = CyclotomicNumber.zeta_power(k) + CyclotomicNumber.zeta_power(-k)
        table.setdefault(v.key, []).append(k)
    return table


@dataclass(frozen=True)
class Eigenpair:
    exponent: int  # eigenvalue is zeta_60 ** exponent
    line: ProjPoint

    @property
    def eigenvalue(self) -> CyclotomicNumber:
        return CyclotomicNumber.zeta_power(self.exponent)


def eigen_data(q: Quaternion) -> tuple[Eigenpair, Eigenpair]:
    """Eigenvalues (as 60th-root exponents) and eigenlines of a non-central element."""
    m = su2_matrix(q)
    exps = _two_cos_table().get(trace2(m).key)
    if not exps:
        raise SurfaceError("eigenvalues are not 60th roots of unity")
    (a, b), (c, d) = m
    pairs = []
    for e in sorted(set(exps)):
        lam = CyclotomicNumber.zeta_power(e)
        if not b.is_zero():
            line = ProjPoint.of(b, lam - a)
        elif not c.is_zero():
            line = ProjPoint.of(lam - d, c)
        elif a == lam:
            line = ProjPoint(ONE, ZERO)
        else:
            line = ProjPoint(ZERO, ONE)
        if not line.is_fixed_by(m):
            raise SurfaceError("eigenvector check failed")
        pairs.append(Eigenpair(e, line))
    if len(pairs) != 2 or pairs[0].line == pairs[1].line:
        raise SurfaceError("central element has no isolated eigenlines")
    if (pairs[0].exponent + pairs[1].exponent) % ORDER:
        raise SurfaceError("eigenvalues do not multiply to 1")
    return pairs[0], pairs[1]


def _is_central(q: Quaternion) -> bool:
    return q.x.is_zero() and q.y.is_zero() and q.z.is_zero()


@lru_cache(maxsize=None)
def branch_locus() -> tuple[ProjPoint, ...]:
    """Eigenlines of the 30 order-4 elements: the 30 edge midpoints."""
    g = build_binary_icosahedral()
    points: dict[ProjPoint, None] = {}
    for q in g.elements:
        if q.w.is_zero():
            for pair in eigen_data(q):
                points.setdefault(pair.line)
    return tuple(points)


def orbit(point: ProjPoint, g: GroupModel | None = None) -> set[ProjPoint]:
    g = g or build_binary_icosahedral()
    return {point.apply(su2_matrix(q)) for q in g.elements}


def stabilizer(point: ProjPoint, g: GroupModel | None = None) -> list[int]:
    g = g or build_binary_icosahedral()
    return [i for i, q in enumerate(g.elements) if point.is_fixed_by(su2_matrix(q))]


def riemann_hurwitz_genus(sheets: int, branch_count: int) -> int:
    """Genus of a double cover of the sphere with simple branching."""
    if sheets != 2:
        raise SurfaceError("only double covers of the sphere are modelled")
    if branch_count < 0 or branch_count % 2:
        raise SurfaceError(f"no double cover of the sphere with {branch_count} branch points")
    # 2 - 2g = 2 * 2 - branch_count
    euler = 2 * 2 - branch_count
    return (2 - euler) // 2


@dataclass(frozen=True)
class SurfaceModel:
    half_degree: int
    branch: tuple[ProjPoint, ...]
    genus: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


@lru_cache(maxsize=None)
def build_surface() -> SurfaceModel:
    branch = branch_locus()
    genus = riemann_hurwitz_genus(2, len(branch))
    if len(branch) != 2 * HALF_DEGREE:
        raise SurfaceError(f"branch locus has {len(branch)} points, expected {2 * HALF_DEGREE}")
    return SurfaceModel(HALF_DEGREE, branch, genus)


@dataclass(frozen=True)
class FixedPointRecord:
    base_point: ProjPoint
    lifts_fixed: int
    is_branch: bool
    rotation_exponent: int  # rotation is zeta_60 ** rotation_exponent

    @property
    def rotation(self) -> CyclotomicNumber:
        return CyclotomicNumber.zeta_power(self.rotation_exponent)


@dataclass(frozen=True)
class FixedPointReport:
    element: int | None
    element_order: int
    records: tuple[FixedPointRecord, ...]

    @property
    def total(self) -> int:
        return sum(r.lifts_fixed for r in self.records)

    def rotations(self) -> list[int]:
        """Rotation exponent of every fixed point of the surface (with multiplicity)."""
        out = []
        for r in self.records:
            out += [r.rotation_exponent] * r.lifts_fixed
        return out

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "element_order": self.element_order,
            "total": self.total,
            "points": [
                {
                    "base_point": r.base_point.to_json(),
                    "lifts_fixed": r.lifts_fixed,
                    "is_branch": r.is_branch,
                    "rotation_exponent": r.rotation_exponent,
                    "rotation_root_order": ORDER // gcd(r.rotation_exponent, ORDER),
                }
                for r in self.records
            ],
        }


def fixed_points_on_surface(
    g: Quaternion, s: SurfaceModel | None = None, *, duality: int = -1, element: int | None = None
) -> FixedPointReport:
    """Fixed points of a nontrivial element acting on the double cover.

    ``duality=-1`` is the tautological convention (O(k) acted on by
    lambda^-k); ``+1`` flips it and exists to show the totals do not depend
    on it.
    """
    s = s or build_surface()
    if duality not in (1, -1):
        raise ValueError("duality must be +1 or -1")
    m = s.half_degree
    branch = set(s.branch)
    if _is_central(g):
        if g.w == ONE:
            raise SurfaceError("infinite fixed set: identity acts trivially")
        # -1: every base point is fixed with eigenvalue -1; only branch points lift
        e = ORDER // 2
        rot = (duality * m * e) % ORDER
        records = tuple(FixedPointRecord(p, 1, True, rot) for p in s.branch)
        return FixedPointReport(element, 2, records)
    records = []
    for pair in eigen_data(g):
        e = pair.exponent
        fibre = (duality * m * e) % ORDER
        if pair.line in branch:
            tangent = (duality * 2 * e) % ORDER
            if tangent != (2 * fibre) % ORDER:
                raise ConsistencyError("ds: tangent -> O(30) incompatible at a fixed branch point")
            records.append(FixedPointRecord(pair.line, 1, True, fibre))
        else:
            lifts = 2 if fibre == 0 else 0
            records.append(FixedPointRecord(pair.line, lifts, False, (duality * 2 * e) % ORDER))
    order = _element_order_from_exponent(eigen_data(g)[0].exponent)
    return FixedPointReport(element, order, tuple(records))


def _element_order_from_exponent(e: int) -> int:
    return ORDER // gcd(e, ORDER)


@lru_cache(maxsize=None)
def all_fixed_point_reports(duality: int = -1) -> tuple[FixedPointReport | None, ...]:
    """Report for every element of the binary icosahedral group (None at the identity)."""
    g = build_binary_icosahedral()
    s = build_surface()
    out = []
    for i, q in enumerate(g.elements):
        out.append(None if i == g.identity else fixed_points_on_surface(q, s, duality=duality, element=i))
    return tuple(out)


def fixed_point_count(index: int, duality: int = -1) -> int:
    rep = all_fixed_point_reports(duality)[index]
    if rep is None:
        raise SurfaceError("infinite fixed set: identity acts trivially")
    return rep.total


def burnside_consistency(s: SurfaceModel | None = None, duality: int = -1) -> tuple[int, Fraction]:
    """Sum of fixed-point counts over nontrivial elements and the quotient's Euler characteristic."""
    s = s or build_surface()
    g = build_binary_icosahedral()
    reports = all_fixed_point_reports(duality)
    total = sum(r.total for r in reports if r is not None)
    quotient_euler = Fraction(s.euler_characteristic + total, g.order)
    if quotient_euler.denominator != 1:
        raise ConsistencyError(f"non-integral quotient Euler characteristic {quotient_euler}")
    if quotient_euler != 2:
        raise ConsistencyError(f"quotient is not a sphere (Euler characteristic {quotient_euler})")
    return total, quotient_euler
