"""Finitely generated abelian groups in invariant-factor form.

Generators of ``Z^r + Z/d1 + ... + Z/dk`` are ordered free ones first, then
the torsion ones; homomorphisms are integer matrices against that basis
(rows = target generators, columns = source generators).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence

from .intmatrix import IntMatrix, integer_kernel, smith_normal_form, unimodular_inverse


class AbelianGroupError(ValueError):
    pass


@dataclass(frozen=True)
class FGAbelianGroup:
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise AbelianGroupError("negative free rank")
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in factors):
            raise AbelianGroupError(f"invariant factors must be >= 2: {factors}")
        if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
            raise AbelianGroupError(f"divisibility chain violated: {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> FGAbelianGroup:
        """Canonical form of a direct sum of cyclic groups (0 means Z, 1 is dropped)."""
        orders = [abs(int(o)) for o in orders]
        free = sum(1 for o in orders if o == 0)
        torsion = [o for o in orders if o > 1]
        if not torsion:
            return cls(free, ())
        # SNF of a diagonal matrix gives the invariant factors
        _, d, _ = smith_normal_form(IntMatrix.diagonal(torsion))
        return cls(free, tuple(x for x in d.diagonal_entries() if x > 1))

    @classmethod
    def cyclic(cls, n: int) -> FGAbelianGroup:
        return cls.from_cyclic_orders([n])

    @classmethod
    def parse(cls, text: str) -> FGAbelianGroup:
        """Parse "0", "Z", "Z^2", "Z/24", "Z + Z/2", "Z^2 ⊕ Z/2 ⊕ Z/4" (and "Z²")."""
        s = text.strip().replace("²", "^2").replace("³", "^3")
        if s in ("0", ""):
            return cls()
        orders: list[int] = []
        for part in re.split(r"\s*[⊕+]\s*", s):
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                orders += [0] * int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z/(\d+)(?:\^(\d+))?", part)
            if m:
                orders += [int(m.group(1))] * int(m.group(2) or 1)
                continue
            if part == "0":
                continue
            raise AbelianGroupError(f"cannot parse abelian group {text!r}")
        return cls.from_cyclic_orders(orders)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " ⊕ ".join(parts) if parts else "0"

    # -- structure -----------------------------------------------------

    @property
    def num_generators(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    @property
    def generator_orders(self) -> tuple[int, ...]:
        """Order of each canonical generator, 0 meaning infinite."""
        return (0,) * self.free_rank + self.invariant_factors

    def is_trivial(self) -> bool:
        return self.num_generators == 0

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        return prod(self.invariant_factors) if self.is_finite() else None

    def torsion(self) -> FGAbelianGroup:
        return FGAbelianGroup(0, self.invariant_factors)

    def canonical(self) -> FGAbelianGroup:
        return FGAbelianGroup.from_cyclic_orders(self.generator_orders)

    def __add__(self, other: FGAbelianGroup) -> FGAbelianGroup:
        return direct_sum(self, other)

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of an element (torsion entries reduced)."""
        return tuple(x % o if o else x for x, o in zip(vec, self.generator_orders))

    def element_order(self, vec: Sequence[int]) -> int:
        """Order of an element, 0 meaning infinite."""
        vec = self.reduce(vec)
        if any(x for x, o in zip(vec, self.generator_orders) if o == 0):
            return 0
        n = 1
        for x, o in zip(vec, self.generator_orders):
            if o:
                k = o // gcd(x, o)
                n = n * k // gcd(n, k)
        return n

    def relation_matrix(self) -> IntMatrix:
        n = self.num_generators
        cols = [[d if i == self.free_rank + k else 0 for i in range(n)] for k, d in enumerate(self.invariant_factors)]
        return IntMatrix([list(r) for r in zip(*cols)], n, len(cols)) if cols else IntMatrix.zeros(n, 0)


ZERO_GROUP = FGAbelianGroup()
Z = FGAbelianGroup(1)


def direct_sum(*groups: FGAbelianGroup) -> FGAbelianGroup:
    orders: list[int] = []
    for g in groups:
        orders += g.generator_orders
    return FGAbelianGroup.from_cyclic_orders(orders)


def tensor(a: FGAbelianGroup, b: FGAbelianGroup) -> FGAbelianGroup:
    orders = []
    for x in a.generator_orders:
        for y in b.generator_orders:
            orders.append(gcd(x, y))  # gcd(0, y) = y covers Z ⊗ Z/y
    return FGAbelianGroup.from_cyclic_orders(orders)


def tor(a: FGAbelianGroup, b: FGAbelianGroup) -> FGAbelianGroup:
    orders = [gcd(x, y) for x in a.invariant_factors for y in b.invariant_factors]
    return FGAbelianGroup.from_cyclic_orders(orders)


def hom_group(a: FGAbelianGroup, b_cyclic_order: int) -> FGAbelianGroup:
    """Hom(a, Z/m)."""
    m = b_cyclic_order
    if m < 2:
        raise AbelianGroupError(f"target order must be >= 2, got {m}")
    orders = [m] * a.free_rank + [gcd(d, m) for d in a.invariant_factors]
    return FGAbelianGroup.from_cyclic_orders(orders)


def ext_group(a: FGAbelianGroup, b_cyclic_order: int) -> FGAbelianGroup:
    """Ext(a, Z/m); the free part contributes nothing."""
    m = b_cyclic_order
    return FGAbelianGroup.from_cyclic_orders([gcd(d, m) for d in a.invariant_factors])


def kunneth(h_a: Sequence[FGAbelianGroup], h_b: Sequence[FGAbelianGroup], top: int) -> list[FGAbelianGroup]:
    """Integral homology of a product in degrees 0..top.

    Missing degrees are treated as unknown, so both inputs must reach ``top``.
    """
    if len(h_a) <= top or len(h_b) <= top:
        raise AbelianGroupError("homology sequences too short for the requested degree")
    out = []
    for n in range(top + 1):
        parts = [tensor(h_a[i], h_b[n - i]) for i in range(n + 1)]
        parts += [tor(h_a[i], h_b[n - 1 - i]) for i in range(n)]
        out.append(direct_sum(*parts))
    return out


@dataclass(frozen=True)
class AbHom:
    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if (m.rows, m.cols) != (self.target.num_generators, self.source.num_generators):
            raise AbelianGroupError(
                f"matrix shape {m.rows}x{m.cols} does not fit {self.source} -> {self.target}"
            )
        tgt = self.target.generator_orders
        reduced = [[x % tgt[i] if tgt[i] else x for x in row] for i, row in enumerate(m.entries)]
        m = IntMatrix(reduced, m.rows, m.cols)
        object.__setattr__(self, "matrix", m)
        for j, d in enumerate(self.source.generator_orders):
            if d == 0:
                continue
            image = [d * x for x in m.column(j)]
            if any(self.target.reduce(image)):
                raise AbelianGroupError(
                    f"generator {j} of order {d} in {self.source} has image of wrong order in {self.target}"
                )

    @classmethod
    def from_images(cls, source, target, images: Sequence[Sequence[int]]) -> AbHom:
        """Build from the images of the source generators (one vector per generator)."""
        cols = [list(v) for v in images]
        rows = target.num_generators
        entries = [list(r) for r in zip(*cols)] if cols and rows else [[] for _ in range(rows)]
        return cls(source, target, IntMatrix(entries, rows, len(cols)))

    @classmethod
    def zero(cls, source: FGAbelianGroup, target: FGAbelianGroup) -> AbHom:
        return cls(source, target, IntMatrix.zeros(target.num_generators, source.num_generators))

    def __call__(self, vec: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(vec))

    def compose(self, first: AbHom) -> AbHom:
        """self ∘ first."""
        if first.target != self.source:
            raise AbelianGroupError("composition of incompatible homomorphisms")
        return AbHom(first.source, self.target, self.matrix @ first.matrix)

    def is_zero(self) -> bool:
        return all(not any(self.target.reduce(self.matrix.column(j))) for j in range(self.matrix.cols))

    def image(self) -> FGAbelianGroup:
        """Isomorphism class of the image, as a quotient of the source by the kernel."""
        return _subgroup_structure(self.matrix, self.target)

    def cokernel(self) -> FGAbelianGroup:
        tgt_rel = self.target.relation_matrix()
        pres = self.matrix.hstack(tgt_rel)
        _, d, _ = smith_normal_form(pres)
        diag = d.diagonal_entries()
        orders = list(diag) + [0] * (pres.rows - len(diag))
        return FGAbelianGroup.from_cyclic_orders(orders)

    def is_surjective(self) -> bool:
        return self.cokernel().is_trivial()

    def is_injective(self) -> bool:
        return kernel_with_generators(self)[0].is_trivial()


def _coker_orders(m: IntMatrix) -> list[int]:
    _, d, _ = smith_normal_form(m)
    diag = d.diagonal_entries()
    return list(diag) + [0] * (m.rows - len(diag))


def _subgroup_structure(gens: IntMatrix, ambient: FGAbelianGroup) -> FGAbelianGroup:
    # span(gens) in ambient is Z^k / {c : gens c in span(relations)}
    k = gens.cols
    if k == 0:
        return ZERO_GROUP
    rel = ambient.relation_matrix()
    neg_rel = IntMatrix([[-x for x in row] for row in rel.entries], rel.rows, rel.cols)
    ker = integer_kernel(gens.hstack(neg_rel))
    rel_in_gens = IntMatrix([ker.entries[i] for i in range(k)], k, ker.cols)
    return FGAbelianGroup.from_cyclic_orders(_coker_orders(rel_in_gens))


def kernel_with_generators(f: AbHom) -> tuple[FGAbelianGroup, list[tuple[int, ...]]]:
    """Kernel of f and source-coordinate vectors of its canonical generators."""
    src, tgt = f.source, f.target
    n = src.num_generators
    if n == 0:
        return ZERO_GROUP, []
    tgt_rel = tgt.relation_matrix()
    neg_rel = IntMatrix([[-x for x in row] for row in tgt_rel.entries], tgt_rel.rows, tgt_rel.cols)
    # K = {x in Z^n : A x in span(target relations)}
    combined = f.matrix.hstack(neg_rel)
    if combined.rows == 0:
        gens = IntMatrix.identity(n)
    else:
        ker = integer_kernel(combined)
        gens = IntMatrix([ker.entries[i] for i in range(n)], n, ker.cols)
    # basis B of the lattice spanned by gens
    u, d, _ = smith_normal_form(gens)
    diag = [x for x in d.diagonal_entries() if x]
    r = len(diag)
    uinv = unimodular_inverse(u)
    basis_cols = [[uinv[i, j] * diag[j] for i in range(n)] for j in range(r)]
    # express source relations in B-coordinates
    src_rel = src.relation_matrix()
    coords = []
    for j in range(src_rel.cols):
        ux = u.apply(src_rel.column(j))
        if any(ux[r:]) or any(ux[i] % diag[i] for i in range(r)):
            raise AbelianGroupError("source relation outside kernel lattice (map not well defined)")
        coords.append([ux[i] // diag[i] for i in range(r)])
    if r == 0:
        return ZERO_GROUP, []
    c = IntMatrix([list(row) for row in zip(*coords)], r, len(coords)) if coords else IntMatrix.zeros(r, 0)
    cu, cd, _ = smith_normal_form(c)
    cdiag = cd.diagonal_entries()
    orders = list(cdiag) + [0] * (r - len(cdiag))
    cuinv = unimodular_inverse(cu)
    # new generators: B @ cu^{-1}, paired with orders; drop the trivial (order 1) ones
    free, tors = [], []
    for j in range(r):
        vec = tuple(sum(basis_cols[k][i] * cuinv[k, j] for k in range(r)) for i in range(n))
        vec = src.reduce(vec)
        if orders[j] == 1:
            continue
        (free if orders[j] == 0 else tors).append((orders[j], _sign_normalize(vec, src)))
    # SNF orders already form a divisibility chain, so free-then-torsion is canonical
    kernel = FGAbelianGroup(len(free), tuple(o for o, _ in tors))
    return kernel, [v for _, v in free + tors]


def _sign_normalize(vec, group: FGAbelianGroup):
    for x, o in zip(vec, group.generator_orders):
        if x and o == 0:
            return group.reduce(tuple(-y for y in vec)) if x < 0 else vec
    return vec


def hom_kernel(f: AbHom) -> FGAbelianGroup:
    return kernel_with_generators(f)[0]


def inclusion_of_kernel(f: AbHom) -> AbHom:
    """The map kernel -> source sending canonical generators to the found generators."""
    k, gens = kernel_with_generators(f)
    return AbHom.from_images(k, f.source, gens)
