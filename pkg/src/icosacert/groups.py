"""Binary icosahedral group, Q8 and friends as exact unit quaternions.

Elements carry coordinates in Q(zeta_60) (in fact in Q(sqrt 5)); every group
is stored with its full Cayley table so that all later work is index
arithmetic.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .exact.abelian import FGAbelianGroup
from .exact.cyclotomic import GOLDEN, GOLDEN_INV, ONE, ZERO, CyclotomicNumber


class GroupConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Quaternion:
    w: CyclotomicNumber
    x: CyclotomicNumber
    y: CyclotomicNumber
    z: CyclotomicNumber

    def __mul__(self, o: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = o.w, o.x, o.y, o.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> CyclotomicNumber:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def coords(self) -> tuple[CyclotomicNumber, ...]:
        return (self.w, self.x, self.y, self.z)

    @property
    def key(self):
        return tuple(c.key for c in self.coords)

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coords]

    @classmethod
    def from_json(cls, data) -> Quaternion:
        return cls(*(CyclotomicNumber.from_json(c) for c in data))


def _q(w, x, y, z) -> Quaternion:
    conv = lambda v: v if isinstance(v, CyclotomicNumber) else CyclotomicNumber.from_rational(v)
    return Quaternion(conv(w), conv(x), conv(y), conv(z))


QONE = _q(1, 0, 0, 0)


@dataclass(frozen=True, eq=False)
class GroupModel:
    """A finite group of unit quaternions with its Cayley table.

    ``embedding`` maps element indices to indices of a parent group when the
    model was cut out as a subgroup.
    """

    name: str
    elements: tuple[Quaternion, ...]
    cayley: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...]
    identity: int
    embedding: tuple[int, ...] | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.cayley[self.cayley[g][x]][self.inverses[g]]

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        r = self.identity
        for _ in range(k):
            r = self.cayley[r][a]
        return r

    def powers(self, a: int) -> list[int]:
        """[a^0, a^1, ..., a^(n-1)] with n the order of a."""
        out = [self.identity]
        cur = a
        while cur != self.identity:
            out.append(cur)
            cur = self.cayley[cur][a]
        return out

    def element_order(self, a: int) -> int:
        return len(self.powers(a))

    def index_of(self, q: Quaternion) -> int:
        if not self._index:
            self._index.update({e.key: i for i, e in enumerate(self.elements)})
        return self._index[q.key]

    def generated_by(self, gens: Iterable[int]) -> list[int]:
        """Indices of the subgroup generated by ``gens`` (sorted)."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.cayley[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def subgroup(self, indices: Sequence[int], name: str = "") -> GroupModel:
        indices = sorted(indices)
        pos = {g: i for i, g in enumerate(indices)}
        try:
            cayley = tuple(tuple(pos[self.cayley[a][b]] for b in indices) for a in indices)
            inverses = tuple(pos[self.inverses[a]] for a in indices)
        except KeyError as exc:
            raise GroupConstructionError(f"{indices} is not closed") from exc
        parent = self.embedding
        emb = tuple(parent[i] for i in indices) if parent else tuple(indices)
        return GroupModel(
            name or f"subgroup of {self.name}",
            tuple(self.elements[i] for i in indices),
            cayley,
            inverses,
            pos[self.identity],
            emb,
        )

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[a][b] == self.cayley[b][a] for a in range(n) for b in range(a + 1, n))

    def center(self) -> list[int]:
        n = self.order
        return [a for a in range(n) if all(self.cayley[a][b] == self.cayley[b][a] for b in range(n))]

    def commutator_subgroup(self) -> list[int]:
        n = self.order
        comms = {
            self.cayley[self.cayley[a][b]][self.cayley[self.inverses[a]][self.inverses[b]]]
            for a in range(n)
            for b in range(n)
        }
        return self.generated_by(comms)

    def quotient(self, normal: Sequence[int], name: str = "") -> GroupModel:
        """G / N with coset representatives of lowest index."""
        normal = sorted(normal)
        coset_of = {}
        reps = []
        for a in range(self.order):
            if a in coset_of:
                continue
            c = len(reps)
            reps.append(a)
            for nn in normal:
                coset_of[self.cayley[a][nn]] = c
        cayley = tuple(tuple(coset_of[self.cayley[a][b]] for b in reps) for a in reps)
        inverses = tuple(coset_of[self.inverses[a]] for a in reps)
        return GroupModel(
            name or f"{self.name}/N",
            tuple(self.elements[a] for a in reps),
            cayley,
            inverses,
            coset_of[self.identity],
        )

    def abelianization(self) -> FGAbelianGroup:
        return abelian_structure(self.quotient(self.commutator_subgroup()))

    def check_axioms(self, sample: int | None = None) -> None:
        """Identity, inverses and (optionally sampled) associativity of the table."""
        n = self.order
        e = self.identity
        if any(self.cayley[e][a] != a or self.cayley[a][e] != a for a in range(n)):
            raise GroupConstructionError("identity row/column broken")
        if any(self.cayley[a][self.inverses[a]] != e for a in range(n)):
            raise GroupConstructionError("inverse table broken")
        idx = range(n) if sample is None else range(0, n, max(1, n // sample))
        for a in idx:
            for b in idx:
                ab = self.cayley[a][b]
                for c in idx:
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]]:
                        raise GroupConstructionError("associativity fails")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "identity": self.identity,
            "elements": [q.to_json() for q in self.elements],
            "inverses": list(self.inverses),
            "cayley": [list(r) for r in self.cayley],
        }

    @classmethod
    def from_json(cls, data: dict) -> GroupModel:
        return cls(
            data["name"],
            tuple(Quaternion.from_json(q) for q in data["elements"]),
            tuple(tuple(r) for r in data["cayley"]),
            tuple(data["inverses"]),
            data["identity"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def abelian_structure(g: GroupModel) -> FGAbelianGroup:
    """Invariant factors of a finite abelian group given by its table.

    Uses the counts #{x : x^(p^k) = 1}, which pin down each p-primary part.
    """
    if not g.is_abelian():
        raise ValueError(f"{g.name} is not abelian")
    n = g.order
    orders = [g.element_order(a) for a in range(n)]
    cyclic_parts = []
    m = n
    p = 2
    primes = []
    while m > 1:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    for p in primes:
        prev = 1
        k = 1
        counts = []
        while True:
            cnt = sum(1 for o in orders if (p ** k) % o == 0)
            counts.append(cnt)
            if cnt == prev:
                break
            prev = cnt
            k += 1
        # number of cyclic factors of order >= p^k is log_p(N_k / N_{k-1})
        ranks = []
        prev = 1
        for cnt in counts:
            r, q = 0, cnt // prev
            while q > 1:
                q //= p
                r += 1
            ranks.append(r)
            prev = cnt
        for k, r in enumerate(ranks, start=1):
            nxt = ranks[k] if k < len(ranks) else 0
            cyclic_parts += [p ** k] * (r - nxt)
    return FGAbelianGroup.from_cyclic_orders(cyclic_parts)


def close_under_multiplication(gens: Sequence[Quaternion], name: str, limit: int = 10_000) -> GroupModel:
    """Enumerate the group generated by ``gens`` and tabulate it."""
    elements = [QONE]
    index = {QONE.key: 0}
    frontier = [QONE]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b.key not in index:
                    index[b.key] = len(elements)
                    elements.append(b)
                    nxt.append(b)
                    if len(elements) > limit:
                        raise GroupConstructionError("closure does not terminate")
        frontier = nxt
    return tabulate(elements, name)


def tabulate(elements: Sequence[Quaternion], name: str) -> GroupModel:
    """Cayley table of a finite set of quaternions; raises unless it is a group."""
    index = {q.key: i for i, q in enumerate(elements)}
    if len(index) != len(elements):
        raise GroupConstructionError("duplicate elements")
    cayley = []
    for a in elements:
        row = []
        for b in elements:
            k = (a * b).key
            if k not in index:
                raise GroupConstructionError(f"{name}: product leaves the set")
            row.append(index[k])
        cayley.append(tuple(row))
    identity = index.get(QONE.key)
    if identity is None:
        raise GroupConstructionError(f"{name}: identity missing")
    inverses = tuple(index[q.conjugate().key] for q in elements)
    g = GroupModel(name, tuple(elements), tuple(cayley), inverses, identity)
    g._index.update(index)
    return g


def _even_permutations(n: int) -> list[tuple[int, ...]]:
    out = []
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if inversions % 2 == 0:
            out.append(perm)
    return out


def icosian_elements() -> list[Quaternion]:
    """The 120 icosians: 8 + 16 Hurwitz units and 96 golden-ratio elements."""
    half = CyclotomicNumber.from_rational(1) / 2
    elems: list[Quaternion] = []
    for pos in range(4):
        for s in (1, -1):
            c = [ZERO] * 4
            c[pos] = CyclotomicNumber.from_rational(s)
            elems.append(Quaternion(*c))
    for signs in itertools.product((1, -1), repeat=4):
        elems.append(Quaternion(*(half * s for s in signs)))
    base = [ZERO, half, GOLDEN * half, GOLDEN_INV * half]
    for perm in _even_permutations(4):
        for s1, s2, s3 in itertools.product((1, -1), repeat=3):
            vals = [base[0], base[1] * s1, base[2] * s2, base[3] * s3]
            coords = [None] * 4
            for src, dst in enumerate(perm):
                coords[dst] = vals[src]
            elems.append(Quaternion(*coords))
    return elems


@lru_cache(maxsize=None)
def build_binary_icosahedral() -> GroupModel:
    """The binary icosahedral group of order 120, closure-checked."""
    elems = icosian_elements()
    if any(q.norm() != ONE for q in elems):
        raise GroupConstructionError("non-unit icosian")
    g = tabulate(elems, "binary icosahedral")
    if g.order != 120:
        raise GroupConstructionError(f"expected 120 elements, got {g.order}")
    return g


@lru_cache(maxsize=None)
def build_q8() -> GroupModel:
    """{±1, ±i, ±j, ±k}."""
    elems = [
        _q(1, 0, 0, 0), _q(-1, 0, 0, 0),
        _q(0, 1, 0, 0), _q(0, -1, 0, 0),
        _q(0, 0, 1, 0), _q(0, 0, -1, 0),
        _q(0, 0, 0, 1), _q(0, 0, 0, -1),
    ]
    return tabulate(elems, "Q8")


def trivial_group() -> GroupModel:
    return tabulate([QONE], "trivial")


@dataclass(frozen=True)
class ConjugacyClasses:
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]

    def __len__(self):
        return len(self.representatives)

    def members(self, c: int) -> list[int]:
        return [i for i, k in enumerate(self.class_of) if k == c]


def conjugacy_classes(g: GroupModel) -> ConjugacyClasses:
    class_of = [-1] * g.order
    reps, sizes = [], []
    for a in range(g.order):
        if class_of[a] >= 0:
            continue
        c = len(reps)
        orbit = {g.conj(h, a) for h in range(g.order)}
        for b in orbit:
            class_of[b] = c
        reps.append(a)
        sizes.append(len(orbit))
    return ConjugacyClasses(tuple(class_of), tuple(reps), tuple(sizes))


def element_order_census(g: GroupModel) -> dict[int, int]:
    return dict(sorted(Counter(g.element_order(a) for a in range(g.order)).items()))


def _prime_power_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_subgroup(g: GroupModel, p: int) -> GroupModel:
    """A Sylow p-subgroup, found by search over cyclic and two-generator subgroups.

    Good enough for the groups here; not a general Sylow algorithm.
    """
    target = _prime_power_part(g.order, p)
    name = f"Sylow-{p} of {g.name}"
    if target == 1:
        return g.subgroup([g.identity], name)
    p_elements = [a for a in range(g.order) if target % g.element_order(a) == 0]
    for a in p_elements:
        if g.element_order(a) == target:
            return g.subgroup(g.generated_by([a]), name)
    for a, b in itertools.combinations(p_elements, 2):
        sub = g.generated_by([a, b])
        if len(sub) == target:
            return g.subgroup(sub, name)
    raise GroupConstructionError(f"no Sylow {p}-subgroup found by two-generator search")


@dataclass(frozen=True)
class CharacterVector:
    """Class function with one value per element of ``group``."""

    group: GroupModel
    values: tuple[CyclotomicNumber, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise ValueError("one value per element required")

    def __call__(self, a: int) -> CyclotomicNumber:
        return self.values[a]

    @property
    def dimension(self) -> int:
        return self.values[self.group.identity].to_int()

    def is_class_function(self, classes: ConjugacyClasses | None = None) -> bool:
        classes = classes or conjugacy_classes(self.group)
        return all(self.values[a] == self.values[classes.representatives[classes.class_of[a]]] for a in range(self.group.order))

    def restrict(self, sub: GroupModel) -> CharacterVector:
        if sub.embedding is None:
            raise ValueError("subgroup carries no embedding into the parent")
        return CharacterVector(sub, tuple(self.values[i] for i in sub.embedding))

    def __add__(self, other: CharacterVector) -> CharacterVector:
        return CharacterVector(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def conjugate(self) -> CharacterVector:
        return CharacterVector(self.group, tuple(v.conjugate() for v in self.values))


def character_from(g: GroupModel, fn: Callable[[int], CyclotomicNumber | int]) -> CharacterVector:
    vals = []
    for a in range(g.order):
        v = fn(a)
        vals.append(v if isinstance(v, CyclotomicNumber) else CyclotomicNumber.from_rational(v))
    return CharacterVector(g, tuple(vals))


def spin_character(g: GroupModel) -> CharacterVector:
    """Trace of the defining SU(2) representation: twice the real part."""
    return CharacterVector(g, tuple(q.w * 2 for q in g.elements))


# -- icosahedral generators ------------------------------------------------


@dataclass(frozen=True)
class IcosahedralGenerators:
    """Lifts x2, x3, x5 of edge, face and vertex rotation generators."""

    x2: int
    x3: int
    x5: int
    h: int


@lru_cache(maxsize=None)
def icosahedral_generators() -> IcosahedralGenerators:
    # Every order-4 element rotates about an edge axis, every order-6 about a
    # face axis, every order-10 about a vertex axis, so "lowest index of that
    # order" is the deterministic choice.
    g = build_binary_icosahedral()
    first = {}
    for a in range(g.order):
        first.setdefault(g.element_order(a), a)
    h = first[2]
    return IcosahedralGenerators(first[4], first[6], first[10], h)


def rotation_axis_kind(g: GroupModel, a: int) -> str:
    """Which icosahedron feature the rotation axis of ``a`` passes through."""
    order = g.element_order(a)
    # even-order cyclic subgroups contain the central -1, which dies in SO(3)
    image_order = order // 2 if order % 2 == 0 else order
    return {2: "edge", 3: "face", 5: "vertex"}.get(image_order, "none")


def icosahedral_quotient() -> GroupModel:
    g = build_binary_icosahedral()
    return g.quotient(g.center(), "icosahedral rotations")


def image_generates_quotient(gens: Sequence[int]) -> bool:
    g = build_binary_icosahedral()
    sub = g.generated_by(list(gens) + g.center())
    return len(sub) == g.order


# -- Q8 character table ----------------------------------------------------

Q8_LABELS = ("trivial", "a", "b", "ab", "U")


def q8_class_labels(q: GroupModel) -> list[str]:
    """Label each element of an abstract Q8 as 1, -1, i, j or k.

    The lowest-index order-4 element names the i-class, the next class j.
    """
    if q.order != 8 or len(q.center()) != 2 or q.is_abelian():
        raise ValueError(f"{q.name} is not a quaternion group")
    labels = [""] * 8
    labels[q.identity] = "1"
    central = next(a for a in q.center() if a != q.identity)
    labels[central] = "-1"
    order4 = [a for a in range(8) if q.element_order(a) == 4]
    names = iter("ijk")
    for a in order4:
        if labels[a]:
            continue
        name = next(names)
        labels[a] = name
        labels[q.inv(a)] = name
    return labels


# (value on 1, -1, i, j, k); a and b are the pullbacks of the two projections V4 -> Z/2
Q8_CHARACTER_TABLE = {
    "trivial": (1, 1, 1, 1, 1),
    "a": (1, 1, -1, 1, -1),
    "b": (1, 1, 1, -1, -1),
    "ab": (1, 1, -1, -1, 1),
    "U": (2, -2, 0, 0, 0),
}
_Q8_SLOT = {"1": 0, "-1": 1, "i": 2, "j": 3, "k": 4}


def q8_irreducible(q: GroupModel, name: str) -> CharacterVector:
    labels = q8_class_labels(q)
    row = Q8_CHARACTER_TABLE[name]
    return character_from(q, lambda a: row[_Q8_SLOT[labels[a]]])
