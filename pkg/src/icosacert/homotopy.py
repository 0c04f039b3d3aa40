"""Low-degree homotopy and homology of the stable mapping class group's plus construction.

Inputs are tables of stable stems (ingested from a versioned JSON file);
everything else is finite abelian group arithmetic:

* pi_k of the Madsen-Tillmann spectrum as kernels of the circle transfer
  pi_k(CP^inf_+) = pi_k(CP^inf) + pi_k(S) -> pi_(k+1)(S);
* the order of the third k-invariant from the torsion of H^4;
* the two-stage Postnikov homology through degree 4;
* the order of the class theta in pi_3 = Z/24.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

from .exact.abelian import (
    Z,
    ZERO_GROUP,
    AbelianGroupError,
    AbHom,
    FGAbelianGroup,
    direct_sum,
    hom_group,
    inclusion_of_kernel,
    kernel_with_generators,
    kunneth,
)

SCHEMA_VERSION = 1
SPHERE_DEGREES = range(0, 7)
CP_DEGREES = range(1, 8)
PI3_ORDER = 24

# Degree-5 component of the transfer on the projective summand, Z/2 -> Z/2.
# Not part of the data file: surjectivity in degree 5 forces it to be 1.
CP_TRANSFER_DEG5 = 1

DEGREE_FOUR_DIFFERENTIAL_LABEL = "d_3"


class DataError(ValueError):
    """The stem-table file is malformed or fails an integrity check."""


class TransferError(ValueError):
    """A transfer map lacks a property the derivation depends on."""


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class StemTables:
    sphere: dict[int, FGAbelianGroup]
    cp: dict[int, FGAbelianGroup]
    em_homology: dict[str, tuple[str, ...]]
    eta_images: dict[int, int]
    transfer_t1: int
    sources: dict[str, str] = field(default_factory=dict)

    def sphere_stem(self, k: int) -> FGAbelianGroup:
        try:
            return self.sphere[k]
        except KeyError:
            raise DataError(f"sphere stem in degree {k} is not tabulated") from None

    def cp_stem(self, k: int) -> FGAbelianGroup:
        # CP^inf is connected, so its (unpointed) degree-0 stem vanishes
        if k == 0:
            return ZERO_GROUP
        try:
            return self.cp[k]
        except KeyError:
            raise DataError(f"projective-space stem in degree {k} is not tabulated") from None

    def em(self, name: str, m: int | None = None) -> list[FGAbelianGroup]:
        if name not in self.em_homology:
            raise DataError(f"no homology recorded for {name}")
        out = []
        for s in self.em_homology[name]:
            if "m" in s:
                if m is None:
                    raise DataError(f"{name} needs a value for m")
                s = s.replace("m", str(m))
            out.append(FGAbelianGroup.parse(s))
        return out


_TOP_KEYS = {"schema", "sphere_stems", "cp_stems", "em_homology", "eta", "transfer_t1"}
_EM_KEYS = {"homology", "source"}


def default_data_path() -> Path:
    return Path(str(resources.files("icosacert") / "data" / "stable_tables.json"))


def _parse_group(text, where: str) -> FGAbelianGroup:
    if not isinstance(text, str):
        raise DataError(f"{where}: expected a group string, got {text!r}")
    try:
        return FGAbelianGroup.parse(text)
    except AbelianGroupError as exc:
        raise DataError(f"{where}: {exc}") from None


def _degree_table(raw, degrees: range, where: str) -> dict[int, FGAbelianGroup]:
    if not isinstance(raw, dict):
        raise DataError(f"{where} must be an object")
    expected = {str(k) for k in degrees}
    if set(raw) != expected:
        raise DataError(f"{where}: degrees {sorted(raw)} differ from {sorted(expected, key=int)}")
    return {k: _parse_group(raw[str(k)], f"{where}[{k}]") for k in degrees}


def parse_tables(raw) -> StemTables:
    if not isinstance(raw, dict):
        raise DataError("top level must be a JSON object")
    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise DataError(f"unknown fields: {sorted(unknown)}")
    missing = _TOP_KEYS - set(raw)
    if missing:
        raise DataError(f"missing fields: {sorted(missing)}")
    if raw["schema"] != SCHEMA_VERSION:
        raise DataError(f"unsupported schema {raw['schema']!r}")
    sphere = _degree_table(raw["sphere_stems"], SPHERE_DEGREES, "sphere_stems")
    cp = _degree_table(raw["cp_stems"], CP_DEGREES, "cp_stems")

    em, sources = {}, {}
    if not isinstance(raw["em_homology"], dict):
        raise DataError("em_homology must be an object")
    for name, entry in raw["em_homology"].items():
        if not isinstance(entry, dict) or set(entry) - _EM_KEYS or "homology" not in entry:
            raise DataError(f"em_homology[{name}] must have keys {sorted(_EM_KEYS)}")
        hom = entry["homology"]
        if not isinstance(hom, list) or len(hom) != 5:
            raise DataError(f"em_homology[{name}] must list degrees 0..4")
        for i, s in enumerate(hom):
            _parse_group(s.replace("m", "2") if isinstance(s, str) else s, f"em_homology[{name}][{i}]")
        em[name] = tuple(hom)
        sources[name] = entry.get("source", "")

    eta_raw = raw["eta"]
    if not isinstance(eta_raw, dict) or set(eta_raw) != {str(k) for k in range(6)}:
        raise DataError("eta must give the image of the generator for degrees 0..5")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in eta_raw.values()):
        raise DataError("eta images must be integers")
    eta = {int(k): v for k, v in eta_raw.items()}

    t1 = raw["transfer_t1"]
    if not isinstance(t1, int) or isinstance(t1, bool) or t1 % 2 == 0:
        raise DataError(f"transfer_t1 must be an odd integer, got {t1!r}")
    return StemTables(sphere, cp, em, eta, t1, sources)


def load_tables(path: str | Path | None = None) -> StemTables:
    path = Path(path) if path is not None else default_data_path()
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise DataError(f"data file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc})") from None
    return parse_tables(raw)


@lru_cache(maxsize=None)
def default_tables() -> StemTables:
    return load_tables()


# Published values the ingested tables are checked against.
REFERENCE_SPHERE = ("Z", "Z/2", "Z/2", "Z/24", "0", "0", "Z/2")
REFERENCE_CP = ("0", "Z", "0", "Z", "Z/2", "Z", "Z/2")


def check_table_integrity(t: StemTables) -> None:
    for k, s in zip(SPHERE_DEGREES, REFERENCE_SPHERE):
        if t.sphere[k] != FGAbelianGroup.parse(s):
            raise DataError(f"sphere stem {k} is {t.sphere[k]}, expected {s}")
    for k, s in zip(CP_DEGREES, REFERENCE_CP):
        if t.cp[k] != FGAbelianGroup.parse(s):
            raise DataError(f"projective-space stem {k} is {t.cp[k]}, expected {s}")
    eta = EtaAction.from_tables(t)
    if eta.map(2).compose(eta.map(1)).is_zero():
        raise DataError("eta^2 vanishes in the tables")
    if eta.map(2).image().order() != 2:
        raise DataError("eta in degree 2 does not hit the order-2 subgroup of Z/24")


@dataclass(frozen=True)
class EtaAction:
    maps: dict[int, AbHom]

    @classmethod
    def from_tables(cls, t: StemTables) -> EtaAction:
        maps = {}
        for k, img in t.eta_images.items():
            src, tgt = t.sphere_stem(k), t.sphere_stem(k + 1)
            images = [[img] * tgt.num_generators for _ in range(src.num_generators)]
            try:
                maps[k] = AbHom.from_images(src, tgt, images)
            except AbelianGroupError as exc:
                raise DataError(f"eta in degree {k}: {exc}") from None
        return cls(maps)

    def map(self, k: int) -> AbHom:
        return self.maps[k]


@dataclass(frozen=True)
class TransferData:
    """The circle transfer pi_k(CP^inf) + pi_k(S) -> pi_(k+1)(S) for k = 0..5.

    On the sphere summand it is multiplication by eta.  On the projective
    summand only degree 2 (free, parameter t1) and degree 5 (Z/2 -> Z/2)
    have nonzero source and target.
    """

    tables: StemTables
    t1: int
    maps: dict[int, AbHom]

    @classmethod
    def build(cls, tables: StemTables | None = None, t1: int | None = None) -> TransferData:
        tables = tables or default_tables()
        t1 = tables.transfer_t1 if t1 is None else t1
        if t1 % 2 == 0:
            raise TransferError(f"t1 must be odd, got {t1}")
        eta = EtaAction.from_tables(tables)
        cp_component = {2: t1, 5: CP_TRANSFER_DEG5}
        maps = {}
        for k in range(6):
            cp, sph, tgt = tables.cp_stem(k), tables.sphere_stem(k), tables.sphere_stem(k + 1)
            src = direct_sum(cp, sph)
            images = []
            if cp.num_generators:
                images += [[cp_component.get(k, 0)] * tgt.num_generators] * cp.num_generators
            for j in range(sph.num_generators):
                images.append(list(eta.map(k).matrix.column(j)))
            maps[k] = AbHom.from_images(src, tgt, images)
        return cls(tables, t1, maps)

    def map(self, k: int) -> AbHom:
        return self.maps[k]

    def non_surjective_degrees(self) -> list[int]:
        return [k for k, f in sorted(self.maps.items()) if not f.is_surjective()]

    def kernel(self, k: int) -> tuple[FGAbelianGroup, list[tuple[int, ...]]]:
        return kernel_with_generators(self.map(k))


def derive_pi_mt(k: int, tables: StemTables | None = None, transfer: TransferData | None = None) -> FGAbelianGroup:
    """pi_k of the Madsen-Tillmann spectrum for k = 1..4.

    The group is the kernel of the degree-k transfer; this needs the
    degree-(k+1) transfer to be surjective, so that the connecting map into
    pi_k vanishes.
    """
    if k not in range(1, 5):
        raise ValueError(f"k must be in 1..4, got {k}")
    transfer = transfer or TransferData.build(tables)
    if not transfer.map(k + 1).is_surjective():
        raise TransferError(
            f"transfer in degree {k + 1} is not surjective (t1 = {transfer.t1}); "
            f"pi_{k} is not the kernel of the degree-{k} transfer"
        )
    kernel, gens = transfer.kernel(k)
    if k == 2 and gens != [(12, 1)]:
        raise TransferError(f"degree-2 kernel generator is {gens}, expected [(12, 1)] (t1 = {transfer.t1})")
    return kernel


def exactness_holds(transfer: TransferData, k: int) -> bool:
    return transfer.map(k).compose(inclusion_of_kernel(transfer.map(k))).is_zero()


@dataclass(frozen=True)
class K3Invariant:
    order: int

    def __post_init__(self):
        if self.order < 1 or PI3_ORDER % self.order:
            raise ValueError(f"k-invariant order {self.order} does not divide {PI3_ORDER}")


def k3_order_from_torsion(tors_size: int) -> K3Invariant:
    """The third k-invariant has order 24 / #Tors H^4."""
    if tors_size < 1 or PI3_ORDER % tors_size:
        raise ValueError(f"torsion size {tors_size} does not divide {PI3_ORDER}")
    return K3Invariant(PI3_ORDER // tors_size)


@dataclass(frozen=True)
class TorsionLedger:
    """Outcome of locating Tors H^4 inside the Z/24 coming from pi_3.

    ``candidates`` are the indices d of the subgroups dZ/24 compatible with
    the constraints; the argument is conclusive when only one survives.
    """

    restriction_order: int
    candidates: tuple[int, ...]
    relation: str = "gamma_2 = gamma_1^2 - 2 zeta_2"

    @property
    def conclusive(self) -> bool:
        return len(self.candidates) == 1

    @property
    def tors(self) -> FGAbelianGroup | None:
        return FGAbelianGroup.cyclic(PI3_ORDER // self.candidates[0]) if self.conclusive else None

    @property
    def k3(self) -> K3Invariant | None:
        return k3_order_from_torsion(PI3_ORDER // self.candidates[0]) if self.conclusive else None

    def candidate_groups(self) -> list[FGAbelianGroup]:
        return [FGAbelianGroup.cyclic(PI3_ORDER // d) for d in self.candidates]


def _additive_order(x: int, n: int) -> int:
    return n // gcd(x, n)


def torsion_h4_argument(restriction_order: int | None = None, pi3: FGAbelianGroup | None = None) -> TorsionLedger:
    """Pin down the torsion of H^4 as a subgroup of Z/24.

    The class zeta_2 pulled back to the 3-connected cover is an element z of
    Z/24 whose order is a multiple of the restriction order to the binary
    icosahedral group.  For each such z, a subgroup T = dZ/24 is allowed if

    * it contains -2z, the image of the torsion class gamma_2, and
    * it does not contain z, since a preimage n gamma_1^2 + zeta_2 would make
      (2n + 1) gamma_1^2 torsion.

    With restriction order 24, z is a generator and only T = 2Z/24 survives.
    """
    if restriction_order is None:
        from .chern import certify_order24

        restriction_order = certify_order24()
    pi3 = pi3 if pi3 is not None else default_tables().sphere_stem(3)
    if pi3 != FGAbelianGroup.cyclic(PI3_ORDER):
        raise ValueError(f"pi_3 must be Z/{PI3_ORDER}, got {pi3}")
    if restriction_order < 1 or PI3_ORDER % restriction_order:
        raise ValueError(f"restriction order {restriction_order} does not divide {PI3_ORDER}")
    n = PI3_ORDER
    subgroups = [d for d in range(1, n + 1) if n % d == 0]
    allowed = set()
    for z in range(n):
        if _additive_order(z, n) % restriction_order:
            continue
        for d in subgroups:
            if (-2 * z) % d == 0 and z % d != 0:
                allowed.add(d)
    return TorsionLedger(restriction_order, tuple(sorted(allowed)))


def serre_two_stage_homology(m: int = PI3_ORDER, k3: K3Invariant | None = None,
                             tables: StemTables | None = None) -> list[FGAbelianGroup]:
    """H_0..H_4 of the 4-coconnected Postnikov stage.

    The 3-coconnected stage is a fibration K(Z/m, 3) -> E -> CP^inf.  Below
    degree 5 the only possible differential is the transgression
    Z = H_4(CP^inf) -> H_3(K(Z/m, 3)) = Z/m, whose image has order k3.order.
    The 4-coconnected stage is E x K(Z, 4).
    """
    k3 = k3 or K3Invariant(2)
    if m % k3.order:
        raise ValueError(f"{m} / {k3.order} is not an integer")
    tables = tables or default_tables()
    base = tables.em("K(Z,2)")
    fibre = tables.em("K(Z/m,3)", m)
    if fibre[3] != FGAbelianGroup.cyclic(m) or base[4] != Z:
        raise DataError("unexpected Eilenberg-MacLane homology")
    transgression = AbHom.from_images(Z, fibre[3], [[m // k3.order]])
    stage3 = [base[0], base[1], base[2], transgression.cokernel(), kernel_with_generators(transgression)[0]]
    return kunneth(stage3, tables.em("K(Z,4)"), 4)


def product_homology(m: int = PI3_ORDER, tables: StemTables | None = None) -> list[FGAbelianGroup]:
    """H_0..H_4 of CP^inf x K(Z/m, 3) x K(Z, 4), by the Kunneth formula."""
    tables = tables or default_tables()
    first = kunneth(tables.em("K(Z,2)"), tables.em("K(Z/m,3)", m), 4)
    return kunneth(first, tables.em("K(Z,4)"), 4)


def theta_generator_certificate(h3_order: int = 120, surjection: int = 1) -> int:
    """Order of theta in pi_3 = Z/24.

    The top class of the Poincare sphere maps to ``surjection`` times the
    generator of H_3(BG^) = Z/h3_order.  Precomposition
    Hom(Z/h3_order, Z/24) -> Hom(Z, Z/24) must be injective; theta is
    then detected by the image of the generator of the first Hom group,
    whose order is returned.
    """
    hom_src = hom_group(FGAbelianGroup.cyclic(h3_order), PI3_ORDER)
    hom_tgt = hom_group(Z, PI3_ORDER)
    if hom_tgt != FGAbelianGroup.cyclic(PI3_ORDER):
        raise CertificateError(f"Hom(Z, Z/{PI3_ORDER}) is {hom_tgt}")
    if hom_src.is_trivial():
        raise CertificateError(f"Hom(Z/{h3_order}, Z/{PI3_ORDER}) vanishes")
    g = hom_src.order()
    # generator of Hom(Z/h3, Z/24) sends 1 to 24/g; precomposing evaluates it at `surjection`
    precompose = AbHom.from_images(hom_src, hom_tgt, [[surjection * (PI3_ORDER // g)]])
    if not precompose.is_injective():
        raise CertificateError("precomposition with the degree-3 map is not injective")
    return precompose.image().order()
