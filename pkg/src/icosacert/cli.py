"""Command-line driver: ``verify <suite> [--data PATH] [--json PATH] [--verbose] [--t1 ODD]``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
data-file errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable

from .exact.abelian import FGAbelianGroup
from .homotopy import DEGREE_FOUR_DIFFERENTIAL_LABEL

SUITES = ("group", "surface", "characters", "chern", "todd", "homotopy", "homology", "generator")
REPORT_SCHEMA = 1


@dataclass
class CheckResult:
    check_id: str
    status: str  # pass | fail | inconclusive
    expected: str
    computed: str
    provenance: str
    elapsed_ms: int

    def line(self, verbose: bool = False) -> str:
        s = f"{self.check_id}: expected {self.expected}, computed {self.computed}, {self.status}"
        if verbose:
            s += f"  [{self.provenance}; {self.elapsed_ms} ms]"
        return s


@dataclass(frozen=True)
class Check:
    check_id: str
    expected: str
    provenance: str
    compute: Callable[[Context], object]


@dataclass
class Context:
    data_path: Path | None
    t1: int | None

    def tables(self):
        from .homotopy import load_tables

        return load_tables(self.data_path)

    def transfer(self):
        from .homotopy import TransferData

        return TransferData.build(self.tables(), self.t1)


def _fmt(value) -> str:
    if isinstance(value, FGAbelianGroup):
        return str(value)
    if isinstance(value, (list, tuple)):
        inner = ", ".join(_fmt(v) for v in value)
        return f"({inner})" if isinstance(value, tuple) else f"[{inner}]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    return str(value)


# ---- group -----------------------------------------------------------------

def _group():
    from .groups import build_binary_icosahedral

    return build_binary_icosahedral()


def _census(_):
    from .groups import element_order_census

    return dict(sorted(element_order_census(_group()).items()))


def _center(_):
    g = _group()
    return sorted(g.elements[i].w.to_int() for i in g.center())


def _abelianization(_):
    return _group().abelianization()


def _sylow2_is_q8(_):
    from .groups import element_order_census, sylow_subgroup

    s = sylow_subgroup(_group(), 2)
    return dict(sorted(element_order_census(s).items()))


def _quotient(_):
    from .groups import icosahedral_quotient

    q = icosahedral_quotient()
    return (q.order, q.abelianization())


def _num_classes(_):
    from .groups import conjugacy_classes

    return len(conjugacy_classes(_group()))


def _generators_generate(_):
    from .groups import icosahedral_generators, image_generates_quotient

    x = icosahedral_generators()
    return image_generates_quotient([x.x2, x.x3, x.x5])


GROUP_CHECKS = [
    Check("group.order", "120", "DERIVED: closure of the 120 icosians", lambda c: _group().order),
    Check("group.abelianization", "0", "PUBLISHED: the group is perfect", _abelianization),
    Check("group.center", "[-1, 1]", "PUBLISHED: center is {1, -1}", _center),
    Check("group.conjugacy_classes", "9", "DERIVED: enumeration", _num_classes),
    Check("group.order_census", "{1: 1, 2: 1, 3: 20, 4: 30, 5: 24, 6: 20, 10: 24}",
          "DERIVED: enumeration", _census),
    Check("group.sylow2_q8", "{1: 1, 2: 1, 4: 6}", "PUBLISHED: Sylow 2-subgroup is Q8", _sylow2_is_q8),
    Check("group.rotation_quotient", "(60, 0)", "PUBLISHED: quotient by the center is the icosahedral group",
          _quotient),
    Check("group.generators_generate", "True", "DERIVED: x2, x3, x5 generate the quotient",
          _generators_generate),
]

# ---- surface ---------------------------------------------------------------


def _fixed_counts(_):
    from .groups import build_binary_icosahedral, icosahedral_generators
    from .surface import fixed_point_count

    g = build_binary_icosahedral()
    x = icosahedral_generators()
    elems = (x.h, x.x2, x.x3, x.x5, g.power(x.x3, 2), g.power(x.x5, 2))
    return tuple(fixed_point_count(e) for e in elems)


def _counts_class_constant(_):
    from .groups import conjugacy_classes
    from .surface import all_fixed_point_reports

    reports = all_fixed_point_reports()
    classes = conjugacy_classes(_group())
    for c in range(len(classes)):
        totals = {reports[i].total if reports[i] else None for i in classes.members(c)}
        if len(totals) != 1:
            return False
    return True


def _burnside(duality):
    def run(_):
        from .surface import burnside_consistency

        total, euler = burnside_consistency(duality=duality)
        return (total, euler)

    return run


def _genus(_):
    from .surface import build_surface

    return build_surface().genus


def _branch_count(_):
    from .surface import branch_locus

    return len(branch_locus())


SURFACE_CHECKS = [
    Check("surface.branch_points", "30", "PUBLISHED: edge midpoints of the icosahedron", _branch_count),
    Check("surface.genus", "14", "PUBLISHED: genus of the double cover", _genus),
    Check("surface.fixed_counts", "(30, 2, 0, 0, 4, 4)",
          "PUBLISHED: fixed points of h, x2, x3, x5, x3^2, x5^2", _fixed_counts),
    Check("surface.class_constant", "True", "DERIVED: fixed-point counts are class functions",
          _counts_class_constant),
    Check("surface.burnside", "(266, 2)", "DERIVED: Burnside count gives a sphere quotient", _burnside(-1)),
    Check("surface.burnside_dual_convention", "(266, 2)",
          "DERIVED: totals do not depend on the duality convention", _burnside(1)),
]

# ---- characters ------------------------------------------------------------


def _dolbeault(_):
    from .characters import h1_complex_character, h1_holomorphic_character

    chi, hol = h1_complex_character(), h1_holomorphic_character()
    ok = sum(1 for a in range(chi.group.order) if chi(a) == hol(a) + hol(a).conjugate())
    return f"{ok}/{chi.group.order}"


def _decomp(kind: str, power_of: str):
    def run(_):
        from .characters import decompose_cyclic, h1_complex_character, h1_holomorphic_character
        from .groups import icosahedral_generators

        chi = h1_complex_character() if kind == "complex" else h1_holomorphic_character()
        x = getattr(icosahedral_generators(), power_of)
        return decompose_cyclic(_group().power(x, 2), chi).multiplicities

    return run


def _decomp_q8(_):
    from .characters import decompose_q8, h1_holomorphic_character

    return decompose_q8(h1_holomorphic_character()).as_tuple()


def _class_functions(_):
    from .characters import h1_complex_character, h1_holomorphic_character

    return h1_complex_character().is_class_function() and h1_holomorphic_character().is_class_function()


CHARACTER_CHECKS = [
    Check("characters.dolbeault", "120/120", "DERIVED: complex trace = holomorphic + conjugate", _dolbeault),
    Check("characters.class_functions", "True", "DERIVED: traces constant on classes", _class_functions),
    Check("characters.complex_mod3", "(8, 10, 10)", "PUBLISHED: H^1(F; C) over the order-3 subgroup",
          _decomp("complex", "x3")),
    Check("characters.holomorphic_mod3", "(4, 5, 5)", "PUBLISHED: H^1(F; O) over the order-3 subgroup",
          _decomp("holomorphic", "x3")),
    Check("characters.holomorphic_mod5", "(2, 3, 3, 3, 3)", "PUBLISHED: H^1(F; O) over the order-5 subgroup",
          _decomp("holomorphic", "x5")),
    Check("characters.holomorphic_q8", "(0, 0, 0, 0, 7)", "PUBLISHED: H^1(F; O) over Q8", _decomp_q8),
]

# ---- chern -----------------------------------------------------------------


def _restriction_orders(_):
    from .chern import restricted_second_chern
    from .characters import h1_holomorphic_character

    return restricted_second_chern(h1_holomorphic_character()).orders()


def _order24(_):
    from .chern import certify_order24

    return certify_order24()


def _order_trivial(_):
    from .chern import certify_order24

    return certify_order24("trivial")


def _spin_naturality(_):
    from .chern import chern_of_q8_rep
    from .characters import decompose_q8
    from .groups import spin_character

    return chern_of_q8_rep(decompose_q8(spin_character(_group()))).c2.deg4.residue


def _uct(_):
    from .chern import uct_h3_with_z24

    return uct_h3_with_z24(FGAbelianGroup(), FGAbelianGroup.cyclic(120))


CHERN_CHECKS = [
    Check("chern.restriction_orders", "(8, 3, 1)", "PUBLISHED: orders of c2 restricted to Q8, Z/3, Z/5",
          _restriction_orders),
    Check("order24", "24", "PUBLISHED: c2 of H^1(F; O) has order 24 in Z/120", _order24),
    Check("chern.trivial_representation", "1", "TRIVIAL: trivial representation has c2 = 0", _order_trivial),
    Check("chern.spin_on_q8", "1", "PUBLISHED: c2 of the spin representation restricts to u", _spin_naturality),
    Check("chern.uct_h3_z24", "Z/24", "DERIVED: Hom(Z/120, Z/24) by gcd", _uct),
]

# ---- todd ------------------------------------------------------------------


def _todd(_):
    from .todd import todd_genus_dim4

    return todd_genus_dim4(12, 0)


def _todd6(_):
    from .todd import todd_genus_dim6_split

    return todd_genus_dim6_split(24)


def _c2pi4(_):
    from .todd import c2_on_pi4_bu

    return c2_on_pi4_bu(3, 7)


TODD_CHECKS = [
    Check("todd.pi2_generator", "1", "PUBLISHED: Todd genus of the pi_2 generator", _todd),
    Check("todd.dim6_split", "0", "PUBLISHED: split tangent bundle kills td_3", _todd6),
    Check("todd.c2_on_pi4", "7", "PUBLISHED: a c1^2 + b c2 acts on pi_4 by b", _c2pi4),
]

# ---- homotopy --------------------------------------------------------------


def _tables_ok(ctx):
    from .homotopy import check_table_integrity

    check_table_integrity(ctx.tables())
    return "ok"


def _pi_mt(k: int):
    def run(ctx):
        from .homotopy import derive_pi_mt

        return derive_pi_mt(k, transfer=ctx.transfer())

    return run


def _kernel_gen(ctx):
    return ctx.transfer().kernel(2)[1]


def _exactness(ctx):
    from .homotopy import exactness_holds

    tr = ctx.transfer()
    return all(exactness_holds(tr, k) for k in range(6))


HOMOTOPY_CHECKS = [
    Check("homotopy.tables", "ok", "PUBLISHED: tabulated stable stems", _tables_ok),
    *[
        Check(f"homotopy.pi_mt.{k}", v, "PUBLISHED: homotopy of the Madsen-Tillmann spectrum", _pi_mt(k))
        for k, v in zip(range(1, 5), ("0", "Z", "Z/24", "Z"))
    ],
    Check("homotopy.degree2_kernel_generator", "[(12, 1)]",
          "PUBLISHED: twelve times the projective generator plus eta^2", _kernel_gen),
    Check("homotopy.exactness", "True", "DERIVED: transfer kills its kernel in degrees 0..5", _exactness),
]

# ---- homology --------------------------------------------------------------


def _torsion(_):
    from .homotopy import torsion_h4_argument

    led = torsion_h4_argument()
    if not led.conclusive:
        return f"inconclusive {[str(g) for g in led.candidate_groups()]}"
    return (led.tors, led.k3.order)


def _k3_from_12(_):
    from .homotopy import k3_order_from_torsion

    return k3_order_from_torsion(12).order


def _serre(ctx):
    from .homotopy import K3Invariant, serre_two_stage_homology

    return serre_two_stage_homology(24, K3Invariant(2), ctx.tables())


def _serre_degrees_1_4(ctx):
    return _serre(ctx)[1:]


def _k2_trivial(_):
    # an integral Todd genus 1 on the pi_2 generator makes c1-squared/12 a pi_2 isomorphism
    from .todd import todd_genus_dim4

    return 0 if todd_genus_dim4(12, 0) == 1 else "undetermined"


def _k4_trivial(_):
    # c2 detects pi_4 of BU up to sign, so the degree-4 class splits off
    from .todd import c2_on_pi4_bu

    return 0 if abs(c2_on_pi4_bu(0, 1)) == 1 else "undetermined"


def _kunneth_cross(ctx):
    from .homotopy import K3Invariant, product_homology, serre_two_stage_homology

    t = ctx.tables()
    return serre_two_stage_homology(24, K3Invariant(1), t) == product_homology(24, t)


HOMOLOGY_CHECKS = [
    Check("homology.torsion_h4", "(Z/12, 2)", "PUBLISHED: torsion Z/12 and a k-invariant of order 2", _torsion),
    Check("homology.k3_from_torsion_12", "2", "PUBLISHED: k-invariant order 24/12", _k3_from_12),
    Check("homology.k2", "0", "PUBLISHED: witnessed by the Todd genus of the pi_2 generator", _k2_trivial),
    Check("homology.k4", "0", "PUBLISHED: witnessed by c2 on pi_4 of BU", _k4_trivial),
    Check("homology.postnikov", "[Z, 0, Z, Z/12, Z^2]",
          f"PUBLISHED: homology in degrees 0..4; transgression (4,0) -> (0,3), "
          f"labelled {DEGREE_FOUR_DIFFERENTIAL_LABEL} in the source", _serre),
    Check("homology.degrees_1_4", "[0, Z, Z/12, Z^2]", "PUBLISHED: homology in degrees 1..4", _serre_degrees_1_4),
    Check("homology.kunneth_crosscheck", "True", "DERIVED: trivial k-invariant gives the product",
          _kunneth_cross),
]

# ---- generator -------------------------------------------------------------


def _theta(_):
    from .homotopy import theta_generator_certificate

    return theta_generator_certificate()


GENERATOR_CHECKS = [
    Check("generator.theta", "24", "PUBLISHED: theta generates pi_3 = Z/24", _theta),
]

SUITE_CHECKS: dict[str, list[Check]] = {
    "group": GROUP_CHECKS,
    "surface": SURFACE_CHECKS,
    "characters": CHARACTER_CHECKS,
    "chern": CHERN_CHECKS,
    "todd": TODD_CHECKS,
    "homotopy": HOMOTOPY_CHECKS,
    "homology": HOMOLOGY_CHECKS,
    "generator": GENERATOR_CHECKS,
}


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return [c for s in SUITES for c in SUITE_CHECKS[s]]
    return list(SUITE_CHECKS[suite])


def run_check(check: Check, ctx: Context) -> CheckResult:
    start = time.perf_counter()
    try:
        computed = _fmt(check.compute(ctx))
    except Exception as exc:  # a failing pipeline is a failed check, not a crash
        computed = f"error: {type(exc).__name__}: {exc}"
    elapsed = int((time.perf_counter() - start) * 1000)
    if computed.startswith("inconclusive"):
        status = "inconclusive"
    else:
        status = "pass" if computed == check.expected else "fail"
    return CheckResult(check.check_id, status, check.expected, computed, check.provenance, elapsed)


def build_report(suite: str, results: list[CheckResult]) -> dict:
    summary = {s: sum(1 for r in results if r.status == s) for s in ("pass", "fail", "inconclusive")}
    return {"schema": REPORT_SCHEMA, "suite": suite, "results": [asdict(r) for r in results], "summary": summary}


def run_suite(name: str, data_path: str | Path | None = None, json_out: str | Path | None = None, *,
              t1: int | None = None, verbose: bool = False, dump_group: str | Path | None = None,
              out=None) -> int:
    from .homotopy import DataError, check_table_integrity, load_tables

    out = out or sys.stdout
    err = sys.stderr
    if name != "all" and name not in SUITE_CHECKS:
        print(f"verify: unknown suite {name!r}", file=err)
        return 2
    if t1 is not None and t1 % 2 == 0:
        print(f"verify: --t1 must be odd, got {t1}", file=err)
        return 2
    path = Path(data_path) if data_path is not None else None
    try:
        check_table_integrity(load_tables(path))
    except DataError as exc:
        print(f"verify: data error: {exc}", file=err)
        return 2
    if dump_group is not None:
        Path(dump_group).write_text(_group().dumps())
    ctx = Context(path, t1)
    results = []
    for check in checks_for(name):
        r = run_check(check, ctx)
        results.append(r)
        print(r.line(verbose), file=out)
    report = build_report(name, results)
    s = report["summary"]
    print(f"summary: {s['pass']} pass, {s['fail']} fail, {s['inconclusive']} inconclusive", file=out)
    if json_out is not None:
        Path(json_out).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if s["fail"] == 0 and s["inconclusive"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Run exact verification suites.")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.add_argument("--data", metavar="PATH", help="stable stem table (JSON, schema 1)")
    p.add_argument("--json", metavar="PATH", dest="json_out", help="write a JSON report")
    p.add_argument("--verbose", action="store_true", help="show provenance and timings")
    p.add_argument("--t1", type=int, metavar="ODD_INT", help="degree-2 transfer parameter")
    p.add_argument("--dump-group", metavar="PATH", help="write the group model as JSON")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run_suite(args.suite, args.data, args.json_out, t1=args.t1, verbose=args.verbose,
                     dump_group=args.dump_group)


if __name__ == "__main__":
    sys.exit(main())
