from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icosacert.exact.cyclotomic import ONE, ORDER
from icosacert.groups import build_binary_icosahedral, conjugacy_classes, icosahedral_generators
from icosacert.surface import (
    ConsistencyError,
    ProjPoint,
    SurfaceError,
    all_fixed_point_reports,
    branch_locus,
    build_surface,
    burnside_consistency,
    det2,
    eigen_data,
    fixed_point_count,
    fixed_points_on_surface,
    orbit,
    riemann_hurwitz_genus,
    stabilizer,
    su2_matrix,
)


@pytest.fixture(scope="module")
def g():
    return build_binary_icosahedral()


def test_su2_matrices_have_determinant_one(g):
    assert all(det2(su2_matrix(q)) == ONE for q in g.elements)


def test_eigen_data_of_noncentral_elements(g):
    for a, q in enumerate(g.elements):
        if a in g.center():
            with pytest.raises(SurfaceError):
                eigen_data(q)
            continue
        p1, p2 = eigen_data(q)
        assert (p1.exponent + p2.exponent) % ORDER == 0
        assert ORDER // gcd(p1.exponent, ORDER) == g.element_order(a)


def test_branch_locus_is_a_single_orbit_of_30(g):
    pts = branch_locus()
    assert len(pts) == 30
    assert orbit(pts[0]) == set(pts)


def test_branch_point_stabilizers(g):
    p = branch_locus()[0]
    stab = stabilizer(p)
    assert len(stab) == 4
    # the antipodal point [-conj z1 : conj z0] shares the rotation axis
    anti = ProjPoint.of(-p.z1.conjugate(), p.z0.conjugate())
    assert anti in set(branch_locus())
    pair = [a for a, q in enumerate(g.elements) if p.apply(su2_matrix(q)) in (p, anti)]
    assert len(pair) == 8
    # images in the rotation group: divide by the center
    assert len(stab) // 2 == 2 and len(pair) // 2 == 4


@pytest.mark.parametrize("branch, genus", [(30, 14), (2, 0), (4, 1), (6, 2)])
def test_riemann_hurwitz(branch, genus):
    assert riemann_hurwitz_genus(2, branch) == genus


@pytest.mark.parametrize("sheets, branch", [(2, 29), (3, 30), (2, -2)])
def test_riemann_hurwitz_rejects(sheets, branch):
    with pytest.raises(SurfaceError):
        riemann_hurwitz_genus(sheets, branch)


def test_surface_model():
    s = build_surface()
    assert (s.half_degree, s.genus, s.euler_characteristic) == (15, 14, -26)


def test_fixed_point_counts(g):
    x = icosahedral_generators()
    elems = (x.h, x.x2, x.x3, x.x5, g.power(x.x3, 2), g.power(x.x5, 2))
    assert tuple(fixed_point_count(e) for e in elems) == (30, 2, 0, 0, 4, 4)


def test_identity_has_infinite_fixed_set(g):
    with pytest.raises(SurfaceError, match="infinite"):
        fixed_points_on_surface(g.elements[g.identity])
    with pytest.raises(SurfaceError):
        fixed_point_count(g.identity)


@pytest.mark.parametrize("duality", [-1, 1])
def test_counts_constant_on_classes(g, duality):
    reports = all_fixed_point_reports(duality)
    cc = conjugacy_classes(g)
    for c in range(len(cc)):
        totals = {reports[a].total for a in cc.members(c) if reports[a] is not None}
        assert len(totals) <= 1


def test_counts_do_not_depend_on_duality(g):
    a, b = all_fixed_point_reports(-1), all_fixed_point_reports(1)
    assert [r.total if r else None for r in a] == [r.total if r else None for r in b]


@pytest.mark.parametrize("duality", [-1, 1])
def test_burnside(duality):
    assert burnside_consistency(duality=duality) == (266, Fraction(2))


def test_rotations_are_nontrivial_roots_of_unity(g):
    for r in all_fixed_point_reports():
        if r is None:
            continue
        for e in r.rotations():
            assert e % ORDER != 0
            # rotation order divides the element order
            assert r.element_order % (ORDER // gcd(e, ORDER)) == 0


def test_report_json_shape(g):
    x = icosahedral_generators()
    data = all_fixed_point_reports()[x.x2].to_json()
    assert data["total"] == 2 and data["element_order"] == 4
    assert all({"base_point", "lifts_fixed", "is_branch", "rotation_exponent", "rotation_root_order"} <= set(p) for p in data["points"])


def test_wrong_half_degree_breaks_tangent_compatibility(g):
    # with an even half degree the fibre of O(2m) no longer matches the tangent at fixed branch points
    s = build_surface()
    bad = type(s)(14, s.branch, s.genus)
    x = icosahedral_generators()
    with pytest.raises(ConsistencyError):
        fixed_points_on_surface(g.elements[x.x2], bad)


@given(st.integers(0, 119), st.integers(0, 119))
def test_counts_are_conjugation_invariant(a, b):
    g = build_binary_icosahedral()
    if a == g.identity:
        return
    assert fixed_point_count(a) == fixed_point_count(g.conj(b, a))
