import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icosacert.characters import CyclicDecomposition, Q8Decomposition, decompose_q8, h1_holomorphic_character
from icosacert.chern import (
    CyclicCohClass,
    GhatH4,
    Q8CohClass,
    certify_order24,
    chern_of_cyclic_rep,
    chern_of_cyclic_rep_whitney,
    chern_of_q8_rep,
    crt_order,
    restricted_second_chern,
    uct_h3_with_z24,
)
from icosacert.exact.abelian import FGAbelianGroup
from icosacert.groups import build_binary_icosahedral, spin_character

G = FGAbelianGroup.parse


def test_cyclic_examples():
    assert chern_of_cyclic_rep(CyclicDecomposition(3, (4, 5, 5))).c2.deg4.residue == 1
    assert chern_of_cyclic_rep(CyclicDecomposition(5, (2, 3, 3, 3, 3))).c2.deg4.residue == 0
    triv = chern_of_cyclic_rep(CyclicDecomposition(5, (7, 0, 0, 0, 0)))
    assert (triv.c1.deg2.residue, triv.c2.deg4.residue) == (0, 0)


def test_elementary_symmetric_values_before_reduction():
    # residues {1 x5, 2 x5}: e1 = 15, e2 = (225 - 25) / 2 = 100
    d = CyclicDecomposition(3, (4, 5, 5))
    assert chern_of_cyclic_rep(d).c1.deg2.residue == 15 % 3
    assert 100 % 3 == chern_of_cyclic_rep(d).c2.deg4.residue


def test_q8_examples():
    assert chern_of_q8_rep(Q8Decomposition(0, 0, 0, 0, 7)).c2.deg4.residue == 7
    c = chern_of_q8_rep(Q8Decomposition(0, 1, 1, 0, 0))
    assert tuple(x.residue for x in c.c1.deg2) == (1, 1) and c.c2.deg4.residue == 0
    assert chern_of_q8_rep(Q8Decomposition(0, 0, 0, 0, 1)).c2.deg4.residue == 1


@pytest.mark.parametrize("triple, order", [((7, 1, 0), 24), ((1, 1, 1), 120), ((0, 0, 0), 1), ((4, 0, 0), 2)])
def test_crt_order(triple, order):
    assert crt_order(GhatH4.make(*triple)) == order


def test_crt_round_trip_is_bijective():
    seen = set()
    for r in range(120):
        x = GhatH4.from_mod120(r)
        assert x.to_mod120().residue == r
        seen.add((x.mod8.residue, x.mod3.residue, x.mod5.residue))
    assert len(seen) == 120


def test_ghat_json():
    assert GhatH4.make(7, 1, 0).to_json() == {"mod8": 7, "mod3": 1, "mod5": 0, "mod120": 55, "order": 24}


q8_classes = st.builds(Q8CohClass.make, st.integers(-3, 3), st.integers(0, 1), st.integers(0, 1), st.integers(0, 7))


@given(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))
def test_q8_degree_two_products_vanish(a1, b1, a2, b2):
    x = Q8CohClass.make(0, a1, b1)
    y = Q8CohClass.make(0, a2, b2)
    p = x * y
    assert p == Q8CohClass.make(0)


@given(q8_classes, q8_classes, q8_classes)
def test_q8_ring_is_commutative_and_associative(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_q8_relations_on_generators():
    u = Q8CohClass.make(0, u=1)
    a = Q8CohClass.make(0, a=1)
    eight_u = u
    for _ in range(7):
        eight_u = eight_u + u
    assert eight_u == Q8CohClass.make(0)
    assert a + a == Q8CohClass.make(0)


cyclic_decomps = st.integers(2, 12).flatmap(
    lambda n: st.builds(lambda ms: CyclicDecomposition(n, tuple(ms)), st.lists(st.integers(0, 6), min_size=n, max_size=n))
)


@settings(max_examples=150)
@given(cyclic_decomps)
def test_symmetric_functions_agree_with_line_products(d):
    assert chern_of_cyclic_rep(d) == chern_of_cyclic_rep_whitney(d)


@settings(max_examples=150)
@given(cyclic_decomps)
def test_sum_with_dual(d):
    n = d.modulus
    dual = CyclicDecomposition(n, tuple(d.multiplicities[(-r) % n] for r in range(n)))
    both = CyclicDecomposition(n, tuple(a + b for a, b in zip(d.multiplicities, dual.multiplicities)))
    c = chern_of_cyclic_rep(d)
    c_sum = chern_of_cyclic_rep(both)
    assert c_sum.c1.deg2.residue == 0
    assert c_sum.c2.deg4 == c.c2.deg4 * 2 - c.c1.deg2 * c.c1.deg2


def test_spin_restricts_to_u():
    spin = spin_character(build_binary_icosahedral())
    assert chern_of_q8_rep(decompose_q8(spin)).c2 == Q8CohClass.make(0, u=1)


def test_order24_pipeline():
    x = restricted_second_chern(h1_holomorphic_character())
    assert x.orders() == (8, 3, 1)
    assert certify_order24() == 24


@pytest.mark.parametrize("rep", ["holomorphic", "complex", "trivial"])
def test_orders_divide_120(rep):
    assert 120 % certify_order24(rep) == 0


def test_trivial_representation_has_order_one():
    assert certify_order24("trivial") == 1


def test_unknown_representation():
    with pytest.raises(ValueError):
        certify_order24("adjoint")


@pytest.mark.parametrize("h2, h3, out", [("0", "Z/120", "Z/24"), ("0", "Z", "Z/24"), ("Z", "0", "0"), ("Z/2", "0", "Z/2")])
def test_uct(h2, h3, out):
    assert uct_h3_with_z24(G(h2), G(h3)) == G(out)


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        CyclicCohClass.make(3, 1) * CyclicCohClass.make(5, 1)
