import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icosacert.characters import (
    CyclicDecomposition,
    DecompositionError,
    char_h1_holomorphic,
    decompose_cyclic,
    decompose_q8,
    h1_complex_character,
    h1_holomorphic_character,
    trivial_character,
)
from icosacert.exact.cyclotomic import CyclotomicNumber
from icosacert.groups import CharacterVector, build_binary_icosahedral, icosahedral_generators, spin_character


@pytest.fixture(scope="module")
def g():
    return build_binary_icosahedral()


@pytest.fixture(scope="module")
def gens():
    return icosahedral_generators()


def test_dimensions():
    assert h1_complex_character().dimension == 28
    assert h1_holomorphic_character().dimension == 14


def test_dolbeault_identity_everywhere(g):
    chi, hol = h1_complex_character(), h1_holomorphic_character()
    for a in range(g.order):
        assert chi(a) == hol(a) + hol(a).conjugate()


def test_class_functions():
    assert h1_complex_character().is_class_function()
    assert h1_holomorphic_character().is_class_function()


def test_hyperelliptic_involution_acts_by_minus_one(gens):
    assert char_h1_holomorphic(gens.h) == -14
    assert h1_complex_character()(gens.h) == -28


def test_cyclic_decompositions(g, gens):
    x3sq, x5sq = g.power(gens.x3, 2), g.power(gens.x5, 2)
    assert decompose_cyclic(x3sq, h1_complex_character()).multiplicities == (8, 10, 10)
    assert decompose_cyclic(x3sq, h1_holomorphic_character()).multiplicities == (4, 5, 5)
    assert decompose_cyclic(x5sq, h1_holomorphic_character()).multiplicities == (2, 3, 3, 3, 3)


def test_q8_decompositions():
    assert decompose_q8(h1_holomorphic_character()).as_tuple() == (0, 0, 0, 0, 7)
    assert decompose_q8(h1_complex_character()).as_tuple() == (0, 0, 0, 0, 14)
    assert decompose_q8(spin_character(build_binary_icosahedral())).as_tuple() == (0, 0, 0, 0, 1)


def test_trivial_representation(g, gens):
    triv = trivial_character(g, 14)
    assert decompose_q8(triv).as_tuple() == (14, 0, 0, 0, 0)
    assert decompose_cyclic(gens.x5, triv).multiplicities == (14,) + (0,) * 9


def test_non_character_is_rejected(g, gens):
    # indicator of the identity restricts to (regular character) / 10 on a cyclic group of order 10
    delta = CharacterVector(g, tuple(CyclotomicNumber.from_rational(int(a == g.identity)) for a in range(g.order)))
    with pytest.raises(DecompositionError):
        decompose_cyclic(gens.x5, delta)


def test_json_shapes():
    d = CyclicDecomposition(3, (4, 5, 5))
    assert d.to_json() == {"modulus": 3, "multiplicities": [4, 5, 5]}
    assert d.residues() == [0] * 4 + [1] * 5 + [2] * 5
    assert decompose_q8(h1_holomorphic_character()).to_json() == {"q8": [0, 0, 0, 0, 7]}


@settings(max_examples=120)
@given(st.integers(0, 119), st.sampled_from(["complex", "holomorphic", "spin"]))
def test_multiplicities_are_nonnegative_integers_on_every_cyclic_subgroup(a, which):
    g = build_binary_icosahedral()
    chi = {"complex": h1_complex_character, "holomorphic": h1_holomorphic_character,
           "spin": lambda: spin_character(g)}[which]()
    d = decompose_cyclic(a, chi)
    assert all(isinstance(m, int) and m >= 0 for m in d.multiplicities)
    assert d.dimension == chi.dimension
    assert d.modulus == g.element_order(a)
