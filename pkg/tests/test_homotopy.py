import copy
import json

import pytest

from icosacert.exact.abelian import FGAbelianGroup
from icosacert.homotopy import (
    CertificateError,
    DataError,
    EtaAction,
    K3Invariant,
    TransferData,
    TransferError,
    check_table_integrity,
    default_data_path,
    default_tables,
    derive_pi_mt,
    exactness_holds,
    k3_order_from_torsion,
    load_tables,
    parse_tables,
    product_homology,
    serre_two_stage_homology,
    theta_generator_certificate,
    torsion_h4_argument,
)

G = FGAbelianGroup.parse
ODD_T1 = [1, 3, 5, 7, 9, 11]


@pytest.fixture
def raw():
    return json.loads(default_data_path().read_text())


def test_tables_match_published_values():
    t = default_tables()
    assert [str(t.sphere_stem(k)) for k in range(1, 7)] == ["Z/2", "Z/2", "Z/24", "0", "0", "Z/2"]
    assert [str(t.cp_stem(k)) for k in range(1, 8)] == ["0", "Z", "0", "Z", "Z/2", "Z", "Z/2"]
    check_table_integrity(t)


def test_eta_chain():
    eta = EtaAction.from_tables(default_tables())
    assert not eta.map(2).compose(eta.map(1)).is_zero()
    assert eta.map(2).image() == G("Z/2")


@pytest.mark.parametrize(
    "mutate",
    [
        lambda r: r.update(bogus=1),
        lambda r: r.pop("eta"),
        lambda r: r.update(schema=2),
        lambda r: r["sphere_stems"].update({"3": "Z/12"}),
        lambda r: r["sphere_stems"].pop("6"),
        lambda r: r["cp_stems"].update({"2": "Q"}),
        lambda r: r.update(transfer_t1=2),
        lambda r: r["eta"].update({"2": 6}),
        lambda r: r["em_homology"]["K(Z,2)"].update(extra="x"),
    ],
)
def test_corrupted_tables_are_rejected(raw, mutate):
    bad = copy.deepcopy(raw)
    mutate(bad)
    with pytest.raises(DataError):
        check_table_integrity(parse_tables(bad))


def test_load_errors(tmp_path):
    with pytest.raises(DataError):
        load_tables(tmp_path / "missing.json")
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(DataError):
        load_tables(p)


def test_pi_mt_default():
    assert [str(derive_pi_mt(k)) for k in range(1, 5)] == ["0", "Z", "Z/24", "Z"]
    assert TransferData.build().kernel(2)[1] == [(12, 1)]


@pytest.mark.parametrize("t1", ODD_T1)
def test_degree2_kernel_is_infinite_cyclic_for_every_odd_t1(t1):
    kernel, gens = TransferData.build(t1=t1).kernel(2)
    assert kernel == G("Z")
    assert len(gens) == 1 and gens[0][1] == 1


@pytest.mark.parametrize("t1", ODD_T1)
def test_exactness_in_every_degree(t1):
    tr = TransferData.build(t1=t1)
    assert all(exactness_holds(tr, k) for k in range(6))


@pytest.mark.parametrize("t1", [1, 5, 7, 11])
def test_transfer_surjective_when_t1_is_a_unit_mod_24(t1):
    assert TransferData.build(t1=t1).non_surjective_degrees() == []


@pytest.mark.parametrize("t1", [3, 9])
def test_transfer_not_surjective_when_3_divides_t1(t1):
    tr = TransferData.build(t1=t1)
    assert tr.non_surjective_degrees() == [2]
    with pytest.raises(TransferError):
        derive_pi_mt(1, transfer=tr)
    assert tr.kernel(2)[1] == [(4, 1)]


def test_even_t1_rejected():
    with pytest.raises(TransferError):
        TransferData.build(t1=2)


def test_k_out_of_range():
    with pytest.raises(ValueError):
        derive_pi_mt(5)


@pytest.mark.parametrize("size, order", [(12, 2), (24, 1), (1, 24)])
def test_k3_from_torsion(size, order):
    assert k3_order_from_torsion(size).order == order


@pytest.mark.parametrize("size", [5, 120, 0])
def test_k3_from_torsion_rejects(size):
    with pytest.raises(ValueError):
        k3_order_from_torsion(size)


def test_torsion_argument_standard():
    led = torsion_h4_argument()
    assert led.conclusive
    assert led.tors == G("Z/12") and led.k3 == K3Invariant(2)
    assert torsion_h4_argument(24).candidates == (2,)


def test_torsion_argument_inconclusive_for_restriction_order_12():
    led = torsion_h4_argument(12)
    assert not led.conclusive and led.tors is None and led.k3 is None
    assert G("Z/12") in led.candidate_groups()


@pytest.mark.parametrize("bad", [120, 5])
def test_torsion_argument_rejects_non_divisors(bad):
    with pytest.raises(ValueError):
        torsion_h4_argument(bad)


def test_torsion_argument_needs_pi3_z24():
    with pytest.raises(ValueError):
        torsion_h4_argument(24, G("Z/12"))


@pytest.mark.parametrize(
    "order, expected",
    [(2, ["Z", "0", "Z", "Z/12", "Z^2"]), (1, ["Z", "0", "Z", "Z/24", "Z^2"]), (24, ["Z", "0", "Z", "0", "Z^2"])],
)
def test_serre_two_stage(order, expected):
    assert [str(h) for h in serre_two_stage_homology(24, K3Invariant(order))] == expected


def test_serre_trivial_invariant_is_product():
    assert serre_two_stage_homology(24, K3Invariant(1)) == product_homology(24)


def test_serre_rejects_non_divisor():
    with pytest.raises(ValueError):
        serre_two_stage_homology(10, K3Invariant(4))


def test_k3_from_torsion_reproduces_h3():
    led = torsion_h4_argument()
    assert serre_two_stage_homology(24, led.k3)[3] == led.tors


def test_theta_certificate():
    assert theta_generator_certificate() == 24
    assert theta_generator_certificate(60) == 12
    with pytest.raises(CertificateError):
        theta_generator_certificate(surjection=0)
    with pytest.raises(CertificateError):
        theta_generator_certificate(surjection=2)
