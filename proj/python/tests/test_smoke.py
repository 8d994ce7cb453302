import math

import pytest

import sombor
from sombor import Radical, Ring


def test_z15_total():
    z15 = Ring.integers_mod(15)
    so = sombor.sombor_index(z15, "total")
    assert str(so) == "218*sqrt(2) + 16*sqrt(85)"
    assert sombor.edge_partition(z15, "total") == (13, 16, 20, 49)
    assert math.isclose(float(so), 218 * math.sqrt(2) + 16 * math.sqrt(85))
    assert sombor.so_total_pq(3, 5) == so


def test_z15_unit():
    z15 = Ring.integers_mod(15)
    assert sombor.sombor_index(z15, "unit") == Radical.parse("120*sqrt(2) + 40*sqrt(113)")
    assert sombor.predicted_degrees(z15, "unit") == (8, 7)


def test_radical_arithmetic():
    a = Radical.term(1, 1, 2)
    assert a * a == Radical.parse("2")
    assert (a - a).is_zero()
    assert Radical.parse("sqrt(8)").terms() == {2: (2, 1)}


def test_printed_variants_disagree():
    assert sombor.so_unit_prime_power(5, 1, "printed") != sombor.so_unit_prime_power(5, 1)
    z9 = Ring.integers_mod(9)
    assert str(sombor.so_unit_local(z9, "printed")) == "54*sqrt(5)"
    assert sombor.so_unit_local(z9) == sombor.sombor_index(z9, "unit")


def test_closed_forms_list_local_first():
    forms = sombor.closed_forms(Ring.integers_mod(9), "unit")
    assert forms[0]["formula"] == "so_unit_local"
    assert {f["variant"] for f in forms} == {"printed", "corrected"}


def test_truncated_poly():
    r = Ring.truncated_poly(3, 2)
    assert r.name == "F_3[x]/(x^2)"
    assert r.is_local() and r.unit_count() == 6
    assert sombor.so_total_local(r) == sombor.sombor_index(r, "total")


def test_verify_and_sweep():
    case = sombor.verify(45, "unit")
    assert case["partition_oracle"]["edges"] == 528
    report = sombor.sweep("p2q", max_n=200, workers=2)
    assert report["summary"]["required_ok"]
    assert any(e["formula"] == "so_unit_p2q" and e["n"] == 45 for e in report["errata"])


def test_errors():
    with pytest.raises(sombor.OffFamilyError):
        sombor.so_total_pq(5, 3)
    with pytest.raises(sombor.NonLocalRingError):
        sombor.so_total_local(Ring.integers_mod(15))
    with pytest.raises(sombor.EmptySweepError):
        sombor.sweep("p2q", max_n=10)
    with pytest.raises(ValueError):
        Ring.integers_mod(1)
    with pytest.raises(ValueError):
        Radical.parse("sqrt(")
