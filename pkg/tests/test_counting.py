import pytest

from oracles import composition_sum_brute
from parkstat.counting import (
    Enumerator,
    brute_enumerators,
    closed_form,
    coeff_composition_sum,
    coeff_inclusion_exclusion,
    lt,
    rp,
    rr,
    verify_theorems,
    zp,
)
from parkstat.errors import ParamOutOfRange


def test_n3_enumerators():
    expected = Enumerator(3, (0, 4, 6, 6))
    for f in (lt, zp, rp, rr):
        assert f(3) == expected
    assert str(expected) == "4t+6t^2+6t^3"


def test_n1():
    for f in (lt, zp, rp, rr):
        assert f(1) == Enumerator(1, (0, 1))
    assert str(lt(1)) == "t"


def test_n4_coefficients():
    assert rp(4).coeffs == (0, 27, 38, 36, 24)
    assert rp(4).total == 125


def test_rook_enumerator_has_no_run_zero():
    for n in range(1, 6):
        assert rr(n)[0] == 0


def test_sharded_equals_serial():
    assert brute_enumerators(5, workers=3) == brute_enumerators(5, workers=1)


@pytest.mark.parametrize("n, r, value", [(3, 1, 4), (3, 2, 6), (3, 3, 6), (4, 2, 38), (4, 3, 36)])
def test_closed_form_examples(n, r, value):
    assert coeff_composition_sum(n, r) == value
    assert coeff_inclusion_exclusion(n, r) == value


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_edges(n):
    import math

    assert coeff_composition_sum(n, n) == math.factorial(n)
    assert coeff_inclusion_exclusion(n, 1) == (n - 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_composition_sum_against_explicit_enumeration(n):
    for r in range(1, n + 1):
        assert coeff_composition_sum(n, r) == composition_sum_brute(n, r)


def test_closed_forms_agree_to_60():
    for n in range(1, 61):
        col = [coeff_inclusion_exclusion(n, r) for r in range(1, n + 1)]
        assert col == [coeff_composition_sum(n, r) for r in range(1, n + 1)]
        assert sum(col) == (n + 1) ** (n - 1)
        assert all(c > 0 for c in col)


def test_param_checks():
    with pytest.raises(ParamOutOfRange):
        coeff_composition_sum(3, 0)
    with pytest.raises(ParamOutOfRange):
        coeff_inclusion_exclusion(3, 4)


def test_enumerator_serialisation():
    e = Enumerator(3, (0, 4, 6, 6))
    assert e.to_dict() == {"n": 3, "coeffs": {"1": "4", "2": "6", "3": "6"}}
    assert Enumerator.from_json(e.to_json()) == e
    assert e.csv_rows() == [(3, 0, 0), (3, 1, 4), (3, 2, 6), (3, 3, 6)]
    big = closed_form(40)
    assert Enumerator.from_json(big.to_json()) == big


@pytest.mark.parametrize("n", range(1, 7))
def test_verify_theorems(n):
    report = verify_theorems(n)
    assert report.passed, [c for c in report.checks if not c.passed]
    e = report.enumerators
    assert e["lt"] == closed_form(n, "composition_sum") == closed_form(n)
