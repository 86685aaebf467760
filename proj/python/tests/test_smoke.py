from fractions import Fraction

import pytest

import frobkit


def test_number_theory():
    assert frobkit.is_prime(10007)
    assert frobkit.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert frobkit.euler_phi(36) == 12
    assert frobkit.jordan_totient2(6) == 24
    assert frobkit.multiplicative_order(3, 8) == 2
    assert frobkit.cyclotomic_value(30, 2) == 331


def test_nearfield_counts():
    assert frobkit.dickson_condition(3, 1, 2)
    assert not frobkit.dickson_condition(3, 1, 4)
    assert frobkit.closed_form_lB(3, 1, 2) == 5
    assert frobkit.clifford_class_count(3, 1, 2) == 5
    assert frobkit.nearfield_class_count(3, 1, 2) == 5
    assert frobkit.lB_lower_bound(3, 1, 2) < 5
    assert frobkit.clifford_class_count(7, 3, 2) == frobkit.closed_form_lB(7, 3, 2)


def test_groups():
    r = frobkit.frobenius_class_report(13, 12)
    assert (r["order"], r["k"], r["k_p"], r["k_p_prime"]) == (156, 13, 2, 12)
    e = frobkit.exceptional_11_report()
    assert (e["order"], e["k"], e["k_p"], e["k_p_prime"]) == (14520, 10, 2, 9)
    counts = sorted(rec["class_count"] for rec in frobkit.find_regular_subgroups(5))
    assert counts == [7, 12, 24]


def test_bounds():
    assert frobkit.out_order("A", 7, 3, 1) == 6
    assert frobkit.torus_lower_bound("G2", 4) == Fraction(19, 3)
    bc = frobkit.scan_exceptions("BC")
    assert [(c["n"], c["p"], c["q"]) for c in bc["exceptions"]] == [(4, 5, 2)]
    assert any(c["q"] == 4 and c["p"] == 5 for c in bc["flagged"])
    assert not frobkit.sum_of_two_divisors(1368, 768)


def test_reports():
    rep = frobkit.nearfield_report(3, 1, 2, brute_force=True)
    assert rep["schema"] == "frobkit-report/1"
    assert rep["status"] == "pass"
    assert frobkit.frobenius_report(199)["status"] == "pass"
    assert frobkit.scan_report("BC")["status"] == "pass"


def test_errors():
    with pytest.raises(frobkit.FrobkitError):
        frobkit.nearfield_report(3, 1, 4)
    with pytest.raises(ValueError):
        frobkit.out_order("H3", 4)
