"""Haar-state formulas: atoms, diagonal masses, orthogonality."""
from fractions import Fraction
from itertools import product

import pytest

from qflag.haar import (
    RationalLaurent,
    diag_mass_total,
    haar_a_lambda_sq,
    haar_datum,
    haar_diag_mass,
    haar_p0,
    su2_haar_eval,
    su2_haar_report,
    su2_orthogonality_suite,
)
from qflag.qcalc import LaurentPoly, q_pochhammer
from qflag.rootsys import LieType, Weight, build_root_system


def test_haar_p0_a2_value():
    rs = build_root_system(LieType("A", 2))
    poly = haar_p0(rs)
    # (1-q^2)^2 (1-q^4); at q = 1/2 this is (3/4)^2 (15/16)
    assert poly.evaluate(Fraction(1, 2)) == Fraction(135, 256)


def test_haar_p0_su_n_pochhammer():
    for n in (2, 3, 4):
        rs = build_root_system(LieType("A", n - 1))
        expect = LaurentPoly.const(1)
        for j in range(1, n):
            expect = expect * q_pochhammer(2, 2, j)
        assert haar_p0(rs) == expect


def test_haar_a_lambda_a1():
    rs = build_root_system(LieType("A", 1))
    res = haar_a_lambda_sq(rs, Weight((1,)))
    assert res["equal"]
    # h(|a_rho|^2) = 1/(1+q^2) for SU_q(2)
    assert res["via_product"].evaluate(Fraction(1, 2)) == Fraction(4, 5)
    expect = RationalLaurent.make(
        LaurentPoly.const(1), LaurentPoly.const(1) + LaurentPoly.monomial(2)
    )
    assert res["via_product"] == expect


def test_haar_a_lambda_sweep_equal():
    for series, rank in [("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(LieType(series, rank))
        for coords in product(range(3), repeat=rank):
            assert haar_a_lambda_sq(rs, Weight(coords))["equal"]


def test_haar_a_lambda_rejects_non_dominant():
    rs = build_root_system(LieType("A", 1))
    with pytest.raises(ValueError):
        haar_a_lambda_sq(rs, Weight((-1,)))


def test_haar_diag_mass_zero_index_is_atom():
    rs = build_root_system(LieType("B", 2))
    k = len(rs.positive_roots)
    assert haar_diag_mass(rs, (0,) * k) == haar_p0(rs)
    with pytest.raises(ValueError):
        haar_diag_mass(rs, (0,) * (k + 1))
    with pytest.raises(ValueError):
        haar_diag_mass(rs, (-1,) + (0,) * (k - 1))


def test_diag_masses_sum_to_one():
    n = 32
    for series, rank in [("A", 1), ("A", 2), ("B", 2)]:
        rs = build_root_system(LieType(series, rank))
        k = len(rs.positive_roots)
        for q in (0.5, 0.9):
            total = diag_mass_total(rs, q, n)
            assert abs(total - 1.0) < k * q ** (2 * n) + 1e-12


def test_haar_datum_exponents():
    rs = build_root_system(LieType("A", 2))
    datum = haar_datum(rs, 0.5)
    assert sorted(datum.density_exponents) == [2, 2, 4]
    assert datum.h_p0 == haar_p0(rs)


def test_su2_haar_generator_words():
    q, n = 0.5, 64
    tol = 1e-12
    # nonzero torus weight vanishes exactly
    assert su2_haar_eval("x", q, n) == 0.0
    assert su2_haar_eval("x u", q, n) == 0.0
    # h(x x*) = q^2/(1+q^2), h(x* x) = 1/(1+q^2), h(u* u) = 1/(1+q^2)
    assert su2_haar_eval("x x*", q, n) == pytest.approx(q * q / (1 + q * q), abs=tol)
    assert su2_haar_eval("x* x", q, n) == pytest.approx(1 / (1 + q * q), abs=tol)
    assert su2_haar_eval("u* u", q, n) == pytest.approx(1 / (1 + q * q), abs=tol)
    assert su2_haar_eval([], q, n) == pytest.approx(1.0, abs=tol)


def test_su2_haar_report_fields():
    report = su2_haar_report("x y", 0.5, 32)
    assert report["weight"] == 0
    assert report["tail_bound"] >= 0
    report = su2_haar_report("x x", 0.5, 32)
    assert report["weight"] == 2
    assert report["value_float"] == 0.0


def test_su2_haar_rejects_bad_tokens():
    with pytest.raises(ValueError):
        su2_haar_eval("z", 0.5, 16)
    with pytest.raises(ValueError):
        su2_haar_eval("x", 1.5, 16)


def test_orthogonality_suite():
    for q in (1.0 / 3.0, 0.5, 0.8):
        report = su2_orthogonality_suite(q, 64)
        assert report["max_deviation"] < 1e-10
        assert len(report["entries"]) == 32


def test_rational_laurent_normal_form():
    num = LaurentPoly({-1: 2, 1: 2})
    den = LaurentPoly({-2: 2, 0: 2})
    r = RationalLaurent.make(num, den)
    # common factor and the Laurent shift are stripped
    assert r == RationalLaurent.make(LaurentPoly.monomial(1), LaurentPoly.const(1))
    assert r.den.min_exp() == 0
    with pytest.raises(ZeroDivisionError):
        RationalLaurent.make(num, LaurentPoly())
