"""Exact Laurent arithmetic, q-integers and quantum dimensions."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qflag.qcalc import (
    LaurentPoly,
    eval_laurent,
    f_matrix_exponents,
    laurent_gcd,
    one_param_exponents,
    q_integer,
    q_pochhammer,
    quantum_dim_product,
    quantum_dim_weight_sum,
    torus_character,
)
from qflag.repdata import weight_table
from qflag.rootsys import LieType, Weight, build_root_system

polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=6
).map(LaurentPoly)


@given(polys, polys)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
@settings(max_examples=60)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_exact_div_roundtrip(a, b):
    prod = a * b
    if b:
        assert prod.exact_div(b) == a


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        (LaurentPoly.monomial(1) + LaurentPoly.const(1)).exact_div(
            LaurentPoly.monomial(1) - LaurentPoly.const(1)
        )


@given(polys)
def test_mirror_involution(a):
    assert a.mirror().mirror() == a


def test_q_integer_values():
    assert q_integer(1) == LaurentPoly.const(1)
    assert q_integer(2).to_terms() == [[-1, 1], [1, 1]]
    assert q_integer(3).to_terms() == [[-2, 1], [0, 1], [2, 1]]
    assert q_integer(-2) == -q_integer(2)
    assert q_integer(0) == LaurentPoly()
    # evaluation: [n]_q = (q^n - q^-n)/(q - q^-1)
    q = Fraction(1, 3)
    for n in range(1, 6):
        assert eval_laurent(q_integer(n), q) == (q ** n - q ** -n) / (q - 1 / q)


def test_q_integer_product_identity():
    # [2]_q [3]_q = [4]_q + [2]_q
    assert q_integer(2) * q_integer(3) == q_integer(4) + q_integer(2)


def test_q_pochhammer():
    assert q_pochhammer(2, 2, 0) == LaurentPoly.const(1)
    one = LaurentPoly.const(1)
    assert q_pochhammer(2, 2, 2) == (one - LaurentPoly.monomial(2)) * (
        one - LaurentPoly.monomial(4)
    )


def test_eval_laurent_domain():
    p = LaurentPoly.monomial(-1)
    with pytest.raises(ValueError):
        eval_laurent(p, Fraction(2))
    assert eval_laurent(p, Fraction(2), allow_outside=True) == Fraction(1, 2)
    assert eval_laurent(p, 0.5) == pytest.approx(2.0)


def test_quantum_dim_a1():
    rs = build_root_system(LieType("A", 1))
    for n in range(5):
        lam = Weight((n,))
        assert quantum_dim_product(rs, lam) == q_integer(n + 1)


def test_quantum_dim_weight_sum_matches_product():
    rs = build_root_system(LieType("B", 2))
    lam = Weight((1, 1))
    table = weight_table(rs, lam)
    assert quantum_dim_weight_sum(rs, lam, table) == quantum_dim_product(rs, lam)


def test_f_matrix_exponents_a1():
    rs = build_root_system(LieType("A", 1))
    lam = Weight((2,))
    exps = f_matrix_exponents(rs, lam, weight_table(rs, lam))
    assert exps == {-2: 1, 0: 1, 2: 1}


def test_f_matrix_trace_symmetry():
    # sum of q^e equals sum of q^-e: the exponent multiset is symmetric
    rs = build_root_system(LieType("G", 2))
    lam = Weight((1, 0))
    exps = f_matrix_exponents(rs, lam, weight_table(rs, lam))
    assert exps == {-e: m for e, m in exps.items()}


def test_one_param_exponents():
    rs = build_root_system(LieType("A", 1))
    pair = one_param_exponents(rs, Weight((1,)), Weight((1,)))
    assert (pair.modular, pair.scaling) == (2, 0)
    pair = one_param_exponents(rs, Weight((1,)), Weight((-1,)))
    assert (pair.modular, pair.scaling) == (0, 2)


def test_torus_character():
    t = (complex(0, 1),)
    assert torus_character(t, Weight((2,))) == pytest.approx(-1)
    with pytest.raises(ValueError):
        torus_character((2.0,), Weight((1,)))


def test_laurent_gcd():
    a = q_integer(2) * q_integer(3)
    b = q_integer(2) * q_integer(5)
    g = laurent_gcd(a, b)
    # gcd is normalized: min exponent 0, primitive, positive leading coeff
    assert g == LaurentPoly({0: 1, 2: 1})
    assert a.exact_div(g) * g == a
