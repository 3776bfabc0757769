"""Exact Laurent-polynomial arithmetic in q and the q-special values built on it.

Quantum dimensions, q-integers, q-Pochhammer symbols and the diagonal
character exponents are all carried as integer-coefficient Laurent
polynomials so that the cross-formula identities can be checked exactly.
Division is exact or it raises; nothing is ever rounded here.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import RootSystem, Weight, inner_product, weyl_vector

__all__ = [
    "LaurentPoly",
    "ExponentPair",
    "q_integer",
    "q_pochhammer",
    "quantum_dim_product",
    "quantum_dim_weight_sum",
    "f_matrix_exponents",
    "one_param_exponents",
    "torus_character",
    "eval_laurent",
    "pairing_int",
    "laurent_gcd",
]


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in q, stored as {exponent: coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                v = c.get(e, 0) + v
                if v:
                    c[e] = v
                elif e in c:
                    del c[e]
        self.coeffs = c

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({int(exp): coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            elif e in out:
                del out[e]
        r = LaurentPoly()
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly()
        r.coeffs = {e: -v for e, v in self.coeffs.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                elif e in out:
                    del out[e]
        r = LaurentPoly()
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials of q alone")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError on a nonzero remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        # shift to ordinary polynomials and long-divide with Fraction coefficients
        smin, omin = self.min_exp(), other.min_exp()
        num = {e - smin: Fraction(v) for e, v in self.coeffs.items()}
        den = {e - omin: Fraction(v) for e, v in other.coeffs.items()}
        dmax = max(den)
        dlead = den[dmax]
        quot: dict[int, Fraction] = {}
        while num:
            nmax = max(num)
            if nmax < dmax:
                raise ValueError("inexact Laurent division")
            c = num[nmax] / dlead
            qe = nmax - dmax
            quot[qe] = quot.get(qe, 0) + c
            for e, v in den.items():
                e2 = e + qe
                w = num.get(e2, Fraction(0)) - c * v
                if w:
                    num[e2] = w
                elif e2 in num:
                    del num[e2]
        out = {}
        for e, v in quot.items():
            if v.denominator != 1:
                raise ValueError("inexact Laurent division (non-integer quotient)")
            if v:
                out[e + smin - omin] = int(v)
        r = LaurentPoly()
        r.coeffs = out
        return r

    def mirror(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        r = LaurentPoly()
        r.coeffs = {-e: v for e, v in self.coeffs.items()}
        return r

    def is_palindromic(self) -> bool:
        return self.coeffs == {-e: v for e, v in self.coeffs.items()}

    def evaluate(self, q, allow_outside: bool = False):
        return eval_laurent(self, q, allow_outside=allow_outside)

    def to_terms(self) -> list[list[int]]:
        return [[e, self.coeffs[e]] for e in sorted(self.coeffs)]

    @classmethod
    def from_terms(cls, terms) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in terms})

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                bits.append(f"{c}")
            else:
                bits.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
        return "LaurentPoly(" + " + ".join(bits) + ")"


def eval_laurent(p: LaurentPoly, q, allow_outside: bool = False):
    """Evaluate at rational q (exact) or float q (within roundoff).

    q is restricted to (0, 1) unless allow_outside is set.
    """
    if not allow_outside and not (0 < q < 1):
        raise ValueError(f"q={q} outside (0,1); pass allow_outside=True to override")
    if isinstance(q, Fraction) or isinstance(q, int):
        q = Fraction(q)
        return sum((Fraction(v) * q ** e for e, v in p.coeffs.items()), Fraction(0))
    return float(sum(v * q ** e for e, v in p.coeffs.items()))


def pairing_int(x: Fraction) -> int:
    """Assert a pairing value is an exact integer and return it."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"pairing {x} is not an integer")
    return int(x)


def q_integer(n: int) -> LaurentPoly:
    """[n]_q = (q^-n - q^n)/(q^-1 - q); antisymmetric in n."""
    if n == 0:
        return LaurentPoly()
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentPoly({e: sign for e in range(-(n - 1), n, 2)})


def q_pochhammer(a_exp: int, t_exp: int, m: int) -> LaurentPoly:
    """(q^a; q^t)_m = prod_{j<m} (1 - q^{a + j t}); the empty product is 1."""
    if m < 0:
        raise ValueError("q-Pochhammer length must be non-negative")
    if t_exp <= 0:
        raise ValueError("t exponent must be positive")
    out = LaurentPoly.const(1)
    for j in range(m):
        out = out * (LaurentPoly.const(1) - LaurentPoly.monomial(a_exp + j * t_exp))
    return out


def _require_dominant(lam: Weight):
    if any(c < 0 for c in lam.coords):
        raise ValueError(f"weight {lam} is not dominant")


def quantum_dim_product(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """dim_q L(lam) = prod_{alpha>0} [(lam+rho,alpha)]_q / [(rho,alpha)]_q."""
    _require_dominant(lam)
    rho = weyl_vector(rs)
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for alpha in rs.positive_roots:
        num = num * q_integer(pairing_int(inner_product(rs, lam + rho, alpha)))
        den = den * q_integer(pairing_int(inner_product(rs, rho, alpha)))
    return num.exact_div(den)


def quantum_dim_weight_sum(rs: RootSystem, lam: Weight, table) -> LaurentPoly:
    """dim_q L(lam) as sum_mu mult(mu) q^{2(mu,rho)} over the weight table."""
    if table.highest != lam:
        raise ValueError("weight table does not belong to this highest weight")
    rho = weyl_vector(rs)
    out = LaurentPoly()
    for mu, mult in table.entries.items():
        out = out + LaurentPoly.monomial(pairing_int(2 * inner_product(rs, mu, rho)), mult)
    return out


def f_matrix_exponents(rs: RootSystem, lam: Weight, table) -> dict[int, int]:
    """Multiset {2(mu,rho): mult} of diagonal character exponents of L(lam)."""
    if table.highest != lam:
        raise ValueError("weight table does not belong to this highest weight")
    rho = weyl_vector(rs)
    out: dict[int, int] = {}
    for mu, mult in table.entries.items():
        e = pairing_int(2 * inner_product(rs, mu, rho))
        out[e] = out.get(e, 0) + mult
    return out


@dataclass(frozen=True)
class ExponentPair:
    """Modular exponent 2(mu+nu,rho) and scaling exponent 2(mu-nu,rho)."""

    modular: int
    scaling: int


def one_param_exponents(rs: RootSystem, mu: Weight, nu: Weight) -> ExponentPair:
    rho = weyl_vector(rs)
    return ExponentPair(
        modular=pairing_int(2 * inner_product(rs, mu + nu, rho)),
        scaling=pairing_int(2 * inner_product(rs, mu - nu, rho)),
    )


def torus_character(t, mu: Weight) -> complex:
    """<t, mu> = t_1^{mu(h_1)} ... t_n^{mu(h_n)} for unit-modulus t_i."""
    if len(t) != len(mu.coords):
        raise ValueError("torus point and weight have different ranks")
    out = complex(1)
    for ti, m in zip(t, mu.coords):
        if abs(abs(complex(ti)) - 1.0) > 1e-12:
            raise ValueError(f"torus coordinate {ti} is not of unit modulus")
        out *= complex(ti) ** m
    return out


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monicized gcd in Q[q], returned as a primitive integer polynomial
    with positive leading coefficient and minimal exponent zero."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)

    def to_frac(p: LaurentPoly) -> dict[int, Fraction]:
        m = p.min_exp()
        return {e - m: Fraction(v) for e, v in p.coeffs.items()}

    fa, fb = to_frac(a), to_frac(b)
    while fb:
        fa = _poly_mod(fa, fb)
        fa, fb = fb, fa
    return _primitive_frac(fa)


def _poly_mod(num: dict[int, Fraction], den: dict[int, Fraction]) -> dict[int, Fraction]:
    num = dict(num)
    dmax = max(den)
    dlead = den[dmax]
    while num and max(num) >= dmax:
        nmax = max(num)
        c = num[nmax] / dlead
        for e, v in den.items():
            e2 = e + nmax - dmax
            w = num.get(e2, Fraction(0)) - c * v
            if w:
                num[e2] = w
            elif e2 in num:
                del num[e2]
    return num


def _primitive_frac(f: dict[int, Fraction]) -> LaurentPoly:
    if not f:
        return LaurentPoly()
    from math import gcd, lcm

    den = lcm(*(v.denominator for v in f.values()))
    ints = {e: int(v * den) for e, v in f.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if ints[max(ints)] < 0:
        g = -g
    m = min(ints)
    out = LaurentPoly()
    out.coeffs = {e - m: v // g for e, v in ints.items()}
    return out


def _primitive(p: LaurentPoly) -> LaurentPoly:
    return _primitive_frac({e - p.min_exp(): Fraction(v) for e, v in p.coeffs.items()})
