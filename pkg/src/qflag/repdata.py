"""Weight multiplicities of finite-dimensional irreducibles.

Multiplicities are computed by Freudenthal's recursion over the dominant
weights below the highest weight and extended to full Weyl orbits by
W-invariance.  Everything is exact rational arithmetic; a non-integral
multiplicity raises instead of being rounded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .qcalc import LaurentPoly, pairing_int
from .rootsys import (
    RootSystem,
    Weight,
    enumerate_weyl_group,
    inner_product,
    weyl_apply,
    weyl_orbit,
    weyl_vector,
)

__all__ = ["WeightTable", "weight_table", "classical_dim", "qdim_via_character"]


@dataclass
class WeightTable:
    """Weight multiplicity table of an irreducible highest-weight module."""

    highest: Weight
    entries: dict[Weight, int] = field(default_factory=dict)

    def dimension(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, mu: Weight) -> int:
        return self.entries.get(mu, 0)


def _require_dominant(lam: Weight):
    if any(c < 0 for c in lam.coords):
        raise ValueError(f"weight {lam} is not dominant")


def _dominant_conjugate(rs: RootSystem, mu: Weight) -> Weight:
    coords = list(mu.coords)
    while True:
        for i, c in enumerate(coords):
            if c < 0:
                # apply s_{i+1}
                for r in range(rs.rank):
                    coords[r] -= c * rs.cartan[r][i]
                break
        else:
            return Weight(tuple(coords))


def weight_table(rs: RootSystem, lam: Weight) -> WeightTable:
    """Freudenthal recursion; entries hold every weight with its multiplicity."""
    _require_dominant(lam)
    rho = weyl_vector(rs)
    w0lam = weyl_apply(rs, rs.w0_word, lam)
    # lam - w0lam lies in the root lattice; its root coordinates bound the search box
    span = lam - w0lam
    box = [pairing_int(c) for c in _root_coords(rs, span)]
    alphas = [_alpha(rs, i) for i in range(1, rs.rank + 1)]

    dominants = []
    for cs in product(*(range(b + 1) for b in box)):
        mu = lam
        for c, alpha in zip(cs, alphas):
            if c:
                mu = mu - c * alpha
        if all(x >= 0 for x in mu.coords):
            dominants.append((sum(cs), mu))
    dominants.sort(key=lambda t: t[0])

    lam_rho_norm = inner_product(rs, lam + rho, lam + rho)
    mult: dict[Weight, int] = {}

    def lookup(nu: Weight) -> int:
        return mult.get(_dominant_conjugate(rs, nu), 0)

    for height, mu in dominants:
        if height == 0:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            j = 1
            while True:
                nu = mu + j * alpha
                if any(c < 0 for c in _root_coords(rs, lam - nu)):
                    break
                m = lookup(nu)
                if m:
                    acc += m * inner_product(rs, nu, alpha)
                j += 1
        denom = lam_rho_norm - inner_product(rs, mu + rho, mu + rho)
        value = 2 * acc / denom
        if value.denominator != 1:
            raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
        if value:
            mult[mu] = int(value)

    entries: dict[Weight, int] = {}
    for mu, m in mult.items():
        for nu in weyl_orbit(rs, mu):
            entries[nu] = m
    return WeightTable(highest=lam, entries=entries)


def _alpha(rs: RootSystem, i: int) -> Weight:
    return Weight(tuple(rs.cartan[r][i - 1] for r in range(rs.rank)))


def _root_coords(rs: RootSystem, mu: Weight):
    return [
        sum(rs.inv_cartan[i][j] * mu.coords[j] for j in range(rs.rank))
        for i in range(rs.rank)
    ]


def classical_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula, prod_{alpha>0} (lam+rho,alpha)/(rho,alpha)."""
    _require_dominant(lam)
    rho = weyl_vector(rs)
    out = Fraction(1)
    for alpha in rs.positive_roots:
        out *= inner_product(rs, lam + rho, alpha) / inner_product(rs, rho, alpha)
    if out.denominator != 1:
        raise ArithmeticError("Weyl dimension formula gave a non-integer")
    return int(out)


def qdim_via_character(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """Quantum dimension through the Weyl character formula.

    Specializes the formal exponential of mu to q^{2(mu,rho)}: the
    alternating sum over the Weyl group divided by prod(1 - q^{-2(alpha,rho)}).
    Exact Laurent division; intended for small-rank cross-checks.
    """
    _require_dominant(lam)
    rho = weyl_vector(rs)
    num = LaurentPoly()
    for word, length in enumerate_weyl_group(rs):
        shifted = weyl_apply(rs, word, lam + rho) - rho
        e = pairing_int(2 * inner_product(rs, shifted, rho))
        num = num + LaurentPoly.monomial(e, -1 if length % 2 else 1)
    den = LaurentPoly.const(1)
    for alpha in rs.positive_roots:
        e = pairing_int(2 * inner_product(rs, alpha, rho))
        den = den * (LaurentPoly.const(1) - LaurentPoly.monomial(-e))
    return num.exact_div(den)
