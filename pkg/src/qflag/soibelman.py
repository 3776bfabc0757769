"""Truncated operator models on l^2(Z_+) tensor powers.

The four C(SU_q(2)) generators are realized as N x N float matrices; the
diagonal elements indexed by dominant weights are kept as exact integer
exponent vectors (the operator sends a grid point (k_1..k_m) to
q^{sum_l e_l k_l}), so spectra and norm gaps are integer-lattice
computations rather than float linear algebra.

The exponent vector is stored in powers of q itself: the l-th entry is
(lam, beta_l) with beta_l the l-th positive root read off the reduced
word, which absorbs the q_i = q^{d_i} of the shorter/longer roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcalc import pairing_int
from .rootsys import (
    RootSystem,
    Weight,
    WeylWord,
    inner_product,
    is_reduced,
    simple_root,
    weyl_apply,
)

__all__ = [
    "Su2Operator",
    "DiagonalModel",
    "su2_generators",
    "transported_roots",
    "diagonal_model",
    "power_norm_gap",
    "spectrum",
    "commutation_check",
    "float_tolerance",
]

DEFAULT_TRUNC = 32


def float_tolerance(q: float, n: int) -> float:
    """Assertion tolerance for truncated models: max(1e-12, 10 q^{2N})."""
    return max(1e-12, 10.0 * q ** (2 * n))


@dataclass(frozen=True)
class Su2Operator:
    matrix: np.ndarray
    trunc: int
    label: str

    def adjoint(self) -> "Su2Operator":
        label = self.label[:-1] if self.label.endswith("*") else self.label + "*"
        return Su2Operator(self.matrix.conj().T.copy(), self.trunc, label)


def su2_generators(q: float, n: int = DEFAULT_TRUNC) -> dict[str, Su2Operator]:
    """The generators x (lower shift), u, v (diagonal), y (upper shift).

    x e_k = sqrt(1-q^{2k+2}) e_{k+1}, u e_k = q^k e_k,
    v e_k = -q^{k+1} e_k,           y e_k = sqrt(1-q^{2k}) e_{k-1}.
    The image escaping the truncation range is dropped.
    """
    q = float(q)
    if not 0 < q < 1:
        raise ValueError(f"q={q} outside (0,1)")
    if n < 2:
        raise ValueError("truncation must be at least 2")
    k = np.arange(n)
    x = np.zeros((n, n))
    x[1:, :-1] = np.diag(np.sqrt(1.0 - q ** (2 * k[:-1] + 2)))
    u = np.diag(q ** k)
    v = np.diag(-(q ** (k + 1)))
    y = np.zeros((n, n))
    y[:-1, 1:] = np.diag(np.sqrt(1.0 - q ** (2 * k[1:])))
    return {
        "x": Su2Operator(x, n, "x"),
        "u": Su2Operator(u, n, "u"),
        "v": Su2Operator(v, n, "v"),
        "y": Su2Operator(y, n, "y"),
    }


def transported_roots(rs: RootSystem, word: WeylWord) -> tuple[Weight, ...]:
    """beta_l = s_{i_k} ... s_{i_{l+1}} alpha_{i_l} for the given word."""
    out = []
    for l in range(len(word)):
        beta = simple_root(rs, word[l])
        beta = weyl_apply(rs, tuple(reversed(word[l + 1:])), beta)
        out.append(beta)
    return tuple(out)


@dataclass(frozen=True)
class DiagonalModel:
    """pi_w(|a_lam|) on (C^N)^{tensor k}: diag over the grid of q^{sum e_l k_l}."""

    exponents: tuple[int, ...]
    trunc: int
    q: float

    @property
    def factors(self) -> int:
        return len(self.exponents)


def diagonal_model(
    rs: RootSystem,
    lam: Weight,
    word: WeylWord | None = None,
    q: float = 0.5,
    n: int = DEFAULT_TRUNC,
) -> DiagonalModel:
    if any(c < 0 for c in lam.coords):
        raise ValueError(f"weight {lam} is not dominant")
    if word is None:
        word = rs.w0_word
    if not is_reduced(rs, word):
        raise ValueError("Weyl word is not reduced")
    if not 0 < q < 1:
        raise ValueError(f"q={q} outside (0,1)")
    exps = tuple(
        pairing_int(inner_product(rs, lam, beta)) for beta in transported_roots(rs, word)
    )
    return DiagonalModel(exponents=exps, trunc=n, q=float(q))


def _reachable_sums(model: DiagonalModel, cap: int) -> list[int]:
    """Sorted achievable values of sum e_l k_l with 0 <= k_l < N, up to cap."""
    reach = {0}
    for e in model.exponents:
        if e == 0:
            continue
        new = set()
        for s in reach:
            for k in range(model.trunc):
                t = s + e * k
                if t > cap:
                    break
                new.add(t)
        reach = new
    return sorted(reach)


def power_norm_gap(model: DiagonalModel, m: int, n: int | None) -> float:
    """sup over the truncated grid of |q^{ms} - q^{ns}|; n=None means the
    projection limit p_0 (the n -> infinity case)."""
    if n is not None and m > n:
        raise ValueError("need m <= n")
    if any(e < 1 for e in model.exponents):
        raise ValueError("norm gap bound requires a regular weight (all exponents >= 1)")
    if m == n:
        return 0.0
    q = model.q
    # past this cap both powers are below float resolution
    cap = max(8, int(math.ceil(40.0 / (max(m, 1) * -math.log10(q)))))
    best = 0.0
    for s in _reachable_sums(model, cap):
        lo = 0.0 if s > 0 else 1.0
        if n is not None:
            lo = q ** (n * s)
        best = max(best, abs(q ** (m * s) - lo))
    return best


def spectrum(model: DiagonalModel, value_cutoff: float) -> list[tuple[float, int]]:
    """Eigenvalues q^s with multiplicities (grid counts), for q^s >= cutoff."""
    if value_cutoff <= 0:
        raise ValueError("cutoff must be positive")
    q = model.q
    s_max = int(math.floor(math.log(value_cutoff) / math.log(q) + 1e-9))
    counts = {0: 1}
    for e in model.exponents:
        new: dict[int, int] = {}
        for s, c in counts.items():
            if e == 0:
                new[s] = new.get(s, 0) + c * model.trunc
                continue
            for k in range(model.trunc):
                t = s + e * k
                if t > s_max:
                    break
                new[t] = new.get(t, 0) + c
        counts = new
    return [(q ** s, counts[s]) for s in sorted(counts)]


def commutation_check(q: float, n: int = DEFAULT_TRUNC) -> dict:
    """Verify u x = q x u and the diagonal-element commutation
    C |a| = q^{(Lam,-mu+w0 nu)} |a| C for C in {x,u,v,y}, Lam = omega_1.

    Only interior basis vectors (index < N-1) are compared; the exponents
    are computed from the generator weights, not hard-coded.
    """
    if n < 4:
        raise ValueError("need truncation at least 4")
    from .rootsys import LieType, build_root_system, weyl_vector

    rs = build_root_system(LieType("A", 1))
    omega = weyl_vector(rs)  # = omega_1
    gens = su2_generators(q, n)
    a_mod = gens["u"].matrix  # |a_{omega_1}| = u, which is already positive diagonal

    # (mu, nu) weight pairs of the fundamental corepresentation entries
    weights = {
        "x": (omega, omega),
        "u": (omega, -omega),
        "v": (-omega, omega),
        "y": (-omega, -omega),
    }
    report: dict = {"exponents": {}, "violations": {}}
    interior = slice(0, n - 1)
    for name, (mu, nu) in weights.items():
        w0nu = weyl_apply(rs, rs.w0_word, nu)
        exp = inner_product(rs, omega, -mu + w0nu)
        if exp.denominator != 1:
            raise AssertionError("commutation exponent must be an integer here")
        exp = int(exp)
        c = gens[name].matrix
        lhs = c @ a_mod
        rhs = (q ** exp) * (a_mod @ c)
        viol = float(np.max(np.abs((lhs - rhs)[:, interior])))
        report["exponents"][name] = exp
        report["violations"][f"{name}|a|"] = viol

    ux = gens["u"].matrix @ gens["x"].matrix
    xu = gens["x"].matrix @ gens["u"].matrix
    report["violations"]["ux=q.xu"] = float(np.max(np.abs((ux - q * xu)[:, interior])))
    report["max_violation"] = max(report["violations"].values())
    return report
