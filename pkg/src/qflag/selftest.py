"""Built-in invariant suite behind the `qflag selftest` subcommand.

A condensed version of the package's acceptance checks, runnable without
pytest. Each group prints one pass/fail line; `run` returns the number of
failed groups.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import classify as cls
from . import haar, qcalc, repdata, rootsys, soibelman

SWEEP_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2)]


def _sweep(rs):
    for coords in product(range(3), repeat=rs.rank):
        yield rootsys.Weight(coords)


def _check_qdim_routes() -> bool:
    for series, rank in SWEEP_TYPES:
        rs = rootsys.build_root_system(rootsys.LieType(series, rank))
        for lam in _sweep(rs):
            table = repdata.weight_table(rs, lam)
            p = qcalc.quantum_dim_product(rs, lam)
            s = qcalc.quantum_dim_weight_sum(rs, lam, table)
            c = repdata.qdim_via_character(rs, lam)
            if not (p == s == c and p.is_palindromic()):
                return False
            if p.evaluate(Fraction(1), allow_outside=True) != repdata.classical_dim(rs, lam):
                return False
    return True


def _check_haar() -> bool:
    for n in (2, 3, 4):
        rs = rootsys.build_root_system(rootsys.LieType("A", n - 1))
        expect = qcalc.LaurentPoly.const(1)
        for j in range(1, n):
            expect = expect * qcalc.q_pochhammer(2, 2, j)
        if haar.haar_p0(rs) != expect:
            return False
    for series, rank in SWEEP_TYPES:
        rs = rootsys.build_root_system(rootsys.LieType(series, rank))
        for lam in _sweep(rs):
            if not haar.haar_a_lambda_sq(rs, lam)["equal"]:
                return False
    return True


def _check_soibelman() -> bool:
    q = 0.5
    for series, rank in SWEEP_TYPES:
        rs = rootsys.build_root_system(rootsys.LieType(series, rank))
        lam = rootsys.Weight((1,) * rank)
        model = soibelman.diagonal_model(rs, lam, q=q, n=16)
        for m in range(1, 5):
            for n in range(m, 5):
                if soibelman.power_norm_gap(model, m, n) > q ** m + 1e-15:
                    return False
        spec = soibelman.spectrum(model, q ** 8)
        if spec[0] != (1.0, 1):
            return False
    report = soibelman.commutation_check(0.5, 32)
    return report["max_violation"] < 1e-12


def _check_ortho() -> bool:
    for q in (1.0 / 3.0, 0.5, 0.8):
        if haar.su2_orthogonality_suite(q, 64)["max_deviation"] > 1e-10:
            return False
    return True


def _check_classify() -> bool:
    spec = cls.ActionSpec(
        q=Fraction(1, 2),
        blocks=(
            cls.ActionBlock(Fraction(0), cls.exact_log(1)),
            cls.ActionBlock(Fraction(1, 2), cls.exact_log(1)),
        ),
    )
    if cls.classify_action(spec).verdict != "TypeII1_PowersFlow":
        return False
    lam, mu = Fraction(1, 4), Fraction(1, 2)
    a = cls.canonicalize([(cls.exact_log(lam), 0), (cls.exact_log(mu), 1)])
    b = cls.canonicalize([(cls.exact_log(lam), 0), (cls.exact_log(lam * mu), 1)])
    return cls.subgroup_equal(a, b)


def _check_rootsys() -> bool:
    for series, max_rank in [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4), ("G", 2)]:
        lo = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}[series]
        for rank in range(lo, max_rank + 1):
            rs = rootsys.build_root_system(rootsys.LieType(series, rank))
            if len(rs.positive_roots) != len(rs.w0_word):
                return False
            orbit = set()
            for i in range(1, rank + 1):
                for w in rootsys.weyl_orbit(rs, rootsys.simple_root(rs, i)):
                    if all(c >= 0 for c in rootsys.root_coords(rs, w)):
                        orbit.add(w)
            if orbit != set(rs.positive_roots):
                return False
    return True


GROUPS = [
    ("root systems: |Delta_+| = l(w0), orbit vs word", _check_rootsys),
    ("quantum dimension: three routes agree, palindromic", _check_qdim_routes),
    ("Haar: atom product formula, cross-identity", _check_haar),
    ("operator models: norm gaps, spectra, commutation", _check_soibelman),
    ("SU_q(2) orthogonality relations", _check_ortho),
    ("action classification invariant", _check_classify),
]


def run(verbose: bool = False) -> int:
    failures = 0
    for name, check in GROUPS:
        ok = check()
        if verbose:
            print(f"[{'PASS' if ok else 'FAIL'}] {name}")
        failures += 0 if ok else 1
    return failures
