"""Exact classification invariant for SU_q(2) product-type actions.

Inputs are positive rationals raised to rational powers, so every
logarithm lives in the Q-vector space spanned by logs of primes and the
closed-subgroup computations reduce to exact lattice arithmetic: rank 0
kernels are trivial, rank 1 are cyclic, rank >= 2 are dense lines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "ExactLog",
    "ActionBlock",
    "ActionSpec",
    "CanonicalSubgroup",
    "ClassificationResult",
    "exact_log",
    "invariant_group",
    "canonicalize",
    "subgroup_equal",
    "classify_action",
    "action_spec_from_json",
    "classification_to_json",
]


@dataclass(frozen=True)
class ExactLog:
    """sum_p r_p log p with rational r_p; exact carrier of log(a^e)."""

    prime_exponents: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_map(cls, m: dict[int, Fraction]) -> "ExactLog":
        return cls(tuple(sorted((p, Fraction(r)) for p, r in m.items() if r != 0)))

    def as_map(self) -> dict[int, Fraction]:
        return dict(self.prime_exponents)

    def is_zero(self) -> bool:
        return not self.prime_exponents

    def __add__(self, other: "ExactLog") -> "ExactLog":
        m = self.as_map()
        for p, r in other.prime_exponents:
            m[p] = m.get(p, Fraction(0)) + r
        return ExactLog.from_map(m)

    def __sub__(self, other: "ExactLog") -> "ExactLog":
        return self + (-other)

    def __neg__(self) -> "ExactLog":
        return ExactLog(tuple((p, -r) for p, r in self.prime_exponents))

    def scale(self, c: Fraction) -> "ExactLog":
        c = Fraction(c)
        if c == 0:
            return ExactLog()
        return ExactLog(tuple((p, r * c) for p, r in self.prime_exponents))

    def sign(self) -> int:
        """Sign of the real value, decided exactly via integer products."""
        if not self.prime_exponents:
            return 0
        scale = math.lcm(*(r.denominator for _, r in self.prime_exponents))
        above, below = 1, 1
        for p, r in self.prime_exponents:
            e = int(r * scale)
            if e > 0:
                above *= p ** e
            else:
                below *= p ** (-e)
        return (above > below) - (above < below)

    def value(self) -> float:
        return float(sum(float(r) * math.log(p) for p, r in self.prime_exponents))

    def __str__(self):
        if not self.prime_exponents:
            return "0"
        return " + ".join(f"{r}*log({p})" for p, r in self.prime_exponents)


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def exact_log(base, exponent=1) -> ExactLog:
    """exponent * log(base) for a positive rational base."""
    base = Fraction(base)
    exponent = Fraction(exponent)
    if base <= 0:
        raise ValueError(f"base {base} must be positive")
    m: dict[int, Fraction] = {}
    for p, k in _factor(base.numerator).items():
        m[p] = m.get(p, Fraction(0)) + k * exponent
    for p, k in _factor(base.denominator).items():
        m[p] = m.get(p, Fraction(0)) - k * exponent
    return ExactLog.from_map(m)


@dataclass(frozen=True)
class ActionBlock:
    """One irreducible block: a half-integer spin and its density weight c
    (kept as an exact logarithm)."""

    spin: Fraction
    log_c: ExactLog

    def __post_init__(self):
        spin = Fraction(self.spin)
        if spin < 0 or (2 * spin).denominator != 1:
            raise ValueError(f"spin {spin} must be a non-negative half-integer")
        object.__setattr__(self, "spin", spin)

    @property
    def integer_spin(self) -> bool:
        return self.spin.denominator == 1


@dataclass(frozen=True)
class ActionSpec:
    """Product-type action datum: deformation parameter and blocks."""

    q: Fraction
    blocks: tuple[ActionBlock, ...]

    def __post_init__(self):
        q = Fraction(self.q)
        if not 0 < q < 1:
            raise ValueError(f"q={q} outside (0,1)")
        object.__setattr__(self, "q", q)
        if not any(b.integer_spin for b in self.blocks):
            raise ValueError("faithfulness requires at least one integer-spin block")
        if not any(not b.integer_spin for b in self.blocks):
            raise ValueError("faithfulness requires at least one half-odd-integer-spin block")
        if not any(b.integer_spin and b.log_c.is_zero() for b in self.blocks):
            raise ValueError("normalization requires an integer-spin block with weight 1")


def invariant_group(spec: ActionSpec) -> list[tuple[ExactLog, int]]:
    """Generators of the closed subgroup of R^2 attached to the action:
    (log c, 0) for integer spins, (2 log c, 0) and (log(c q), 1) for
    half-odd-integer spins."""
    log_q = exact_log(spec.q)
    gens: list[tuple[ExactLog, int]] = []
    for b in spec.blocks:
        if b.integer_spin:
            gens.append((b.log_c, 0))
        else:
            gens.append((b.log_c.scale(2), 0))
            gens.append((b.log_c + log_q, 1))
    return gens


@dataclass(frozen=True)
class CanonicalSubgroup:
    """Canonical form of a closed subgroup of R x Z with exact-log slopes."""

    step: int
    kernel_kind: str  # "trivial" | "cyclic" | "dense_line"
    kernel_generator: ExactLog | None = None
    coset: ExactLog | None = None


def _frac_gcd(values: list[Fraction]) -> Fraction:
    g = Fraction(0)
    for v in values:
        v = abs(v)
        if g == 0:
            g = v
        elif v != 0:
            g = Fraction(
                math.gcd(g.numerator * v.denominator, v.numerator * g.denominator),
                g.denominator * v.denominator,
            )
    return g


def _rank(vectors: list[ExactLog]) -> int:
    primes = sorted({p for v in vectors for p, _ in v.prime_exponents})
    rows = [[v.as_map().get(p, Fraction(0)) for p in primes] for v in vectors]
    rank = 0
    col = 0
    while col < len(primes) and rank < len(rows):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / lead
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _leading_prime(v: ExactLog) -> int:
    return v.prime_exponents[0][0]


def _reduce_mod_cyclic(x: ExactLog, gen: ExactLog) -> ExactLog:
    """Canonical representative of x + Z gen: the coefficient at the
    generator's leading prime is brought into [0, 1) generator units."""
    p = _leading_prime(gen)
    t = x.as_map().get(p, Fraction(0)) / gen.as_map()[p]
    n = math.floor(t)
    return x - gen.scale(Fraction(n))


def _in_cyclic(x: ExactLog, gen: ExactLog) -> bool:
    if x.is_zero():
        return True
    p = _leading_prime(gen)
    t = x.as_map().get(p, Fraction(0)) / gen.as_map()[p]
    return t.denominator == 1 and x == gen.scale(t)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def canonicalize(generators: list[tuple[ExactLog, int]]) -> CanonicalSubgroup:
    """Closure of the generated subgroup of R x Z in canonical form."""
    gens = [(x, int(l)) for x, l in generators]
    step = 0
    for _, l in gens:
        step = math.gcd(step, abs(l))

    # an element (rep, step) via the extended Euclid over second coordinates
    rep: ExactLog | None = None
    if step > 0:
        g = 0
        combo = ExactLog()
        for x, l in gens:
            if l == 0:
                continue
            g2, a, b = _ext_gcd(g, l)
            combo = combo.scale(Fraction(a)) + x.scale(Fraction(b))
            g = g2
        assert g == step
        rep = combo

    kernel_vecs = []
    for x, l in gens:
        if step:
            shifted = x - rep.scale(Fraction(l // step))  # type: ignore[union-attr]
        else:
            shifted = x
        if not shifted.is_zero():
            kernel_vecs.append(shifted)

    rank = _rank(kernel_vecs)
    if rank == 0:
        kind, gen = "trivial", None
    elif rank >= 2:
        kind, gen = "dense_line", None
    else:
        v0 = next(v for v in kernel_vecs if not v.is_zero())
        p = _leading_prime(v0)
        ratios = []
        for v in kernel_vecs:
            t = v.as_map().get(p, Fraction(0)) / v0.as_map()[p]
            if v != v0.scale(t):
                raise AssertionError("rank-1 kernel rows must be proportional")
            ratios.append(t)
        gen = v0.scale(_frac_gcd(ratios))
        if gen.sign() < 0:
            gen = -gen
        kind = "cyclic"

    coset: ExactLog | None = None
    if step > 0:
        if kind == "dense_line":
            coset = ExactLog()
        elif kind == "cyclic":
            coset = _reduce_mod_cyclic(rep, gen)  # type: ignore[arg-type]
        else:
            coset = rep
    return CanonicalSubgroup(step=step, kernel_kind=kind, kernel_generator=gen, coset=coset)


def subgroup_equal(a: CanonicalSubgroup, b: CanonicalSubgroup) -> bool:
    if a.step != b.step or a.kernel_kind != b.kernel_kind:
        return False
    if a.kernel_kind == "cyclic" and a.kernel_generator != b.kernel_generator:
        return False
    if (a.coset is None) != (b.coset is None):
        return False
    if a.coset is None:
        return True
    diff = a.coset - b.coset
    if a.kernel_kind == "trivial":
        return diff.is_zero()
    if a.kernel_kind == "dense_line":
        return True
    return _in_cyclic(diff, a.kernel_generator)  # type: ignore[arg-type]


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str
    invariant: CanonicalSubgroup
    detail: dict = field(default_factory=dict)


def classify_action(spec: ActionSpec) -> ClassificationResult:
    """Decision table of the product-action classification on the invariant."""
    canon = canonicalize(invariant_group(spec))
    log_q = exact_log(spec.q)

    if canon.kernel_kind == "dense_line":
        return ClassificationResult("TypeIII1_Unique", canon)

    if canon.step == 1 and canon.kernel_kind == "trivial":
        if canon.coset == log_q:
            return ClassificationResult("TypeII1_PowersFlow", canon)
        return ClassificationResult("OutsidePaperClassification", canon)

    if canon.step == 1 and canon.kernel_kind == "cyclic":
        gen = canon.kernel_generator
        assert gen is not None and canon.coset is not None
        # report lambda in (0,1): the negative generator of the kernel
        log_lambda = -gen
        if _in_cyclic(canon.coset - log_q, gen):
            return ClassificationResult(
                "TypeIIIlambda", canon, {"log_lambda": log_lambda, "module": "q"}
            )
        if _in_cyclic(canon.coset - log_lambda.scale(Fraction(1, 2)) - log_q, gen):
            return ClassificationResult(
                "TypeIIIlambda", canon, {"log_lambda": log_lambda, "module": "sqrt_lambda_q"}
            )
        return ClassificationResult("OutsidePaperClassification", canon)

    return ClassificationResult("OutsidePaperClassification", canon)


# ---------------------------------------------------------------------------
# JSON interface


def action_spec_from_json(data: dict) -> ActionSpec:
    """Parse {"q": "1/2", "blocks": [{"spin": "1/2", "c": {"base": "1", "exp": "1"}}]}."""
    q = Fraction(str(data["q"]))
    blocks = []
    for b in data["blocks"]:
        c = b.get("c", {"base": "1", "exp": "1"})
        blocks.append(
            ActionBlock(
                spin=Fraction(str(b["spin"])),
                log_c=exact_log(Fraction(str(c.get("base", "1"))), Fraction(str(c.get("exp", "1")))),
            )
        )
    return ActionSpec(q=q, blocks=tuple(blocks))


def _log_to_json(v: ExactLog | None):
    if v is None:
        return None
    return {str(p): str(r) for p, r in v.prime_exponents}


def classification_to_json(result: ClassificationResult) -> dict:
    inv = result.invariant
    out = {
        "verdict": result.verdict,
        "invariant": {
            "step": inv.step,
            "kernel": inv.kernel_kind,
            "kernel_generator": _log_to_json(inv.kernel_generator),
            "coset": _log_to_json(inv.coset),
        },
    }
    if result.detail:
        out["detail"] = {
            "module": result.detail.get("module"),
            "log_lambda": _log_to_json(result.detail.get("log_lambda")),
        }
    return out
