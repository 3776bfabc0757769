"""Finite-type Cartan data and Weyl-group combinatorics.

Everything here is exact: Cartan matrices and symmetrizers are integers,
all pairings are :class:`fractions.Fraction`, and weights live in the
fundamental-weight basis (so ``weight.coords[i] == weight(h_{i+1})``).
Simple roots are the columns of the Cartan matrix in that basis.

Numbering of the simple roots follows Bourbaki throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "LieType",
    "Weight",
    "WeylWord",
    "RootSystem",
    "build_root_system",
    "inner_product",
    "simple_root",
    "simple_reflection",
    "weyl_apply",
    "longest_element",
    "weyl_vector",
    "classify_weight",
    "root_coords",
    "is_reduced",
    "weyl_orbit",
    "enumerate_weyl_group",
]

# Admissible ranks per series.
_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

WeylWord = tuple[int, ...]


@dataclass(frozen=True)
class LieType:
    """A simple Lie type, e.g. ``LieType("A", 2)``."""

    series: str
    rank: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.series)
        if rule is None:
            raise ValueError(f"unknown series {self.series!r}; expected one of A,B,C,D,E,F,G")
        if not rule(self.rank):
            raise ValueError(f"rank {self.rank} is not admissible for series {self.series}")

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _cartan_matrix(lt: LieType) -> list[list[int]]:
    n = lt.rank
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    s = lt.series
    if s == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif s == "B":
        # alpha_n is the short root
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)
    elif s == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)
    elif s == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif s == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            bond(i, j)
        if n >= 7:
            bond(5, 6)
        if n == 8:
            bond(6, 7)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif s == "G":
        bond(0, 1, -3, -1)
    return a


def _symmetrizers(cartan: list[list[int]]) -> tuple[int, ...]:
    """Positive integers d with d_i a_ij = d_j a_ji, normalized to min d_i = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    # The Dynkin diagram of a finite type is a connected tree.
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if d[i] is None:
                continue
            for j in range(n):
                if cartan[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not irreducible")
    lo = min(d)  # type: ignore[type-var]
    d = [x / lo for x in d]  # type: ignore[operator]
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise ValueError("Cartan matrix is not symmetrizable")
    out = []
    for x in d:
        if x.denominator != 1:
            raise ValueError("symmetrizers are not integral")
        out.append(int(x))
    return tuple(out)


def _invert_rational(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                g = aug[r][col]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    """Cartan datum with the normalized invariant form and cached w0 data."""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    inv_cartan: tuple[tuple[Fraction, ...], ...]
    w0_word: WeylWord
    positive_roots: tuple[Weight, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __str__(self):
        return f"RootSystem({self.lie_type})"


def simple_root(rs_or_cartan, i: int) -> Weight:
    """alpha_i (1-based) in fundamental-weight coordinates: i-th Cartan column."""
    cartan = rs_or_cartan.cartan if isinstance(rs_or_cartan, RootSystem) else rs_or_cartan
    n = len(cartan)
    if not 1 <= i <= n:
        raise ValueError(f"root index {i} out of range 1..{n}")
    return Weight(tuple(cartan[r][i - 1] for r in range(n)))


def _reflect(cartan, i: int, lam: Weight) -> Weight:
    # s_i(lam) = lam - lam(h_i) alpha_i
    return lam - lam.coords[i - 1] * simple_root(cartan, i)


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"reflection index {i} out of range 1..{rs.rank}")
    return _reflect(rs.cartan, i, lam)


def weyl_apply(rs: RootSystem, word: WeylWord, lam: Weight) -> Weight:
    """Apply s_{i_1} s_{i_2} ... s_{i_m} to lam (rightmost letter acts first)."""
    for i in reversed(word):
        lam = simple_reflection(rs, i, lam)
    return lam


def _longest_word(cartan) -> WeylWord:
    """Greedy anti-dominance descent on rho; terminates in l(w0) steps."""
    n = len(cartan)
    lam = Weight((1,) * n)
    recorded = []
    while any(c > 0 for c in lam.coords):
        i = next(k + 1 for k, c in enumerate(lam.coords) if c > 0)
        lam = _reflect(cartan, i, lam)
        recorded.append(i)
    assert lam.coords == (-1,) * n
    return tuple(reversed(recorded))


def _positive_roots_from_word(cartan, word: WeylWord) -> tuple[Weight, ...]:
    """beta_l = s_{i_k} ... s_{i_{l+1}} alpha_{i_l} for l = 1..k."""
    roots = []
    for l in range(len(word)):
        beta = simple_root(cartan, word[l])
        for i in word[l + 1:]:
            beta = _reflect(cartan, i, beta)
        roots.append(beta)
    return tuple(roots)


@lru_cache(maxsize=None)
def build_root_system(lt: LieType) -> RootSystem:
    """Construct the full Cartan datum for a simple Lie type.

    The Gram matrix of the fundamental weights is diag(d) * inverse(Cartan),
    which realizes (omega_i, alpha_j) = d_j delta_ij exactly.
    """
    cartan = _cartan_matrix(lt)
    d = _symmetrizers(cartan)
    inv = _invert_rational([[Fraction(x) for x in row] for row in cartan])
    n = lt.rank
    gram = tuple(tuple(d[i] * inv[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise AssertionError("Gram matrix is not symmetric")
    word = _longest_word(cartan)
    pos = _positive_roots_from_word(cartan, word)
    return RootSystem(
        lie_type=lt,
        cartan=tuple(tuple(row) for row in cartan),
        d=d,
        gram=gram,
        inv_cartan=tuple(tuple(row) for row in inv),
        w0_word=word,
        positive_roots=pos,
    )


def inner_product(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """Normalized W-invariant form, (omega_i, omega_j) = gram[i][j]."""
    total = Fraction(0)
    for i, a in enumerate(lam.coords):
        if a == 0:
            continue
        row = rs.gram[i]
        for j, b in enumerate(mu.coords):
            if b:
                total += a * b * row[j]
    return total


def longest_element(rs: RootSystem) -> WeylWord:
    return rs.w0_word


def weyl_vector(rs: RootSystem) -> Weight:
    return Weight((1,) * rs.rank)


def classify_weight(rs: RootSystem, lam: Weight) -> dict:
    return {
        "dominant": all(c >= 0 for c in lam.coords),
        "regular": all(c > 0 for c in lam.coords),
    }


def root_coords(rs: RootSystem, lam: Weight) -> tuple[Fraction, ...]:
    """Coordinates of lam in the simple-root basis (rational in general)."""
    return tuple(
        sum(rs.inv_cartan[i][j] * lam.coords[j] for j in range(rs.rank))
        for i in range(rs.rank)
    )


def is_reduced(rs: RootSystem, word: WeylWord) -> bool:
    """A word is reduced iff every suffix-transported simple root stays positive."""
    seen = set()
    for beta in _positive_roots_from_word(rs.cartan, word):
        cs = root_coords(rs, beta)
        if any(c < 0 for c in cs) or beta in seen:
            return False
        seen.add(beta)
    return True


def weyl_orbit(rs: RootSystem, lam: Weight) -> set[Weight]:
    """The full W-orbit of lam, by closure under simple reflections."""
    orbit = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(1, rs.rank + 1):
                nu = simple_reflection(rs, i, mu)
                if nu not in orbit:
                    orbit.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return orbit


@lru_cache(maxsize=None)
def enumerate_weyl_group(rs: RootSystem) -> tuple[tuple[WeylWord, int], ...]:
    """All Weyl group elements as (reduced word, length) pairs.

    Elements are identified by their action on rho (regular, so the
    stabilizer is trivial); BFS distance in the Cayley graph is the length.
    Intended for small-rank oracles only.
    """
    rho = weyl_vector(rs)
    seen = {rho: ((), 0)}
    frontier = [rho]
    while frontier:
        nxt = []
        for mu in frontier:
            word, length = seen[mu]
            for i in range(1, rs.rank + 1):
                nu = simple_reflection(rs, i, mu)
                if nu not in seen:
                    # nu = (s_i w)(rho) and s_i acts last, i.e. leftmost
                    seen[nu] = ((i,) + word, length + 1)
                    nxt.append(nu)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda t: (t[1], t[0])))
