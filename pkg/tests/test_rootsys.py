"""Root-system and Weyl-group combinatorics."""
from fractions import Fraction

import pytest

from qflag.rootsys import (
    LieType,
    Weight,
    build_root_system,
    classify_weight,
    enumerate_weyl_group,
    inner_product,
    is_reduced,
    longest_element,
    root_coords,
    simple_reflection,
    simple_root,
    weyl_apply,
    weyl_orbit,
    weyl_vector,
)

ALL_SMALL = [
    LieType("A", 1), LieType("A", 2), LieType("A", 3), LieType("A", 4),
    LieType("B", 2), LieType("B", 3), LieType("B", 4),
    LieType("C", 2), LieType("C", 3), LieType("C", 4),
    LieType("D", 3), LieType("D", 4),
    LieType("F", 4), LieType("G", 2),
]

NUM_POSITIVE = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
    ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
    ("C", 2): 4, ("C", 3): 9, ("C", 4): 16,
    ("D", 3): 6, ("D", 4): 12,
    ("F", 4): 24, ("G", 2): 6,
}

WEYL_ORDER = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8,
    ("B", 3): 48, ("C", 2): 8, ("D", 4): 192, ("G", 2): 12,
}


def test_rank_validation():
    with pytest.raises(ValueError):
        LieType("B", 1)
    with pytest.raises(ValueError):
        LieType("D", 2)
    with pytest.raises(ValueError):
        LieType("F", 3)
    with pytest.raises(ValueError):
        LieType("G", 3)
    with pytest.raises(ValueError):
        LieType("E", 5)
    with pytest.raises(ValueError):
        LieType("H", 2)


def test_cartan_b2():
    rs = build_root_system(LieType("B", 2))
    assert rs.cartan == ((2, -1), (-2, 2))
    assert rs.d == (2, 1)


def test_cartan_g2():
    rs = build_root_system(LieType("G", 2))
    assert rs.cartan == ((2, -3), (-1, 2))
    assert rs.d == (1, 3)


def test_cartan_f4():
    rs = build_root_system(LieType("F", 4))
    assert rs.cartan == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
    assert rs.d == (2, 2, 1, 1)


def test_short_root_normalization():
    for lt in ALL_SMALL:
        rs = build_root_system(lt)
        norms = [inner_product(rs, simple_root(rs, i), simple_root(rs, i))
                 for i in range(1, lt.rank + 1)]
        assert min(norms) == 2
        assert norms == [2 * d for d in rs.d]


def test_gram_pairing_with_fundamental_weights():
    # (omega_i, alpha_j) = d_j delta_ij
    for lt in ALL_SMALL:
        rs = build_root_system(lt)
        for i in range(1, lt.rank + 1):
            omega = Weight(tuple(1 if k == i - 1 else 0 for k in range(lt.rank)))
            for j in range(1, lt.rank + 1):
                expect = Fraction(rs.d[j - 1]) if i == j else Fraction(0)
                assert inner_product(rs, omega, simple_root(rs, j)) == expect


def test_positive_root_counts():
    for lt in ALL_SMALL:
        rs = build_root_system(lt)
        n = NUM_POSITIVE[(lt.series, lt.rank)]
        assert len(rs.positive_roots) == n
        assert len(rs.w0_word) == n
        assert len(set(rs.positive_roots)) == n


def test_w0_word_is_reduced_and_negates_dominant_chamber():
    for lt in ALL_SMALL:
        rs = build_root_system(lt)
        assert is_reduced(rs, rs.w0_word)
        rho = weyl_vector(rs)
        image = weyl_apply(rs, rs.w0_word, rho)
        assert all(c < 0 for c in image.coords)
        assert longest_element(rs) == rs.w0_word


def test_simple_reflection_involution_and_example():
    rs = build_root_system(LieType("A", 2))
    rho = weyl_vector(rs)
    assert simple_reflection(rs, 1, rho) == Weight((-1, 2))
    for lt in ALL_SMALL[:6]:
        rs = build_root_system(lt)
        lam = weyl_vector(rs)
        for i in range(1, lt.rank + 1):
            assert simple_reflection(rs, i, simple_reflection(rs, i, lam)) == lam


def test_weyl_apply_rightmost_letter_first():
    rs = build_root_system(LieType("A", 2))
    lam = Weight((1, 0))
    # word (1, 2) means s_1 s_2, so s_2 acts first
    assert weyl_apply(rs, (1, 2), lam) == simple_reflection(
        rs, 1, simple_reflection(rs, 2, lam)
    )


def test_weyl_group_orders():
    for (series, rank), order in WEYL_ORDER.items():
        rs = build_root_system(LieType(series, rank))
        elems = enumerate_weyl_group(rs)
        assert len(elems) == order
        lengths = [l for _, l in elems]
        assert max(lengths) == len(rs.w0_word)
        assert lengths.count(max(lengths)) == 1


def test_orbit_of_rho_is_regular():
    for lt in [LieType("A", 2), LieType("B", 2), LieType("G", 2)]:
        rs = build_root_system(lt)
        orbit = weyl_orbit(rs, weyl_vector(rs))
        assert len(orbit) == len(enumerate_weyl_group(rs))


def test_classify_weight():
    rs = build_root_system(LieType("B", 2))
    info = classify_weight(rs, Weight((1, 1)))
    assert info["dominant"] and info["regular"]
    info = classify_weight(rs, Weight((1, 0)))
    assert info["dominant"] and not info["regular"]
    info = classify_weight(rs, Weight((-1, 2)))
    assert not info["dominant"]


def test_root_coords_inverse_of_cartan():
    for lt in ALL_SMALL:
        rs = build_root_system(lt)
        for i in range(1, lt.rank + 1):
            coords = root_coords(rs, simple_root(rs, i))
            assert coords == tuple(
                Fraction(1) if j == i - 1 else Fraction(0) for j in range(lt.rank)
            )


def test_inner_products_on_rho_g2():
    rs = build_root_system(LieType("G", 2))
    rho = weyl_vector(rs)
    pairings = sorted(inner_product(rs, alpha, rho) for alpha in rs.positive_roots)
    assert pairings == [1, 3, 4, 5, 6, 9]


def test_inner_products_on_rho_b2():
    rs = build_root_system(LieType("B", 2))
    rho = weyl_vector(rs)
    pairings = sorted(inner_product(rs, alpha, rho) for alpha in rs.positive_roots)
    assert pairings == [1, 2, 3, 4]


def test_is_reduced_rejects_repeats():
    rs = build_root_system(LieType("A", 2))
    assert is_reduced(rs, (1, 2, 1))
    assert not is_reduced(rs, (1, 1))
    assert not is_reduced(rs, (2, 1, 2, 1))
