"""Curve construction, points, and divisors."""

import random
from fractions import Fraction

import pytest

from prymlab import (
    INFINITY,
    Divisor,
    HyperellipticCurve,
    curve_with_marked_point,
    new_curve,
    standard_curve,
)


def test_new_curve_genus_2():
    c = new_curve([1, 2, 3, 4, 5])
    assert c.genus == 2
    assert len(c.weierstrass_points) == 6
    assert c.weierstrass_points[-1] is INFINITY


def test_new_curve_genus_3():
    assert new_curve(range(1, 8)).genus == 3


def test_duplicate_roots_rejected():
    with pytest.raises(ValueError, match="squarefree"):
        new_curve([1, 1, 2, 3, 4])


def test_even_root_count_rejected():
    with pytest.raises(ValueError, match="odd"):
        new_curve([1, 2, 3, 4, 5, 6])


def test_small_root_count_rejected():
    with pytest.raises(ValueError, match="genus"):
        new_curve([1, 2, 3])


def test_canonical_divisor():
    assert standard_curve(2).canonical_divisor() == Divisor.of_point(INFINITY, 2)
    assert standard_curve(3).canonical_divisor() == Divisor.of_point(INFINITY, 4)


def test_affine_points_validated():
    c = standard_curve(2)
    w1 = c.point(1, 0)
    assert w1.is_weierstrass
    with pytest.raises(ValueError, match="y\\^2"):
        c.point(1, 1)
    marked_curve, marked = curve_with_marked_point(2)
    assert marked_curve.contains(marked)
    assert not marked.is_weierstrass
    assert marked_curve.contains(marked.conjugate())


def test_weierstrass_set_shape():
    for g in (2, 3, 4):
        c = standard_curve(g)
        pts = c.weierstrass_points
        assert len(pts) == 2 * g + 2
        assert all(p.y == 0 for p in pts[:-1])
        assert pts[-1].is_infinity
        assert c.weierstrass_point("w1") == pts[0]
        assert c.weierstrass_point(2 * g + 2) is INFINITY
        assert c.label_of(pts[0]) == "w1"


def test_divisor_combination_examples():
    c = standard_curve(2)
    w = c.weierstrass_points
    d1 = Divisor.of_points(w[:2])  # w1 + w2
    d2 = Divisor.of_point(w[1])
    assert d1 - d2 == Divisor.of_point(w[0])
    assert (d1 - d1).is_zero
    assert (d1 - d1).degree == 0
    pencil = c.pencil_divisor()
    mixed = pencil + (Divisor.of_point(w[0]) - Divisor.of_point(INFINITY))
    assert mixed == Divisor(((w[0], 1), (INFINITY, 1)))


def test_divisor_degree_additivity():
    c = standard_curve(3)
    rng = random.Random(17)
    pts = list(c.weierstrass_points)
    for _ in range(100):
        a = Divisor((rng.choice(pts), rng.randint(-3, 3)) for _ in range(3))
        b = Divisor((rng.choice(pts), rng.randint(-3, 3)) for _ in range(3))
        assert (a + b).degree == a.degree + b.degree
        assert (a - b).degree == a.degree - b.degree


def test_divisor_normalisation_and_hash():
    c = standard_curve(2)
    w = c.weierstrass_points
    a = Divisor(((w[0], 1), (w[1], 2)))
    b = Divisor(((w[1], 2), (w[0], 2), (w[0], -1)))
    assert a == b and hash(a) == hash(b)
    assert Divisor(((w[0], 0),)).is_zero
    assert a.is_effective
    assert not (a - 3 * Divisor.of_point(w[2])).is_effective


def test_curve_identity_and_label_errors():
    assert standard_curve(2) == new_curve([5, 4, 3, 2, 1])
    c = standard_curve(2)
    with pytest.raises(ValueError):
        c.weierstrass_point("w9")
    with pytest.raises(ValueError):
        c.weierstrass_point("x1")


def test_fractional_roots_accepted():
    c = new_curve(["1/2", 1, 2, 3, 4])
    assert c.roots[0] == Fraction(1, 2)
    assert c.genus == 2
