"""Shared helpers and independent oracles for the test suite."""

from __future__ import annotations

import random

from prymlab import Divisor, HyperellipticCurve


def weierstrass_h0_oracle(curve: HyperellipticCurve, divisor: Divisor) -> int:
    """Independent dimension count for divisors supported on ramification
    points and infinity; used to cross-check the linear-algebra engine.

    Derivation (no kernel computation involved): 2w ~ 2*oo for every
    ramification point w, so even parts of the coefficients move onto the
    infinity coefficient and D ~ sum_{w in T} w + m*oo, where T is the set
    of affine ramification points with odd coefficient and m = deg D - |T|.
    Any function with poles bounded by that divisor is (a + b*y) / prod_T (x - r_w)
    with 2 deg a <= 2|T| + m and 2 deg b + 2g+1 <= 2|T| + m, and the only
    conditions are a(r_w) = 0 for w in T (|T| independent conditions on a,
    none on b).  Counting monomials:

        dim = max(0, floor(m/2) + 1) + max(0, |T| + floor((m-2g-1)/2) + 1).
    """
    g = curve.genus
    odd_affine = [p for p, n in divisor if not p.is_infinity and n % 2 != 0]
    s = len(odd_affine)
    m = divisor.degree - s
    a_part = max(0, m // 2 + 1)
    b_part = max(0, s + (m - 2 * g - 1) // 2 + 1)
    return a_part + b_part


def random_weierstrass_divisor(rng: random.Random, curve: HyperellipticCurve,
                               max_support: int = 5) -> Divisor:
    points = list(curve.weierstrass_points)
    support = rng.sample(points, k=rng.randint(1, min(max_support, len(points))))
    terms = []
    for p in support:
        n = 0
        while n == 0:
            n = rng.randint(-2, 3)
        terms.append((p, n))
    return Divisor(terms)
