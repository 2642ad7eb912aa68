"""Divisor-class arithmetic and the 2-torsion subgroup.

Degree-zero classes are handled in Mumford form (u, v) with u monic of
degree <= g, deg v < deg u and u | v^2 - f, composed and reduced with
Cantor's algorithm.  This is an accelerator and cross-check only: the h0
oracle in `riemann_roch` remains the source of truth, and any disagreement
between the two is a bug, never a runtime fallback.

The 2-torsion subgroup is combinatorial: an even subset S of the 2g+2
ramification points determines the class of

    sum_{w in S, w affine} w  -  #(S cap affine) * oo,

S and its complement determine the same class, and symmetric difference
realises the group law.  The canonical form stored here keeps #S <= g+1,
taking the lexicographically smaller of the two complementary subsets when
both have size g+1; the canonical subset size 2k recovers the invariant k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .curves import INFINITY, CurvePoint, Divisor, HyperellipticCurve
from .polynomials import ONE, Poly, poly_xgcd
from .riemann_roch import h0


@dataclass(frozen=True)
class MumfordClass:
    """Reduced Mumford pair (u, v): the class of the u-roots paired with
    v-values, minus deg(u) times the point at infinity."""

    u: Poly
    v: Poly

    @property
    def is_identity(self) -> bool:
        return self.u.degree == 0

    def __str__(self) -> str:
        return f"[u = {self.u}, v = {self.v}]"


def cantor_identity() -> MumfordClass:
    return MumfordClass(ONE, Poly())


def validate_mumford(curve: HyperellipticCurve, m: MumfordClass) -> None:
    if not m.u.is_monic:
        raise ValueError("u must be monic")
    if m.u.degree > curve.genus:
        raise ValueError("u degree exceeds the genus: class not reduced")
    if not m.v.is_zero and m.v.degree >= m.u.degree:
        raise ValueError("deg v must be < deg u")
    if not ((m.v * m.v - curve.f) % m.u).is_zero:
        raise ValueError("u does not divide v^2 - f")


def cantor_negate(curve: HyperellipticCurve, m: MumfordClass) -> MumfordClass:
    return MumfordClass(m.u, (-m.v) % m.u if m.u.degree > 0 else Poly())


def _cantor_reduce(curve: HyperellipticCurve, u: Poly, v: Poly) -> MumfordClass:
    g = curve.genus
    while u.degree > g:
        u = (curve.f - v * v).exact_div(u)
        u = u.monic()
        v = (-v) % u if u.degree > 0 else Poly()
    return MumfordClass(u.monic(), v)


def cantor_add(curve: HyperellipticCurve, m1: MumfordClass, m2: MumfordClass) -> MumfordClass:
    """Composition followed by reduction; the group law on Pic^0."""
    u1, v1 = m1.u, m1.v
    u2, v2 = m2.u, m2.v
    d1, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d1, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + curve.f)
    v = num.exact_div(d)
    u = u.monic()
    v = v % u if u.degree > 0 else Poly()
    return _cantor_reduce(curve, u, v)


def mumford_of_point(curve: HyperellipticCurve, point: CurvePoint) -> MumfordClass:
    """The class of (point - oo)."""
    if point.is_infinity:
        return cantor_identity()
    if not curve.contains(point):
        raise ValueError(f"point {point} is not on the curve")
    return MumfordClass(Poly((-point.x, 1)), Poly((point.y,)))


def mumford_of_divisor(curve: HyperellipticCurve, divisor: Divisor) -> MumfordClass:
    """The class of (D - deg(D) * oo), composed point by point."""
    acc = cantor_identity()
    for point, mult in divisor:
        if point.is_infinity:
            continue
        base = mumford_of_point(curve, point)
        if mult < 0:
            base = cantor_negate(curve, base)
            mult = -mult
        for _ in range(mult):
            acc = cantor_add(curve, acc, base)
    return acc


# ---------------------------------------------------------------------------
# 2-torsion


@dataclass(frozen=True)
class EtaDivisorPair:
    """A 2-torsion class written as (positive part) - (negative part): two
    disjoint effective sums of k distinct ramification points each."""

    positive: Divisor
    negative: Divisor


@dataclass(frozen=True)
class TwoTorsionClass:
    """A 2-torsion class in canonical subset form.

    `subset` is the canonical even subset of label indices 1..2g+2
    (cardinality <= g+1; lexicographic tiebreak at exactly g+1).  The empty
    subset is the trivial class.
    """

    curve: HyperellipticCurve
    subset: frozenset[int]

    @property
    def is_trivial(self) -> bool:
        return not self.subset

    @property
    def k(self) -> int:
        if self.is_trivial:
            raise ValueError("the trivial class has no invariant k")
        return len(self.subset) // 2

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"w{i}" for i in sorted(self.subset))

    def divisor_pair(self) -> EtaDivisorPair:
        """Split the canonical subset into first-k and last-k points; any
        split gives the same class since doubled ramification points move
        into the pencil."""
        if self.is_trivial:
            raise ValueError("the trivial class has no divisor pair")
        indices = sorted(self.subset)
        k = len(indices) // 2
        pos = Divisor.of_points(self.curve.weierstrass_point(i) for i in indices[:k])
        neg = Divisor.of_points(self.curve.weierstrass_point(i) for i in indices[k:])
        return EtaDivisorPair(pos, neg)

    def beta_divisor(self) -> Divisor:
        """The degree-0 writing sum_{affine w in S} w - #(affine) * oo."""
        n_aff = 0
        terms = []
        for i in sorted(self.subset):
            p = self.curve.weierstrass_point(i)
            if not p.is_infinity:
                terms.append((p, 1))
                n_aff += 1
        terms.append((INFINITY, -n_aff))
        return Divisor(terms)

    def twist(self, divisor: Divisor) -> Divisor:
        """divisor + positive - negative: a representative of the eta-twist."""
        if self.is_trivial:
            return divisor
        pair = self.divisor_pair()
        return divisor + pair.positive - pair.negative

    def mumford(self) -> MumfordClass:
        """Reduced Mumford form: u the product of (x - r) over the affine
        part of the subset (complemented once inside f if that part has
        g+1 points), v = 0."""
        roots = [
            self.curve.weierstrass_point(i).x
            for i in sorted(self.subset)
            if i <= 2 * self.curve.genus + 1
        ]
        u = Poly.from_roots(roots)
        if u.degree > self.curve.genus:
            u = self.curve.f.exact_div(u).monic()
        return MumfordClass(u, Poly())

    def combine(self, other: "TwoTorsionClass") -> "TwoTorsionClass":
        """Group law: canonical form of the symmetric difference."""
        if self.curve != other.curve:
            raise ValueError("classes live on different curves")
        return two_torsion_from_subset(self.curve, self.subset ^ other.subset)

    def __str__(self) -> str:
        return "trivial" if self.is_trivial else "{" + ",".join(self.labels) + "}"


def _canonical_subset(curve: HyperellipticCurve, subset: frozenset[int]) -> frozenset[int]:
    n = 2 * curve.genus + 2
    if len(subset) * 2 > n:
        return frozenset(range(1, n + 1)) - subset
    if len(subset) * 2 == n:
        complement = frozenset(range(1, n + 1)) - subset
        return min(subset, complement, key=sorted)
    return subset


def two_torsion_from_subset(
    curve: HyperellipticCurve, labels: Iterable[Union[int, str]]
) -> TwoTorsionClass:
    """The 2-torsion class of an even set of ramification-point labels."""
    subset = frozenset(curve.label_index(l) for l in labels)
    if len(subset) % 2 != 0:
        raise ValueError("2-torsion subsets must have even cardinality")
    return TwoTorsionClass(curve, _canonical_subset(curve, subset))


def two_torsion_group_op(a: TwoTorsionClass, b: TwoTorsionClass) -> TwoTorsionClass:
    return a.combine(b)


def enumerate_two_torsion(curve: HyperellipticCurve) -> list[TwoTorsionClass]:
    """All 2^{2g} - 1 nontrivial classes, each exactly once, in canonical
    form, ordered by k then lexicographically."""
    g = curve.genus
    n = 2 * g + 2
    out: list[TwoTorsionClass] = []
    for k in range(1, (g + 1) // 2 + 1):
        size = 2 * k
        for combo in itertools.combinations(range(1, n + 1), size):
            subset = frozenset(combo)
            if 2 * size == n:
                complement = frozenset(range(1, n + 1)) - subset
                if sorted(complement) < sorted(subset):
                    continue
            out.append(TwoTorsionClass(curve, subset))
    return out


def eta_canonical_k(eta: TwoTorsionClass) -> tuple[int, EtaDivisorPair]:
    """The invariant k together with the canonical divisor-pair writing."""
    if eta.is_trivial:
        raise ValueError("the trivial class has no canonical writing")
    return eta.k, eta.divisor_pair()
