"""The Prym-canonical Clifford index and its companion invariants.

For a nontrivial 2-torsion class eta and a line bundle presented as a
divisor d with h0(d) >= 1 and h0(d twisted by eta) >= 1, the index of the
bundle is

    deg(d) - h0(d) - h0(d twisted by eta) + 1.

The curve-level invariant is the minimum over contributing bundles of
degree <= g-1.  On a split hyperelliptic curve the minimum is k-1, where 2k
is the size of eta's canonical subset of ramification points, witnessed by
the sum of the first k points of the subset; `closed_form_report` returns
that value after re-certifying the witness against the h0 oracle, while
`search_report` minimises over an explicit finite pool of effective
divisors.  A search over a pool containing all 2g+2 ramification points
with max_degree = g-1 is exact; any smaller pool yields an upper bound and
the report says so via its mode and pool fields.

Also here: the lexicographic Clifford-dimension pair, the invariant index
of the associated unramified double cover (2*min(index, gonality-1), with
gonality 2 in this hyperelliptic scope), secant-variety membership tests,
and the base-point / point-separation / trisecant probes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .curves import CurvePoint, Divisor, HyperellipticCurve
from .jacobian import EtaDivisorPair, TwoTorsionClass, eta_canonical_k
from .riemann_roch import h0

GONALITY = 2  # every curve in this package is hyperelliptic


class NonContributingError(ValueError):
    """The bundle fails h0 >= 1 on one side of the twist."""


@dataclass(frozen=True)
class GeometryProbes:
    """Raw geometric probes of the twisted canonical system."""

    base_points: tuple[CurvePoint, ...]
    unseparated_pairs: tuple[tuple[CurvePoint, CurvePoint], ...]
    trisecant_witnesses: tuple[Divisor, ...]


@dataclass(frozen=True)
class PrymReport:
    """Structured result of a curve-level index computation."""

    genus: int
    eta: TwoTorsionClass
    k: int
    cliff_eta: int | None
    cliff_dim: tuple[int, int] | None
    witness: Divisor | None
    witnesses: tuple[Divisor, ...]
    mode: str
    pool_description: str
    iota_cliff: int | None
    probes: GeometryProbes | None = None


def twist(curve: HyperellipticCurve, eta: TwoTorsionClass, d: Divisor) -> Divisor:
    """A representative divisor of the eta-twist of the class of d."""
    return eta.twist(d)


def contributes(curve: HyperellipticCurve, eta: TwoTorsionClass, d: Divisor) -> bool:
    """deg <= g-1 with sections on both sides of the twist."""
    if d.degree > curve.genus - 1:
        return False
    if h0(curve, d) < 1:
        return False
    return h0(curve, eta.twist(d)) >= 1


def clifford_of_divisor(
    curve: HyperellipticCurve, eta: TwoTorsionClass, d: Divisor
) -> int:
    """deg(d) - h0(d) - h0(twist) + 1; requires sections on both sides."""
    sections = h0(curve, d)
    twisted_sections = h0(curve, eta.twist(d))
    if sections < 1 or twisted_sections < 1:
        raise NonContributingError(
            f"divisor {d} does not contribute: h0 = {sections}, twisted h0 = {twisted_sections}"
        )
    return d.degree - sections - twisted_sections + 1


def _iota_value(cliff: int | None) -> int | None:
    if cliff is None:
        return None
    return 2 * min(cliff, GONALITY - 1)


def _bounds_check(genus: int, value: int, exact: bool) -> None:
    if value < 0:
        raise ArithmeticError(f"negative index {value}: engine bug")
    if exact and value > (genus - 1) // 2:
        raise ArithmeticError(
            f"index {value} above the ceiling {(genus - 1) // 2}: engine bug"
        )


def closed_form_report(
    curve: HyperellipticCurve,
    eta: TwoTorsionClass,
    include_probes: bool = False,
) -> PrymReport:
    """Curve-level index k-1 with dimension pair (0, 0), witness the sum of
    the first k points of eta's canonical subset, re-certified against the
    h0 oracle before returning."""
    if eta.is_trivial:
        raise ValueError("the index needs a nontrivial 2-torsion class")
    k, pair = eta_canonical_k(eta)
    witness = pair.positive
    value = clifford_of_divisor(curve, eta, witness)
    if value != k - 1:
        raise ArithmeticError(
            f"witness certifies {value}, closed form says {k - 1}: engine bug"
        )
    _bounds_check(curve.genus, value, exact=True)
    return PrymReport(
        genus=curve.genus,
        eta=eta,
        k=k,
        cliff_eta=value,
        cliff_dim=(0, 0),
        witness=witness,
        witnesses=(witness,),
        mode="closed_form",
        pool_description="weierstrass",
        iota_cliff=_iota_value(value),
        probes=geometry_probes(curve, eta) if include_probes else None,
    )


def _normalised_pool(
    curve: HyperellipticCurve, pool: tuple[CurvePoint, ...] | list[CurvePoint] | None
) -> tuple[tuple[CurvePoint, ...], str, bool]:
    if pool is None:
        return curve.weierstrass_points, "weierstrass", True
    points = sorted(set(pool), key=CurvePoint.sort_key)
    if not points:
        raise ValueError("search pool must be nonempty")
    for p in points:
        if not curve.contains(p):
            raise ValueError(f"pool point {p} is not on the curve")
    covers = set(curve.weierstrass_points) <= set(points)
    return tuple(points), f"custom({len(points)} points)", covers


def search_report(
    curve: HyperellipticCurve,
    eta: TwoTorsionClass,
    pool: list[CurvePoint] | tuple[CurvePoint, ...] | None = None,
    max_degree: int | None = None,
    include_probes: bool = False,
) -> PrymReport:
    """Minimise the index over effective divisors supported on the pool.

    Candidates run over 1 <= deg <= max_degree; ties are broken by the
    lexicographic (h0 - 1, twisted h0 - 1) pair, then degree, then
    enumeration (lexicographic divisor) order.  Exact when the pool contains
    every ramification point and max_degree = g-1; an upper bound otherwise.
    A pool with no contributing bundle is reported with cliff_eta = None,
    not an exception.
    """
    if eta.is_trivial:
        raise ValueError("the index needs a nontrivial 2-torsion class")
    g = curve.genus
    if max_degree is None:
        max_degree = g - 1
    if not 1 <= max_degree <= g - 1:
        raise ValueError(f"max_degree must be in 1..{g - 1}")
    points, pool_description, covers = _normalised_pool(curve, pool)
    exact = covers and max_degree == g - 1

    best_key: tuple | None = None
    witnesses: list[Divisor] = []
    for degree in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(points, degree):
            d = Divisor.of_points(combo)
            sections = h0(curve, d)
            if sections < 1:
                continue
            twisted = h0(curve, eta.twist(d))
            if twisted < 1:
                continue
            value = degree - sections - twisted + 1
            key = (value, (sections - 1, twisted - 1))
            if best_key is None or key < best_key:
                best_key = key
                witnesses = [d]
            elif key == best_key:
                witnesses.append(d)

    if best_key is None:
        return PrymReport(
            genus=g,
            eta=eta,
            k=eta.k,
            cliff_eta=None,
            cliff_dim=None,
            witness=None,
            witnesses=(),
            mode="search",
            pool_description=pool_description,
            iota_cliff=None,
            probes=geometry_probes(curve, eta) if include_probes else None,
        )

    value, pair = best_key
    _bounds_check(g, value, exact)
    witness = witnesses[0]  # minimal degree, then lexicographic order
    if clifford_of_divisor(curve, eta, witness) != value:
        raise ArithmeticError("witness re-certification failed: engine bug")
    return PrymReport(
        genus=g,
        eta=eta,
        k=eta.k,
        cliff_eta=value,
        cliff_dim=pair,
        witness=witness,
        witnesses=tuple(witnesses),
        mode="search",
        pool_description=pool_description,
        iota_cliff=_iota_value(value),
        probes=geometry_probes(curve, eta) if include_probes else None,
    )


def clifford_dimension(
    curve: HyperellipticCurve,
    eta: TwoTorsionClass,
    pool: list[CurvePoint] | None = None,
    max_degree: int | None = None,
) -> tuple[int, int] | None:
    """Lexicographic minimum of (h0 - 1, twisted h0 - 1) over the divisors
    achieving the minimal index on the pool."""
    return search_report(curve, eta, pool, max_degree).cliff_dim


def iota_invariant_index(
    curve: HyperellipticCurve,
    eta: TwoTorsionClass,
    pool: list[CurvePoint] | None = None,
    max_degree: int | None = None,
) -> int | None:
    """Minimal Clifford index over involution-invariant bundles on the
    unramified double cover attached to eta: 2 * min(index, gonality - 1).
    The cover itself is never constructed.  Uses the closed form when no
    pool is given, the pool search otherwise."""
    if eta.is_trivial:
        raise ValueError("the invariant needs a nontrivial 2-torsion class")
    if pool is None:
        value = closed_form_report(curve, eta).cliff_eta
    else:
        value = search_report(curve, eta, pool, max_degree).cliff_eta
    return _iota_value(value)


def secant_membership(
    curve: HyperellipticCurve, eta: TwoTorsionClass, d: Divisor, e: int, f: int
) -> bool:
    """Does the effective degree-e divisor d lie on the secant variety of
    the twisted canonical system that drops f conditions?

    Tested as twisted h0(d) >= f and cross-checked against the equivalent
    condition h0(canonical + eta - d) >= g - 1 - e + f.
    """
    if not (1 <= f < e):
        raise ValueError("need 1 <= f < e")
    if not d.is_effective or d.degree != e:
        raise ValueError("d must be effective of degree e")
    g = curve.genus
    direct = h0(curve, eta.twist(d)) >= f
    residual = h0(curve, eta.twist(curve.canonical_divisor() - d)) >= g - 1 - e + f
    if direct != residual:
        raise ArithmeticError("secant membership cross-check failed: engine bug")
    return direct


def min_secant_degree(
    curve: HyperellipticCurve,
    eta: TwoTorsionClass,
    pool: list[CurvePoint] | None = None,
) -> int | None:
    """Smallest e such that some effective degree-e pool divisor drops one
    condition on the twisted canonical system (twisted h0 >= 1); None if no
    such divisor exists up to degree g-1.  On a full ramification pool this
    equals index + 1 = k."""
    if eta.is_trivial:
        raise ValueError("the probe needs a nontrivial 2-torsion class")
    points, _, _ = _normalised_pool(curve, pool)
    for e in range(1, curve.genus):
        for combo in itertools.combinations_with_replacement(points, e):
            d = Divisor.of_points(combo)
            if h0(curve, eta.twist(d)) >= 1:
                return e
    return None


def geometry_probes(curve: HyperellipticCurve, eta: TwoTorsionClass) -> GeometryProbes:
    """Base points, unseparated pairs and trisecant witnesses of the twisted
    canonical system, probed over the ramification points.

    base points: w with twisted h0(w) >= 1 (exactly eta's two subset points
    when k = 1, empty otherwise); unseparated pairs: (p, q) with twisted
    h0(p + q) >= 1 (nonempty iff k <= 2); trisecant witnesses: degree-3
    divisors D with h0(canonical + eta - D) = g - 3 (nonempty at k = 3).
    """
    if eta.is_trivial:
        raise ValueError("the probes need a nontrivial 2-torsion class")
    g = curve.genus
    pool = curve.weierstrass_points
    canonical = curve.canonical_divisor()

    base_points = tuple(
        w for w in pool if h0(curve, eta.twist(Divisor.of_point(w))) >= 1
    )
    unseparated = tuple(
        (p, q)
        for p, q in itertools.combinations_with_replacement(pool, 2)
        if h0(curve, eta.twist(Divisor.of_points((p, q)))) >= 1
    )
    trisecants = []
    for combo in itertools.combinations_with_replacement(pool, 3):
        d = Divisor.of_points(combo)
        if h0(curve, eta.twist(canonical - d)) == g - 3:
            trisecants.append(d)
    return GeometryProbes(base_points, unseparated, tuple(trisecants))
