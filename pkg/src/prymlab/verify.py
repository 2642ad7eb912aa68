"""Deterministic verification suites.

Every suite is a fixed, named list of checks; a check either returns a short
detail string (pass) or raises AssertionError (fail).  Randomized checks
seed their generators from the claim id, so a suite run is a pure function
of (name, genus_max).  Checks fan out over a worker pool sized by the
PRYMLAB_THREADS environment variable (default: available parallelism) and
are collected in declaration order, so parallel and serial runs emit
identical reports.

Suite names: riemann-roch, two-torsion, prym-clifford,
classification-probes, scroll, and all.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import comb
from typing import Callable, Sequence

from .curves import Divisor, HyperellipticCurve, curve_with_marked_point, standard_curve
from .jacobian import (
    TwoTorsionClass,
    cantor_add,
    cantor_identity,
    enumerate_two_torsion,
    mumford_of_divisor,
    two_torsion_from_subset,
    validate_mumford,
)
from .prym import (
    clifford_of_divisor,
    closed_form_report,
    contributes,
    geometry_probes,
    iota_invariant_index,
    min_secant_degree,
    search_report,
    secant_membership,
)
from .riemann_roch import h0, is_linearly_equivalent, riemann_roch_space, valuation
from .scroll import dj_sequence, park_parameters, scroll_type

SUITE_NAMES = (
    "riemann-roch",
    "two-torsion",
    "prym-clifford",
    "classification-probes",
    "scroll",
    "all",
)


@dataclass(frozen=True)
class VerificationCheck:
    claim: str
    status: str  # "pass" | "fail"
    detail: str


@dataclass(frozen=True)
class VerificationSuite:
    name: str
    genus_max: int
    checks: tuple[VerificationCheck, ...]
    elapsed_seconds: float

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def ok(self) -> bool:
        return self.failed == 0


def worker_count() -> int:
    env = os.environ.get("PRYMLAB_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"PRYMLAB_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# sampling helpers


def sample_etas_for_k(curve: HyperellipticCurve, k: int, count: int = 3) -> list[TwoTorsionClass]:
    """Deterministic spread of `count` classes with invariant k: first,
    evenly spaced middles, and last subset in lexicographic order."""
    g = curve.genus
    n = 2 * g + 2
    combos = list(itertools.combinations(range(1, n + 1), 2 * k))
    if 4 * k == n:  # 2k = g+1: drop complement duplicates
        full = frozenset(range(1, n + 1))
        combos = [c for c in combos if sorted(full - set(c)) >= sorted(c)]
    if count >= len(combos):
        picks = range(len(combos))
    elif count == 1:
        picks = [len(combos) // 2]
    else:
        picks = sorted({round(i * (len(combos) - 1) / (count - 1)) for i in range(count)})
    return [two_torsion_from_subset(curve, combos[i]) for i in picks]


def sample_etas(curve: HyperellipticCurve, per_k: int = 3) -> list[TwoTorsionClass]:
    out: list[TwoTorsionClass] = []
    for k in range(1, (curve.genus + 1) // 2 + 1):
        out.extend(sample_etas_for_k(curve, k, per_k))
    return out


def _etas_for(curve: HyperellipticCurve, exhaustive: bool, per_k: int = 3):
    return enumerate_two_torsion(curve) if exhaustive else sample_etas(curve, per_k)


def _random_divisor(rng: random.Random, points: Sequence, max_support: int = 4) -> Divisor:
    support = rng.sample(list(points), k=rng.randint(1, min(max_support, len(points))))
    terms = []
    for p in support:
        n = 0
        while n == 0:
            n = rng.randint(-2, 3)
        terms.append((p, n))
    return Divisor(terms)


def _base_points(curve, divisor, probes) -> set:
    """Probe points p with h0(D - p) = h0(D), i.e. base points of |D|."""
    value = h0(curve, divisor)
    if value < 1:
        return set()
    return {p for p in probes if h0(curve, divisor - Divisor.of_point(p)) == value}


def _subset_writing(curve: HyperellipticCurve, subset) -> Divisor:
    """The degree-0 divisor writing of a raw (not canonicalized) even subset
    of ramification labels."""
    affine = [
        curve.weierstrass_point(i) for i in sorted(subset) if i <= 2 * curve.genus + 1
    ]
    return Divisor.of_points(affine) - Divisor.of_point(curve.infinity, len(affine))


# ---------------------------------------------------------------------------
# engine soundness checks


def check_rr_identity(genus: int, trials: int = 500) -> str:
    """h0(D) - h0(K - D) = deg D - g + 1 on randomized divisors, exactly."""
    marked_curve, marked = curve_with_marked_point(genus)
    arenas = [
        (standard_curve(genus), standard_curve(genus).weierstrass_points),
        (marked_curve, marked_curve.weierstrass_points + (marked, marked.conjugate())),
    ]
    rng = random.Random(f"rr-identity:{genus}")
    per_arena = (trials + 1) // 2
    total = 0
    for curve, points in arenas:
        canonical = curve.canonical_divisor()
        for _ in range(per_arena):
            d = _random_divisor(rng, points)
            got = h0(curve, d) - h0(curve, canonical - d)
            want = d.degree - genus + 1
            assert got == want, f"identity failed on {d}: {got} != {want}"
            total += 1
    return f"{total} randomized divisors across 2 curves"


def check_h0_basics(genus: int) -> str:
    """h0 of the canonical class is g; h0 of the pencil is 2."""
    for curve in (standard_curve(genus), curve_with_marked_point(genus)[0]):
        assert h0(curve, curve.canonical_divisor()) == genus
        assert h0(curve, curve.pencil_divisor()) == 2
    return "canonical and pencil dimensions on 2 curves"


def check_monotonicity(genus: int, trials: int = 80) -> str:
    """h0(D) <= h0(D + p) <= h0(D) + 1."""
    curve, marked = curve_with_marked_point(genus)
    points = curve.weierstrass_points + (marked, marked.conjugate())
    rng = random.Random(f"monotonicity:{genus}")
    for _ in range(trials):
        d = _random_divisor(rng, points)
        p = rng.choice(list(points))
        lo = h0(curve, d)
        hi = h0(curve, d + Divisor.of_point(p))
        assert lo <= hi <= lo + 1, f"monotonicity failed at {d} + {p}"
    return f"{trials} randomized (divisor, point) pairs"


def check_structure_theorem(genus: int, limit: int | None = None) -> str:
    """Every special effective divisor, minus its base points, is a multiple
    of the degree-2 pencil."""
    curve = standard_curve(genus)
    points = curve.weierstrass_points
    pencil = curve.pencil_divisor()
    combos = [
        c
        for degree in range(1, genus)
        for c in itertools.combinations_with_replacement(points, degree)
    ]
    if limit is not None and len(combos) > limit:
        rng = random.Random(f"structure:{genus}")
        combos = rng.sample(combos, limit)
    checked = 0
    for combo in combos:
        d = Divisor.of_points(combo)
        r = h0(curve, d) - 1
        stripped = d
        while True:
            value = h0(curve, stripped)
            base = next(
                (p for p in stripped.support if h0(curve, stripped - Divisor.of_point(p)) == value),
                None,
            )
            if base is None:
                break
            stripped = stripped - Divisor.of_point(base)
        assert stripped.degree == 2 * r, f"{d}: stripped degree {stripped.degree} != 2r = {2 * r}"
        assert is_linearly_equivalent(curve, stripped, r * pencil), f"{d} fails the pencil form"
        checked += 1
    return f"{checked} effective divisors of degree <= g-1"


def check_basis_valuations(genus: int, trials: int = 25) -> str:
    """Each basis function of L(D) satisfies div(phi) + D >= 0 at the
    support of D, its conjugates, and infinity."""
    curve, marked = curve_with_marked_point(genus)
    points = curve.weierstrass_points + (marked, marked.conjugate())
    rng = random.Random(f"basis-valuations:{genus}")
    functions = 0
    for _ in range(trials):
        d = _random_divisor(rng, points, max_support=3)
        space = riemann_roch_space(curve, d)
        probe_points = {p for p in d.support} | {p.conjugate() for p in d.support}
        for phi in space.basis:
            for p in probe_points:
                assert valuation(curve, phi, p) >= -d.coefficient(p), (
                    f"basis element {phi} of L({d}) too singular at {p}"
                )
            assert valuation(curve, phi, curve.infinity) >= -d.coefficient(curve.infinity)
            functions += 1
    return f"{functions} basis functions over {trials} spaces"


def check_cantor_oracle(genus: int, pairs: int = 120) -> str:
    """Mumford-class equality agrees with the h0 linear-equivalence oracle
    on randomized degree-0 class pairs; half the pairs are equivalent by
    construction via principal divisors."""
    curve, marked = curve_with_marked_point(genus)
    ws = curve.weierstrass_points
    affine = [w for w in ws if not w.is_infinity]
    oo = Divisor.of_point(curve.infinity)
    principal = [2 * Divisor.of_point(w) - 2 * oo for w in affine]
    principal.append(
        Divisor.of_point(marked) + Divisor.of_point(marked.conjugate()) - 2 * oo
    )
    principal.append(Divisor.of_points(affine) - (2 * genus + 1) * oo)
    points = ws + (marked, marked.conjugate())
    rng = random.Random(f"cantor-oracle:{genus}")
    agreements = 0
    for trial in range(pairs):
        d1 = _random_divisor(rng, points)
        if trial % 2 == 0:
            d2 = d1
            for _ in range(rng.randint(1, 3)):
                d2 = d2 + rng.choice(principal)
            expected_equivalent = True
        else:
            d2 = _random_divisor(rng, points)
            d2 = d2 + (d1.degree - d2.degree) * oo
            expected_equivalent = None
        m1 = mumford_of_divisor(curve, d1)
        m2 = mumford_of_divisor(curve, d2)
        validate_mumford(curve, m1)
        validate_mumford(curve, m2)
        same_class = m1 == m2
        oracle = is_linearly_equivalent(curve, d1, d2)
        assert same_class == oracle, f"Cantor vs h0 disagree on {d1} ~ {d2}"
        if expected_equivalent:
            assert oracle, f"principal-divisor pair not equivalent: {d1} ~ {d2}"
        agreements += 1
    return f"{agreements} degree-0 class pairs"


# ---------------------------------------------------------------------------
# 2-torsion checks


def check_two_torsion_count(genus: int) -> str:
    """2^{2g} - 1 nontrivial classes with the right per-k histogram."""
    curve = standard_curve(genus)
    classes = enumerate_two_torsion(curve)
    assert len(classes) == 2 ** (2 * genus) - 1, f"count {len(classes)}"
    assert len(set(classes)) == len(classes), "duplicate canonical classes"
    histogram: dict[int, int] = {}
    for c in classes:
        histogram[c.k] = histogram.get(c.k, 0) + 1
    for k in range(1, (genus + 1) // 2 + 1):
        want = comb(2 * genus + 2, 2 * k)
        if 2 * k == genus + 1:
            want //= 2
        assert histogram.get(k, 0) == want, f"k={k}: {histogram.get(k, 0)} != {want}"
    return f"{len(classes)} classes, histogram {sorted(histogram.items())}"


def check_beta_injective(genus: int, sample_per_k: int | None = None) -> str:
    """Distinct subsets of size 2k <= g give distinct classes, certified by
    the h0 oracle pairwise."""
    curve = standard_curve(genus)
    total = 0
    for k in range(1, genus // 2 + 1):
        combos = list(itertools.combinations(range(1, 2 * genus + 3), 2 * k))
        if sample_per_k is not None and len(combos) > sample_per_k:
            rng = random.Random(f"beta-injective:{genus}:{k}")
            combos = rng.sample(combos, sample_per_k)
        divisors = [
            two_torsion_from_subset(curve, c).beta_divisor() for c in combos
        ]
        for i in range(len(divisors)):
            for j in range(i + 1, len(divisors)):
                assert not is_linearly_equivalent(curve, divisors[i], divisors[j]), (
                    f"subsets {combos[i]} and {combos[j]} give equivalent classes"
                )
                total += 1
    return f"{total} pairs distinguished"


def check_beta_two_to_one(genus: int, sample: int | None = None) -> str:
    """At 2k = g+1 complementary subsets give the same class and nothing
    else collides."""
    assert genus % 2 == 1, "2:1 fibers need odd genus"
    curve = standard_curve(genus)
    n = 2 * genus + 2
    size = genus + 1
    full = frozenset(range(1, n + 1))
    combos = [frozenset(c) for c in itertools.combinations(range(1, n + 1), size)]
    if sample is not None and len(combos) > 2 * sample:
        rng = random.Random(f"beta-two-to-one:{genus}")
        picked = rng.sample(combos, sample)
        combos = picked + [full - c for c in picked]
    writings: dict[TwoTorsionClass, list[frozenset]] = {}
    for c in dict.fromkeys(combos):  # dedupe, order-preserving
        eta = two_torsion_from_subset(curve, c)
        writings.setdefault(eta, []).append(c)
    fibers = 0
    for eta, members in writings.items():
        for m in members[1:]:
            assert m == full - members[0], f"non-complementary fiber {members}"
            assert is_linearly_equivalent(
                curve, _subset_writing(curve, members[0]), _subset_writing(curve, m)
            ), f"complementary writings of {eta} not equivalent"
            fibers += 1
    others = list(writings.keys())
    checked = 0
    for i in range(min(len(others), 30)):
        for j in range(i + 1, min(len(others), 30)):
            assert not is_linearly_equivalent(
                curve, others[i].beta_divisor(), others[j].beta_divisor()
            ), f"distinct classes {others[i]} and {others[j]} collide"
            checked += 1
    return f"{fibers} complementary fibers equivalent, {checked} cross-pairs distinct"


def check_group_closure(genus: int, sample_pairs: int | None = None) -> str:
    """Symmetric difference is a group law: involution, closure, and
    agreement between subset, Cantor, and h0 composition on sampled pairs."""
    curve = standard_curve(genus)
    classes = enumerate_two_torsion(curve)
    class_set = set(classes)
    pairs = list(itertools.combinations(range(len(classes)), 2))
    rng = random.Random(f"group-closure:{genus}")
    if sample_pairs is not None and len(pairs) > sample_pairs:
        pairs = rng.sample(pairs, sample_pairs)
    for c in classes:
        assert c.combine(c).is_trivial, f"{c} + {c} not trivial"
    for i, j in pairs:
        a, b = classes[i], classes[j]
        c = a.combine(b)
        assert c.is_trivial or c in class_set, f"{a} + {b} escaped the enumeration"
        assert c == b.combine(a), "symmetric difference not commutative"
        cantor = cantor_add(curve, a.mumford(), b.mumford())
        assert cantor == c.mumford(), f"Cantor sum of {a}, {b} disagrees with subsets"
        assert is_linearly_equivalent(
            curve, a.beta_divisor() + b.beta_divisor(), c.beta_divisor()
        ), f"h0 oracle rejects {a} + {b} = {c}"
    return f"{len(classes)} involutions, {len(pairs)} composition pairs"


def check_distinct_k_distinct_class(genus: int, sample: int = 40) -> str:
    """Classes with different invariant k are never equivalent."""
    curve = standard_curve(genus)
    by_k: dict[int, list[TwoTorsionClass]] = {}
    for c in enumerate_two_torsion(curve):
        by_k.setdefault(c.k, []).append(c)
    rng = random.Random(f"distinct-k:{genus}")
    ks = sorted(by_k)
    checked = 0
    for k1, k2 in itertools.combinations(ks, 2):
        for _ in range(min(sample, len(by_k[k1]) * len(by_k[k2]))):
            a = rng.choice(by_k[k1])
            b = rng.choice(by_k[k2])
            assert not is_linearly_equivalent(curve, a.beta_divisor(), b.beta_divisor())
            checked += 1
    return f"{checked} cross-k pairs distinct"


# ---------------------------------------------------------------------------
# index checks


def check_search_matches_closed_form(genus: int, exhaustive: bool) -> str:
    """Full-pool search returns k-1 with dimension pair (0, 0), matching the
    closed form, for every (or every sampled) class."""
    curve = standard_curve(genus)
    etas = _etas_for(curve, exhaustive)
    for eta in etas:
        report = search_report(curve, eta)
        closed = closed_form_report(curve, eta)
        assert report.cliff_eta == closed.cliff_eta == eta.k - 1, (
            f"{eta}: search {report.cliff_eta}, closed {closed.cliff_eta}, k-1 {eta.k - 1}"
        )
        assert report.cliff_dim == (0, 0), f"{eta}: dimension pair {report.cliff_dim}"
    return f"{len(etas)} classes agree at k-1 with pair (0,0)"


def check_zero_classification(genus: int, exhaustive: bool) -> str:
    """Index 0 occurs exactly for k = 1, and then the twisted canonical
    system has exactly the two subset points as base points."""
    curve = standard_curve(genus)
    etas = _etas_for(curve, exhaustive)
    zeros = 0
    for eta in etas:
        value = search_report(curve, eta).cliff_eta
        assert (value == 0) == (eta.k == 1), f"{eta}: value {value}, k {eta.k}"
        if eta.k == 1:
            probe = geometry_probes(curve, eta)
            expected = {curve.weierstrass_point(i) for i in eta.subset}
            assert set(probe.base_points) == expected, (
                f"{eta}: base points {probe.base_points}"
            )
            zeros += 1
    return f"{zeros} base-point classes verified among {len(etas)}"


def check_upper_bound_attained(genus: int, exhaustive: bool) -> str:
    """Every index is <= floor((g-1)/2) and the ceiling is attained.

    For sampled genera the ceiling certificate is a full search at maximal
    k; the per-class values come from witness-certified closed forms.
    """
    curve = standard_curve(genus)
    ceiling = (genus - 1) // 2
    if exhaustive:
        values = [search_report(curve, eta).cliff_eta for eta in enumerate_two_torsion(curve)]
    else:
        values = [closed_form_report(curve, eta).cliff_eta for eta in enumerate_two_torsion(curve)]
        k_max = (genus + 1) // 2
        for eta in sample_etas_for_k(curve, k_max, 3):
            assert search_report(curve, eta).cliff_eta == k_max - 1
    assert all(0 <= v <= ceiling for v in values), "a value escaped the bounds"
    assert max(values) == ceiling, f"max {max(values)} != ceiling {ceiling}"
    return f"max over {len(values)} classes is {ceiling}"


def check_dimension_pairs(genus: int, exhaustive: bool) -> str:
    """The dimension pair is always (0,0): never (0, r' >= 1), never (1,1)."""
    curve = standard_curve(genus)
    etas = _etas_for(curve, exhaustive)
    for eta in etas:
        pair = search_report(curve, eta).cliff_dim
        assert pair is not None and not (pair[0] == 0 and pair[1] >= 1), f"{eta}: {pair}"
        assert pair != (1, 1), f"{eta}: pair (1,1)"
        assert pair == (0, 0), f"{eta}: pair {pair}"
    return f"{len(etas)} dimension pairs all (0,0)"


def check_index_symmetry(genus: int, trials: int = 40) -> str:
    """The index of a bundle equals that of its twist and of its canonical
    residual whenever all of them contribute."""
    curve = standard_curve(genus)
    points = curve.weierstrass_points
    canonical = curve.canonical_divisor()
    rng = random.Random(f"index-symmetry:{genus}")
    etas = sample_etas(curve, 2)
    checked = 0
    for _ in range(trials):
        eta = rng.choice(etas)
        degree = rng.randint(1, genus - 1)
        d = Divisor.of_points(rng.choice(points) for _ in range(degree))
        if not contributes(curve, eta, d):
            continue
        value = clifford_of_divisor(curve, eta, d)
        assert clifford_of_divisor(curve, eta, eta.twist(d)) == value
        assert clifford_of_divisor(curve, eta, canonical - d) == value
        checked += 1
    assert checked > 0, "no contributing samples drawn"
    return f"{checked} contributing bundles symmetric"


def check_witness_base_disjoint(genus: int, per_k: int = 3) -> str:
    """A witness of the minimal index and its twist share no base point."""
    curve = standard_curve(genus)
    probes = curve.weierstrass_points
    count = 0
    for eta in sample_etas(curve, per_k):
        witness = search_report(curve, eta).witness
        shared = _base_points(curve, witness, probes) & _base_points(
            curve, eta.twist(witness), probes
        )
        assert not shared, f"{eta}: witness {witness} shares base points {shared}"
        count += 1
    return f"{count} witnesses checked"


def check_iota(genus: int, exhaustive: bool) -> str:
    """The invariant index of the double cover is 0 for k = 1 and 2 for
    k >= 2 (gonality 2 caps the second argument of the minimum)."""
    curve = standard_curve(genus)
    etas = _etas_for(curve, exhaustive)
    for eta in etas:
        expected = 0 if eta.k == 1 else 2
        assert iota_invariant_index(curve, eta) == expected, f"{eta}"
    sampled = sample_etas(curve, 1)
    for eta in sampled:
        assert iota_invariant_index(curve, eta, pool=list(curve.weierstrass_points)) == (
            0 if eta.k == 1 else 2
        )
    return f"{len(etas)} closed-form values, {len(sampled)} search values"


# ---------------------------------------------------------------------------
# classification probes


def check_base_points_k1(genus: int, exhaustive: bool) -> str:
    """k = 1 classes have exactly their two subset points as base points of
    the twisted canonical system; k >= 2 classes have none."""
    curve = standard_curve(genus)
    etas = [e for e in _etas_for(curve, exhaustive) if e.k == 1]
    others = [e for e in sample_etas(curve, 2) if e.k >= 2]
    for eta in etas:
        probe = geometry_probes(curve, eta)
        expected = {curve.weierstrass_point(i) for i in eta.subset}
        assert set(probe.base_points) == expected, f"{eta}: {probe.base_points}"
    for eta in others:
        assert not geometry_probes(curve, eta).base_points, f"{eta} has base points"
    return f"{len(etas)} base-point classes, {len(others)} free classes"


def check_k2_probe_shape(genus: int, per_k: int = 3) -> str:
    """k = 2: base point free but some pair of points is not separated."""
    assert genus >= 3
    curve = standard_curve(genus)
    for eta in sample_etas_for_k(curve, 2, per_k):
        probe = geometry_probes(curve, eta)
        assert not probe.base_points, f"{eta} has base points"
        assert probe.unseparated_pairs, f"{eta} separates all pairs"
    return f"{per_k} classes at k=2"


def check_k3_trisecant(genus: int, per_k: int = 3) -> str:
    """k = 3: the embedded curve has a trisecant line; the canonical witness
    (first three subset points) is among the degree-3 witnesses."""
    assert genus >= 5
    curve = standard_curve(genus)
    for eta in sample_etas_for_k(curve, 3, per_k):
        probe = geometry_probes(curve, eta)
        assert probe.trisecant_witnesses, f"{eta}: no trisecant"
        assert not probe.unseparated_pairs, f"{eta}: not an embedding"
        canonical_witness = eta.divisor_pair().positive
        assert canonical_witness in probe.trisecant_witnesses, (
            f"{eta}: canonical witness missing"
        )
        drop = h0(curve, eta.twist(curve.canonical_divisor() - canonical_witness))
        assert drop == genus - 3, f"{eta}: h0 drop {drop} != g-3"
    return f"{per_k} classes at k=3"


def check_min_secant_equals_k(genus: int, per_k: int = 3) -> str:
    """The smallest degree meeting the first secant variety is exactly k."""
    curve = standard_curve(genus)
    checked = 0
    for k in range(1, (genus + 1) // 2 + 1):
        for eta in sample_etas_for_k(curve, k, per_k):
            e0 = min_secant_degree(curve, eta)
            assert e0 == k, f"{eta}: e0 = {e0} != k = {k}"
            checked += 1
    return f"{checked} classes, e0 = k throughout"


def check_secant_crosscheck(genus: int, trials: int = 60) -> str:
    """Secant membership (with its built-in residual cross-check) on
    randomized effective divisors, including non-members."""
    curve = standard_curve(genus)
    points = curve.weierstrass_points
    rng = random.Random(f"secant:{genus}")
    etas = sample_etas(curve, 2)
    members = 0
    for _ in range(trials):
        eta = rng.choice(etas)
        e = rng.randint(2, max(2, genus - 1))
        d = Divisor.of_points(rng.choice(points) for _ in range(e))
        if not d.is_effective or d.degree != e:
            continue
        f = rng.randint(1, e - 1)
        if secant_membership(curve, eta, d, e, f):
            members += 1
    return f"{trials} membership tests ({members} members), cross-check clean"


# ---------------------------------------------------------------------------
# scroll checks


def check_dj_profile(genus: int, per_k: int = 3) -> str:
    """Drop sequences: d_0 = 2, entries non-increasing past the head, sum
    g-1, first 1 at index k-1 (absent exactly when g = 2k-1), type equal to
    the closed form, and depending only on k."""
    curve = standard_curve(genus)
    checked = 0
    for k in range(2, (genus + 1) // 2 + 1):
        sequences = set()
        for eta in sample_etas_for_k(curve, k, per_k):
            drops = dj_sequence(curve, eta)
            assert drops[0] == 2 and sum(drops) == genus - 1
            tail = drops[1:]
            assert all(tail[i] >= tail[i + 1] for i in range(len(tail) - 1)), (
                f"{eta}: {drops} not monotone after the head"
            )
            ones = [j for j, d in enumerate(drops) if d == 1]
            if ones:
                assert ones[0] == k - 1, f"{eta}: first 1 at {ones[0]} != k-1"
            else:
                assert genus == 2 * k - 1, f"{eta}: no 1 in {drops} but g != 2k-1"
            e1, e2 = scroll_type(curve, eta)  # raises on closed-form mismatch
            assert (e1, e2) == (genus - 1 - k, k - 2)
            sequences.add(drops)
            checked += 1
        assert len(sequences) == 1, f"k={k}: sequences vary with the subset"
    return f"{checked} drop sequences across k = 2..{(genus + 1) // 2}"


def check_park_table() -> str:
    """The resolution-shape table: nu = 5, 4, 3, 3, ... and regularity nu+1
    for k = 3..8; k = 2 is rejected."""
    expected_nu = {3: 5, 4: 4, 5: 3, 6: 3, 7: 3, 8: 3}
    for k, nu_want in expected_nu.items():
        genus = 2 * k - 1  # smallest admissible genus for this k
        nu, p, regularity = park_parameters(genus, k)
        assert nu == nu_want, f"k={k}: nu {nu}"
        assert p == nu * (k - 2) - 2 * k + 1, f"k={k}: p {p}"
        assert regularity == nu + 1, f"k={k}: regularity {regularity}"
    for bad in (1, 2):
        try:
            park_parameters(9, bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"k={bad} accepted")
    try:
        park_parameters(5, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("k above the genus ceiling accepted")
    return "nu, p, regularity for k = 3..8 plus rejection cases"


# ---------------------------------------------------------------------------
# suite assembly


Check = tuple[str, Callable[[], str]]


def _suite_units(name: str, genus_max: int) -> list[Check]:
    exhaustive_to = min(genus_max, 4)
    genera = list(range(2, genus_max + 1))
    units: list[Check] = []

    if name == "riemann-roch":
        for g in genera:
            trials = 500 if g <= 5 else 150
            units.append((f"rr-identity-g{g}", partial(check_rr_identity, g, trials)))
            units.append((f"h0-basics-g{g}", partial(check_h0_basics, g)))
            units.append((f"monotonicity-g{g}", partial(check_monotonicity, g, 80 if g <= 4 else 40)))
            units.append(
                (f"structure-theorem-g{g}", partial(check_structure_theorem, g, None if g <= 4 else 60))
            )
            units.append((f"basis-valuations-g{g}", partial(check_basis_valuations, g, 25 if g <= 4 else 10)))
            units.append((f"cantor-oracle-g{g}", partial(check_cantor_oracle, g, 120 if g <= 3 else 60)))
    elif name == "two-torsion":
        for g in genera:
            exhaustive = g <= exhaustive_to
            units.append((f"two-torsion-count-g{g}", partial(check_two_torsion_count, g)))
            units.append(
                (f"beta-injective-g{g}", partial(check_beta_injective, g, None if exhaustive else 25))
            )
            if g % 2 == 1:
                units.append(
                    (f"beta-two-to-one-g{g}", partial(check_beta_two_to_one, g, None if g == 3 else 20))
                )
            units.append(
                (f"group-closure-g{g}", partial(check_group_closure, g, None if g == 2 else 150))
            )
            units.append((f"distinct-k-g{g}", partial(check_distinct_k_distinct_class, g)))
    elif name == "prym-clifford":
        for g in genera:
            exhaustive = g <= exhaustive_to
            units.append(
                (f"search-matches-closed-g{g}", partial(check_search_matches_closed_form, g, exhaustive))
            )
            units.append((f"zero-iff-k1-g{g}", partial(check_zero_classification, g, exhaustive)))
            units.append((f"bound-attained-g{g}", partial(check_upper_bound_attained, g, exhaustive)))
            units.append((f"dimension-pairs-g{g}", partial(check_dimension_pairs, g, exhaustive)))
            units.append((f"index-symmetry-g{g}", partial(check_index_symmetry, g)))
            units.append((f"witness-base-disjoint-g{g}", partial(check_witness_base_disjoint, g)))
            units.append((f"iota-g{g}", partial(check_iota, g, exhaustive)))
    elif name == "classification-probes":
        for g in genera:
            exhaustive = g <= exhaustive_to
            units.append((f"base-points-k1-g{g}", partial(check_base_points_k1, g, exhaustive)))
            if g >= 3:
                units.append((f"k2-shape-g{g}", partial(check_k2_probe_shape, g)))
            if g >= 5:
                units.append((f"k3-trisecant-g{g}", partial(check_k3_trisecant, g)))
            units.append((f"min-secant-e0-g{g}", partial(check_min_secant_equals_k, g)))
            units.append((f"secant-crosscheck-g{g}", partial(check_secant_crosscheck, g)))
    elif name == "scroll":
        units.append(("park-table", check_park_table))
        for g in genera:
            if g >= 3:
                units.append((f"dj-profile-g{g}", partial(check_dj_profile, g)))
    elif name == "all":
        for sub in SUITE_NAMES[:-1]:
            units.extend(_suite_units(sub, genus_max))
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return units


def run_suite(name: str, genus_max: int = 6) -> VerificationSuite:
    """Run a named suite up to the given genus ceiling.

    Exhaustive class enumerations stop at genus 4; genera 5..genus_max are
    covered on deterministic samples.  The result is a pure function of
    (name, genus_max).
    """
    if genus_max < 2:
        raise ValueError("genus_max must be >= 2")
    units = _suite_units(name, genus_max)
    started = time.perf_counter()

    def execute(unit: Check) -> VerificationCheck:
        claim, fn = unit
        try:
            detail = fn()
            return VerificationCheck(claim, "pass", detail)
        except AssertionError as exc:
            return VerificationCheck(claim, "fail", str(exc) or "assertion failed")
        except Exception as exc:  # noqa: BLE001 - a crash is a failed claim
            return VerificationCheck(claim, "fail", f"{type(exc).__name__}: {exc}")

    workers = worker_count()
    if workers > 1 and len(units) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = tuple(pool.map(execute, units))
    else:
        checks = tuple(execute(u) for u in units)
    elapsed = time.perf_counter() - started
    return VerificationSuite(name=name, genus_max=genus_max, checks=checks, elapsed_seconds=elapsed)
