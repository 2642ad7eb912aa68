"""prymlab: exact invariants of split hyperelliptic curves with a 2-torsion twist.

The package computes, in exact rational arithmetic, Riemann-Roch spaces and
their dimensions, divisor-class arithmetic in Mumford form, the full
2-torsion subgroup as combinatorics of ramification-point subsets, the
twisted (Prym-canonical) Clifford index and dimension with certified
witnesses, secant-variety probes, rational normal scroll types, and the
resolution-shape parameters of the embedded twisted canonical curve.

Everything is deterministic: no floating point, no tolerances, no
randomness outside seeded verification checks.
"""

from .curves import (
    INFINITY,
    CurvePoint,
    Divisor,
    HyperellipticCurve,
    canonical_divisor,
    curve_with_marked_point,
    new_curve,
    standard_curve,
)
from .jacobian import (
    EtaDivisorPair,
    MumfordClass,
    TwoTorsionClass,
    cantor_add,
    cantor_identity,
    cantor_negate,
    enumerate_two_torsion,
    eta_canonical_k,
    mumford_of_divisor,
    mumford_of_point,
    two_torsion_from_subset,
    two_torsion_group_op,
    validate_mumford,
)
from .linalg import kernel_basis, matrix_rank
from .polynomials import Poly, Rational, poly_gcd, poly_xgcd
from .prym import (
    GeometryProbes,
    NonContributingError,
    PrymReport,
    clifford_dimension,
    clifford_of_divisor,
    closed_form_report,
    contributes,
    geometry_probes,
    iota_invariant_index,
    min_secant_degree,
    search_report,
    secant_membership,
)
from .riemann_roch import (
    CurveFunction,
    RRSpace,
    h0,
    is_linearly_equivalent,
    riemann_roch_space,
    valuation,
)
from .scroll import (
    ScrollMismatchError,
    ScrollReport,
    dj_sequence,
    park_parameters,
    scroll_report,
    scroll_type,
)
from .series import BranchUndefinedError, TruncatedSeries, series_sqrt_branch
from .verify import VerificationCheck, VerificationSuite, run_suite

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "BranchUndefinedError",
    "CurveFunction",
    "CurvePoint",
    "Divisor",
    "EtaDivisorPair",
    "GeometryProbes",
    "HyperellipticCurve",
    "MumfordClass",
    "NonContributingError",
    "Poly",
    "PrymReport",
    "RRSpace",
    "Rational",
    "ScrollMismatchError",
    "ScrollReport",
    "TruncatedSeries",
    "TwoTorsionClass",
    "VerificationCheck",
    "VerificationSuite",
    "canonical_divisor",
    "cantor_add",
    "cantor_identity",
    "cantor_negate",
    "clifford_dimension",
    "clifford_of_divisor",
    "closed_form_report",
    "contributes",
    "curve_with_marked_point",
    "dj_sequence",
    "enumerate_two_torsion",
    "eta_canonical_k",
    "geometry_probes",
    "h0",
    "is_linearly_equivalent",
    "iota_invariant_index",
    "kernel_basis",
    "matrix_rank",
    "min_secant_degree",
    "mumford_of_divisor",
    "mumford_of_point",
    "new_curve",
    "park_parameters",
    "poly_gcd",
    "poly_xgcd",
    "riemann_roch_space",
    "run_suite",
    "scroll_report",
    "scroll_type",
    "search_report",
    "secant_membership",
    "series_sqrt_branch",
    "standard_curve",
    "two_torsion_from_subset",
    "two_torsion_group_op",
    "valuation",
    "validate_mumford",
]
