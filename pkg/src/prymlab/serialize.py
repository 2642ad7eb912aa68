"""JSON persistence for curves, divisors, 2-torsion classes and reports.

JSON is the single on-disk format.  Exact rationals travel as strings,
plain decimal for integers and "num/den" otherwise, so nothing is ever
rounded.  All emitters order keys and list entries canonically: re-encoding
the same object is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Union

from .curves import INFINITY, CurvePoint, Divisor, HyperellipticCurve
from .jacobian import TwoTorsionClass, two_torsion_from_subset
from .prym import GeometryProbes, PrymReport
from .scroll import ScrollReport


def rational_to_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    return Fraction(text)


# -- curves -----------------------------------------------------------------


def curve_to_dict(curve: HyperellipticCurve) -> dict:
    weierstrass: list[dict] = []
    for i, p in enumerate(curve.weierstrass_points, start=1):
        if p.is_infinity:
            weierstrass.append({"label": f"w{i}", "at_infinity": True})
        else:
            weierstrass.append(
                {"label": f"w{i}", "x": rational_to_str(p.x), "y": rational_to_str(p.y)}
            )
    return {
        "roots": [rational_to_str(r) for r in curve.roots],
        "genus": curve.genus,
        "weierstrass": weierstrass,
    }


def curve_from_dict(data: dict) -> HyperellipticCurve:
    try:
        roots = [rational_from_str(r) for r in data["roots"]]
    except KeyError:
        raise ValueError("curve JSON needs a 'roots' list") from None
    curve = HyperellipticCurve(roots)
    if "genus" in data and data["genus"] != curve.genus:
        raise ValueError(
            f"curve JSON claims genus {data['genus']} but the roots give {curve.genus}"
        )
    return curve


# -- points and divisors ------------------------------------------------------


def point_to_dict(point: CurvePoint, curve: HyperellipticCurve | None = None) -> dict:
    if curve is not None:
        label = curve.label_of(point)
        if label is not None:
            return {"label": label}
    if point.is_infinity:
        return {"at_infinity": True}
    return {"x": rational_to_str(point.x), "y": rational_to_str(point.y)}


def point_from_dict(
    data: Union[dict, str], curve: HyperellipticCurve | None = None
) -> CurvePoint:
    if isinstance(data, str):
        if curve is None:
            raise ValueError("point labels need a curve context")
        return curve.weierstrass_point(data)
    if data.get("at_infinity"):
        return INFINITY
    if "label" in data:
        if curve is None:
            raise ValueError("point labels need a curve context")
        return curve.weierstrass_point(data["label"])
    if "x" in data and "y" in data:
        point = CurvePoint.affine(rational_from_str(data["x"]), rational_from_str(data["y"]))
        if curve is not None and not curve.contains(point):
            raise ValueError(f"point {point} is not on the curve")
        return point
    raise ValueError(f"cannot read a point from {data!r}")


def divisor_to_dict(divisor: Divisor, curve: HyperellipticCurve | None = None) -> dict:
    return {
        "terms": [
            {"point": point_to_dict(p, curve), "mult": n} for p, n in divisor
        ]
    }


def divisor_from_dict(data: dict, curve: HyperellipticCurve | None = None) -> Divisor:
    if "terms" not in data:
        raise ValueError("divisor JSON needs a 'terms' list")
    terms = []
    for item in data["terms"]:
        terms.append((point_from_dict(item["point"], curve), int(item["mult"])))
    return Divisor(terms)


# -- 2-torsion ----------------------------------------------------------------


def eta_to_dict(eta: TwoTorsionClass) -> dict:
    return {
        "subset": list(eta.labels),
        "k": 0 if eta.is_trivial else eta.k,
    }


def eta_from_dict(data: dict, curve: HyperellipticCurve) -> TwoTorsionClass:
    if "subset" not in data:
        raise ValueError("eta JSON needs a 'subset' list")
    return two_torsion_from_subset(curve, data["subset"])


def eta_from_labels(curve: HyperellipticCurve, labels: Iterable[str] | str) -> TwoTorsionClass:
    """Accepts 'w1,w2' or an iterable of labels."""
    if isinstance(labels, str):
        labels = [part.strip() for part in labels.split(",") if part.strip()]
    return two_torsion_from_subset(curve, labels)


# -- reports --------------------------------------------------------------------


def probes_to_dict(probes: GeometryProbes, curve: HyperellipticCurve) -> dict:
    return {
        "base_points": [point_to_dict(p, curve) for p in probes.base_points],
        "unseparated_pairs": [
            [point_to_dict(p, curve), point_to_dict(q, curve)]
            for p, q in probes.unseparated_pairs
        ],
        "trisecant_witnesses": [
            divisor_to_dict(d, curve) for d in probes.trisecant_witnesses
        ],
    }


def prym_report_to_dict(report: PrymReport, curve: HyperellipticCurve) -> dict:
    return {
        "genus": report.genus,
        "eta": eta_to_dict(report.eta),
        "k": report.k,
        "cliff_eta": report.cliff_eta,
        "cliff_dim": list(report.cliff_dim) if report.cliff_dim is not None else None,
        "witnesses": [divisor_to_dict(d, curve) for d in report.witnesses],
        "mode": report.mode,
        "pool": report.pool_description,
        "iota_cliff": report.iota_cliff,
        "probes": probes_to_dict(report.probes, curve) if report.probes else None,
    }


def scroll_report_to_dict(report: ScrollReport) -> dict:
    return {
        "genus": report.genus,
        "k": report.k,
        "d_sequence": list(report.d_sequence),
        "scroll": [report.e1, report.e2],
        "factorization_type": list(report.factorization_type),
        "nu": report.nu,
        "p": report.p,
        "regularity": report.regularity,
    }


def dumps_canonical(obj: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"
