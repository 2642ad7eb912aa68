"""Scroll type and syzygy parameters of the twisted canonical image.

For k >= 2 the twisted canonical system is base point free and its image in
P^{g-2} sits on a rational normal scroll swept out by the spans of the
degree-2 pencil fibres.  The scroll type is read off the sequence

    d_j = h0(canonical + eta - j * pencil) - h0(canonical + eta - (j+1) * pencil),

via e_i = #{j : d_j >= i} - 1, and must come out as (g-1-k, k-2); the module
asserts that equality on every run, so any drift in the h0 engine surfaces
as a hard error rather than a wrong report.  For k >= 3 (the very-ample
range) the scroll determines the syzygies of the embedded curve through the
factorization type (m, b) = (g-k-1, 2k): the resolution shape parameters

    nu = ceil((b-1) / (m+b-g-1)),   p = nu*(m+b-g-1) - b + 1

and Castelnuovo-Mumford regularity nu + 1 are pure arithmetic in (g, k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import HyperellipticCurve
from .jacobian import TwoTorsionClass
from .riemann_roch import h0


class ScrollMismatchError(ArithmeticError):
    """The d_j-derived scroll type disagrees with the closed form: a bug."""


@dataclass(frozen=True)
class ScrollReport:
    genus: int
    k: int
    d_sequence: tuple[int, ...]
    e1: int
    e2: int
    factorization_type: tuple[int, int]  # (m, b) = (g-k-1, 2k)
    nu: int | None
    p: int | None
    regularity: int | None


def dj_sequence(curve: HyperellipticCurve, eta: TwoTorsionClass) -> tuple[int, ...]:
    """Successive h0 drops of the twisted canonical class along the pencil.

    Requires k >= 2 (for k = 1 the system has base points and the scroll
    construction does not apply).  Terminates after two consecutive zero
    drops; trailing zeros are not reported.  d_0 = 2, every entry is in
    {0, 1, 2} and the entries sum to g - 1; violations raise, since they can
    only come from an engine defect.
    """
    if eta.is_trivial:
        raise ValueError("need a nontrivial 2-torsion class")
    if eta.k < 2:
        raise ValueError("k = 1: the twisted canonical system has base points")
    g = curve.genus
    pair = eta.divisor_pair()
    base = curve.canonical_divisor() + pair.positive - pair.negative
    pencil = curve.pencil_divisor()

    values = [h0(curve, base)]
    drops: list[int] = []
    j = 0
    zero_run = 0
    while zero_run < 2:
        values.append(h0(curve, base - (j + 1) * pencil))
        d_j = values[j] - values[j + 1]
        drops.append(d_j)
        zero_run = zero_run + 1 if d_j == 0 else 0
        j += 1

    while drops and drops[-1] == 0:
        drops.pop()
    if values[0] != g - 1 or not drops or drops[0] != 2:
        raise ScrollMismatchError(f"drop sequence {drops} should start at 2 with h0 = g-1")
    if any(d not in (0, 1, 2) for d in drops) or sum(drops) != g - 1:
        raise ScrollMismatchError(f"drop sequence {drops} is not a valid scroll profile")
    return tuple(drops)


def scroll_type(curve: HyperellipticCurve, eta: TwoTorsionClass) -> tuple[int, int]:
    """(e1, e2) from the drop sequence, checked against (g-1-k, k-2)."""
    drops = dj_sequence(curve, eta)
    e1 = sum(1 for d in drops if d >= 1) - 1
    e2 = sum(1 for d in drops if d >= 2) - 1
    g, k = curve.genus, eta.k
    if (e1, e2) != (g - 1 - k, k - 2):
        raise ScrollMismatchError(
            f"drop-derived type {(e1, e2)} != closed form {(g - 1 - k, k - 2)}"
        )
    return e1, e2


def park_parameters(genus: int, k: int) -> tuple[int, int, int]:
    """(nu, p, regularity) for the embedded twisted canonical curve.

    Pure arithmetic in (g, k); defined for 3 <= k <= (g+1)/2, the range in
    which the system is very ample.  nu is 5, 4, 3 for k = 3, 4, >= 5.
    """
    if k < 3:
        raise ValueError("k < 3: the twisted canonical system is not very ample")
    if k > (genus + 1) // 2:
        raise ValueError(f"k = {k} exceeds the ceiling {(genus + 1) // 2} for genus {genus}")
    m = genus - k - 1
    b = 2 * k
    denom = m + b - genus - 1  # = k - 2
    nu = -((b - 1) // -denom)  # ceil((b-1)/denom)
    p = nu * denom - b + 1
    return nu, p, nu + 1


def scroll_report(curve: HyperellipticCurve, eta: TwoTorsionClass) -> ScrollReport:
    """Full scroll/syzygy report; syzygy fields are None for k = 2."""
    drops = dj_sequence(curve, eta)
    e1, e2 = scroll_type(curve, eta)
    g, k = curve.genus, eta.k
    if k >= 3:
        nu, p, regularity = park_parameters(g, k)
    else:
        nu = p = regularity = None
    return ScrollReport(
        genus=g,
        k=k,
        d_sequence=drops,
        e1=e1,
        e2=e2,
        factorization_type=(g - k - 1, 2 * k),
        nu=nu,
        p=p,
        regularity=regularity,
    )
