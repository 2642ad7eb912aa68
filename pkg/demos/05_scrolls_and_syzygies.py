"""Scroll types and resolution-shape parameters of the embedded curve.

For k >= 2 the twisted canonical image lies on a rational normal scroll
swept by the pencil fibres; its type (e1, e2) is read from the h0 drop
sequence d_j and always comes out as (g-1-k, k-2).  For k >= 3 the scroll
fixes the syzygies of the embedding: the parameters (nu, p) and the
Castelnuovo-Mumford regularity nu+1 are pure arithmetic in (g, k).
"""

from prymlab import park_parameters, scroll_report, standard_curve, two_torsion_from_subset


def eta_of_k(curve, k):
    return two_torsion_from_subset(curve, [f"w{i}" for i in range(1, 2 * k + 1)])


print("drop sequences and scroll types:")
print(f"{'g':>3} {'k':>3} {'d_sequence':>14} {'scroll':>10} {'(m, b)':>8}")
for g in (4, 5, 6, 7):
    curve = standard_curve(g)
    for k in range(2, (g + 1) // 2 + 1):
        r = scroll_report(curve, eta_of_k(curve, k))
        print(
            f"{g:>3} {k:>3} {str(list(r.d_sequence)):>14} "
            f"S({r.e1},{r.e2}){'':>3} {str(r.factorization_type):>8}"
        )

print("\nresolution-shape parameters (independent of the curve):")
print(f"{'k':>3} {'nu':>4} {'p':>3} {'regularity':>11}")
for k in range(3, 9):
    nu, p, regularity = park_parameters(2 * k - 1, k)
    flag = "  (p < 1: below the syzygy-property range)" if p < 1 else ""
    print(f"{k:>3} {nu:>4} {p:>3} {regularity:>11}{flag}")
