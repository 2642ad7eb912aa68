"""Curves, divisors, and exact Riemann-Roch spaces.

A genus-g curve here is y^2 = f(x) with f monic of degree 2g+1 and split
over Q.  There is one point at infinity and it ramifies, so the 2g+2
ramification ("Weierstrass") points are the roots of f plus infinity.
Everything downstream is driven by exact dimensions of the spaces
L(D) = {functions with poles bounded by D}.
"""

from prymlab import Divisor, h0, is_linearly_equivalent, riemann_roch_space, standard_curve

curve = standard_curve(2)  # roots 1..5
print(f"curve: y^2 = {curve.f}")
print(f"genus {curve.genus}, labels {', '.join(curve.weierstrass_labels)}")

# The degree-2 pencil |2*oo| is spanned by 1 and x.
pencil = curve.pencil_divisor()
space = riemann_roch_space(curve, pencil)
print(f"\nL(2*oo) has dimension {space.dimension}: {[str(b) for b in space.basis]}")

# The canonical class is (2g-2)*oo and has h0 = g.
K = curve.canonical_divisor()
print(f"canonical divisor {K}, h0 = {h0(curve, K)} (= genus)")

# A divisor supported on three ramification points: h0 = 2, and the second
# section involves y.
w = curve.weierstrass_points
D = Divisor.of_points(w[:3])
space = riemann_roch_space(curve, D)
print(f"\nL({D}):")
for fn in space.basis:
    print(f"  {fn}")

# The Riemann-Roch identity holds exactly, for every divisor.
for D in (Divisor.of_point(w[0], 3), D - 2 * Divisor.of_point(w[4]), -pencil):
    lhs = h0(curve, D) - h0(curve, K - D)
    print(f"h0({D}) - h0(K - .) = {lhs} = deg - g + 1 = {D.degree - curve.genus + 1}")

# Linear equivalence is decided by h0 of the difference: twice any
# ramification point is a pencil fibre.
print(f"\n2*w1 ~ 2*oo:  {is_linearly_equivalent(curve, 2 * Divisor.of_point(w[0]), pencil)}")
print(f"w1 ~ w2:      {is_linearly_equivalent(curve, Divisor.of_point(w[0]), Divisor.of_point(w[1]))}")
