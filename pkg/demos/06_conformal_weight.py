"""
Conformal weight of the Wronskian
=================================

Under y = y(x) the Wronskian of N scalar functions picks up the factor
(dy/dx)^(N(N-1)/2).  Both sides are polynomials, so the law is checked
exactly.
"""

from wronskian_brackets import parse_poly
from wronskian_brackets.conformal import conformal_weight, verify_conformal_law

phis = [parse_poly(t, "y") for t in ("1", "y", "y^2")]
change = parse_poly("x + x^2")

r = verify_conformal_law(phis, change)
print("weight", r.weight)
print("lhs", r.lhs)
print("rhs", r.rhs)

# one more or one less power breaks the law
for w in (conformal_weight(3) - 1, conformal_weight(3) + 1):
    print("weight", w, "holds:", verify_conformal_law(phis, change, w).equal)

# affine changes only rescale by alpha^weight
print(verify_conformal_law(phis, parse_poly("3*x - 1")).lhs)
