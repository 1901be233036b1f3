"""
Alternated compositions of pure-order operators
===============================================

For operators w_j * D^p the alternated sum over all orderings of their
composition again has the form c * W(w_1, ..., w_2p) * D^p.  For p = 1 the
constant is 1 and the commutator of vector fields is a Wronskian; for p >= 2
the measured constant is larger.
"""

from wronskian_brackets import DiffOp, alt_compose_ops, parse_poly, verify_theorem1

X, Y = parse_poly("x^3 - x"), parse_poly("2*x^2 + 5")
bracket = alt_compose_ops([DiffOp.pure(X, 1), DiffOp.pure(Y, 1)])
print("[X D, Y D] =", bracket)

# h = -2x D and e = D
r = verify_theorem1(1, [parse_poly("-2*x"), parse_poly("1")])
print("p=1:", r.lhs, "vs", r.rhs, "equal:", r.equal)

# four second-order operators with coefficients 1, x, x^2, x^3
ws = [parse_poly(t) for t in ("1", "x", "x^2", "x^3")]
r = verify_theorem1(2, ws)
print("p=2 alternated sum :", r.lhs)
print("p=2 W(w) * D^2     :", r.rhs)
print("pure order kept    :", r.closed, " ratio:", r.ratio)

ws = [parse_poly(t) for t in ("x + 1", "x^2", "3*x^3 - x", "x^4")]
r = verify_theorem1(2, ws)
print("another p=2 sample, ratio:", r.ratio)
