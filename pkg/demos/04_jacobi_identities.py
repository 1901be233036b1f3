"""
Jacobi identities for Wronskian brackets
========================================

Put a (l+1)-ary Wronskian inside a (k+1)-ary one and sum over unshuffles.
The result vanishes for every k and l, which makes the Wronskians a strong
homotopy Lie algebra.
"""

from wronskian_brackets import jacobiator, parse_poly
from wronskian_brackets.shlie import verify_jacobiator_grid

fs = [parse_poly(t) for t in ("x^3 + 1", "x^2 - x", "2*x^4 + x")]
print("binary Jacobiator:", jacobiator(1, 1, fs))

fs = [parse_poly(t) for t in ("1", "x", "x^2", "x^3", "x^4")]
print("ternary in ternary:", jacobiator(2, 2, fs))

# monomial grids certify the identity for all polynomials of bounded degree
for k, l in [(1, 2), (2, 1), (2, 2)]:
    r = verify_jacobiator_grid(k, l)
    print(f"k={k} l={l}: {r.checks} tuples, passed={r.passed}")
