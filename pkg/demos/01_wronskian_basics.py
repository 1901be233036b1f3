"""
Wronskians of polynomials
=========================

The Wronskian of f_1, ..., f_N is the determinant whose i-th row holds the
(i-1)-th derivatives.  Everything here is exact rational arithmetic.
"""

from fractions import Fraction

from wronskian_brackets import Monomial, parse_poly, wronskian
from wronskian_brackets.wronskian import (
    vandermonde_closed_form,
    wronskian_cofactor,
    wronskian_matrix,
    wronskian_monomials_det,
)

fs = [parse_poly(t) for t in ("x^2", "x^5")]
for row in wronskian_matrix(fs):
    print("  ", [str(p) for p in row])
print("W(x^2, x^5) =", wronskian(fs))

# elimination and cofactor expansion agree
fs = [parse_poly(t) for t in ("x^3 - 1", "2*x^2 + x", "x^4/3", "x + 5")]
print("Bareiss :", wronskian(fs))
print("cofactor:", wronskian_cofactor(fs))

# swapping two arguments flips the sign, repeating one kills it
print("swapped :", wronskian([fs[1], fs[0], fs[2], fs[3]]))
print("repeated:", wronskian([fs[0], fs[0]]))

# monomials with rational exponents: the coefficient is a Vandermonde product
nus = [Fraction(1, 2), Fraction(3, 2), Fraction(7, 3)]
direct = wronskian_monomials_det([Monomial.power(v) for v in nus])
print("direct     :", direct)
print("closed form:", vandermonde_closed_form(nus))
