"""
Structure constants of k_N[x] and of the Witt deformation
=========================================================

On polynomials of degree at most N with basis x^k/k!, the N-ary Wronskian
has constants 0 or 1.  On generators a_i = x^(i + N/2) it gives
[a_i1, ..., a_iN] = Vandermonde(i) * a_(i1 + ... + iN).
"""

from wronskian_brackets.cli import render_table
from wronskian_brackets.shlie import structure_constants_kN, verify_sl2, witt_bracket, witt_table

print(render_table(structure_constants_kN(2), "text"))
print(render_table(structure_constants_kN(4), "text"))

# sl(2) as vector fields e = D, h = -2x D, f = -x^2 D
for row in verify_sl2().details["relations"]:
    print(row["relation"], "->", row["wronskian"])

print(render_table(witt_table(2, -2, 2), "csv"))
print("[a_0, a_1, a_2]_3 =", witt_bracket(3, (0, 1, 2)))
print("[a_-1, a_0, a_2, a_4]_4 =", witt_bracket(4, (-1, 0, 2, 4)))
