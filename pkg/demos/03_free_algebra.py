"""
Nested alternations in a free associative algebra
=================================================

alt_N(a_1, ..., a_N) is the signed sum of all N! words.  Inserting one
alternation into another and summing over unshuffles gives either zero or
a multiple of a longer alternation, depending on the parities.
"""

from wronskian_brackets.ncfree import alt_composition, generators, nested_alt, verify_table6

a1, a2, a3 = generators(3)
print("alt_2(a1, a2) =", alt_composition([a1, a2]))
print("alt_3 has", len(alt_composition([a1, a2, a3])), "words")

print("alt_2[alt_2] =", nested_alt(2, 2))
print("alt_2[alt_3] = 2 * alt_4 ?", nested_alt(2, 3) == alt_composition(generators(4)) * 2)

report = verify_table6(4, 5)
for e in report.entries:
    if e.expected:
        print(f"  alt_{e.k}[alt_{e.l}]  case {e.case}  coefficient {e.ratio}")
print("all pairs match:", report.passed)
