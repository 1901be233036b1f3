from fractions import Fraction

from hypothesis import strategies as st

from wronskian_brackets.exact import Poly

small_fractions = st.builds(
    Fraction, st.integers(min_value=-12, max_value=12), st.integers(min_value=1, max_value=5)
)


def polys(max_degree: int = 6):
    return st.lists(small_fractions, min_size=0, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree: int = 6):
    return polys(max_degree).filter(lambda p: not p.is_zero())
