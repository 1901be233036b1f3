"""Wronskian determinants as N-ary brackets, computed in exact arithmetic.

Submodules:

- :mod:`.exact` -- rationals, polynomials, rational-exponent monomials
- :mod:`.ncfree` -- free associative algebra and alternated products
- :mod:`.diffop` -- differential operators with polynomial coefficients
- :mod:`.wronskian` -- determinant kernels and closed forms
- :mod:`.shlie` -- Jacobiators, k_N[x], sl(2), the Witt deformation
- :mod:`.conformal` -- behaviour under coordinate changes
- :mod:`.verify` / :mod:`.cli` -- verification suites and the command line
"""

from .conformal import CoordinateChange, conformal_weight, verify_conformal_law
from .diffop import DiffOp, alt_compose_ops, apply, compose, verify_theorem1
from .errors import InternalInconsistencyError, ParseError, ResourceLimitError
from .exact import (
    Monomial,
    Poly,
    Rational,
    monomial_derivative,
    parse_monomial,
    parse_poly,
    poly_compose,
    poly_derivative,
)
from .ncfree import NCPoly, alt_composition, nested_alt, verify_table6
from .shlie import (
    StructureTable,
    enumerate_unshuffles,
    jacobiator,
    structure_constants_kN,
    verify_jacobi_kN,
    verify_sl2,
    verify_translation_invariance,
    witt_bracket,
)
from .wronskian import (
    basis_wronskian,
    vandermonde_closed_form,
    verify_factorization_eq10,
    verify_generating_function,
    wm_recurrence,
    wronskian,
    wronskian_monomials_det,
)

__version__ = "0.1.0"
