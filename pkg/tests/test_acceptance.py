"""Acceptance criteria, all checked with exact equality.

Each test prints a single ``PASS`` or ``FAIL`` line with its runtime, and
also fails if the runtime budget is exceeded.  Running the file directly
(``python3 tests/test_acceptance.py``) prints the same ten lines without
pytest.
"""

import math
import time

import pytest

from wronskian_brackets.conformal import conformal_weight, verify_conformal_grid, verify_conformal_law
from wronskian_brackets.diffop import DiffOp, alt_compose_ops, verify_theorem1
from wronskian_brackets.exact import Poly, parse_poly
from wronskian_brackets.ncfree import alt_composition, generators, nested_alt, verify_table6
from wronskian_brackets.shlie import (
    structure_constants_kN,
    verify_jacobi_kN,
    verify_sl2,
    verify_witt,
)
from wronskian_brackets.verify import SuiteParams, suite_eq4, suite_eq7, suite_eq15
from wronskian_brackets.wronskian import (
    basis_wronskian,
    verify_generating_function,
    wm_direct,
    wm_recurrence,
)


def _report(number, title, ok, seconds, budget, note=""):
    status = "PASS" if ok and seconds < budget else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title} ({seconds:.2f}s / {budget}s)"
    if note:
        line += f" - {note}"
    print(line, flush=True)
    return status == "PASS"


def _timed(fn):
    start = time.perf_counter()
    ok, note = fn()
    return ok, note, time.perf_counter() - start


def c1_sl2():
    r = verify_sl2()
    return r.passed and r.checks == 3, ""


def c2_pure_order_operators():
    report = suite_eq4(SuiteParams())
    monomials = [DiffOp.pure(Poly.monomial(1, d), 2) for d in range(4)]
    lhs = alt_compose_ops(monomials)
    direct = verify_theorem1(2, [Poly.monomial(1, d) for d in range(4)])
    ok = report.passed and lhs == DiffOp.pure(Poly.const(12), 2) and direct.equal
    note = (
        f"{len(report.failures)}/{report.checks} mismatches, "
        f"ratios {report.details['measured_ratio']}, (1,x,x^2,x^3) gives {lhs}"
    )
    return ok, note


def c3_free_algebra_table():
    report = verify_table6(4, 5)
    by_pair = {(e.k, e.l): e for e in report.entries}
    ok = report.passed
    ok &= nested_alt(2, 2).is_zero() and nested_alt(4, 2).is_zero()
    ok &= by_pair[(3, 2)].ratio is not None and by_pair[(3, 2)].equal_up_to_sign
    ok &= by_pair[(2, 3)].ratio == 2 and by_pair[(3, 3)].ratio == 3
    for n in range(1, 9):
        alt = alt_composition(generators(n))
        ok &= len(alt) == math.factorial(n) and all(abs(c) == 1 for _, c in alt)
    measured = {f"{e.k},{e.l}": str(e.ratio) for e in report.entries if e.expected != 0}
    return ok, f"measured {measured}"


def c4_jacobiator_grid():
    r = suite_eq7(SuiteParams())
    return r.passed, f"{r.checks} tuples"


def c5_basis_wronskians():
    ok = all(
        basis_wronskian(n, k) == Poly.basis(n - k) for n in range(0, 9) for k in range(n + 1)
    )
    for n in range(1, 9):
        nz = structure_constants_kN(n).nonzero()
        ok &= len(nz) == n + 1 and all(abs(c) == 1 for _, c in nz.values())
    return ok, ""


def c6_recurrence_chain():
    ok = all(
        wm_recurrence(m) == wm_direct(m) == Poly.basis(m) for m in range(1, 13)
    )
    ok &= verify_generating_function(12).passed
    return ok, ""


def c7_vandermonde():
    r = suite_eq15(SuiteParams())
    return r.passed, f"{r.checks} tuples"


def c8_witt():
    r = verify_witt(n_values=(2, 3, 4, 5), samples=100, seed=0, index_range=(-5, 5))
    return r.passed, f"{r.checks} checks"


def c9_conformal():
    grid = verify_conformal_grid()
    ok = grid.passed
    change = parse_poly("x + x^2")
    for n in (2, 3, 4):
        phis = [Poly.monomial(1, a) for a in range(1, n + 1)]
        delta = conformal_weight(n)
        ok &= delta == n * (n - 1) // 2
        ok &= verify_conformal_law(phis, change).equal
        ok &= not verify_conformal_law(phis, change, delta + 1).equal
        ok &= not verify_conformal_law(phis, change, delta - 1).equal
    return ok, f"{grid.checks} grid checks"


def c10_jacobi_kn():
    r2, r4 = verify_jacobi_kN(2), verify_jacobi_kN(4)
    ok = r2.passed and r4.passed
    ok &= r2.checks == math.comb(5, 3) and r4.checks == math.comb(11, 7)
    return ok, f"{r2.checks} + {r4.checks} tuples"


CRITERIA = [
    (1, "sl(2) relations from the binary bracket", c1_sl2, 1),
    (2, "alternated composition of w*D^p equals W(w)*D^p", c2_pure_order_operators, 30),
    (3, "free-algebra nested alternations", c3_free_algebra_table, 60),
    (4, "Jacobiator vanishes for 1 <= k, l <= 3", c4_jacobiator_grid, 60),
    (5, "basis Wronskians and +-1 structure constants", c5_basis_wronskians, 10),
    (6, "W_m by recurrence, determinant and exp(x) - 1", c6_recurrence_chain, 10),
    (7, "Vandermonde closed form vs direct determinant", c7_vandermonde, 30),
    (8, "Witt relations, exponent law, translation invariance", c8_witt, 10),
    (9, "conformal weight N(N-1)/2 and its uniqueness", c9_conformal, 30),
    (10, "N-ary Jacobi identity on k_2[x] and k_4[x]", c10_jacobi_kn, 60),
]


@pytest.mark.parametrize(
    "number, title, check, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA]
)
def test_criterion(number, title, check, budget, capsys):
    ok, note, seconds = _timed(check)
    with capsys.disabled():
        print()
        passed = _report(number, title, ok, seconds, budget, note)
    assert passed, note or title


if __name__ == "__main__":
    results = []
    for number, title, check, budget in CRITERIA:
        ok, note, seconds = _timed(check)
        results.append(_report(number, title, ok, seconds, budget, note))
    raise SystemExit(0 if all(results) else 1)
