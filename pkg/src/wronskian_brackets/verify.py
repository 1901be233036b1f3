"""Named verification suites shared by the command line and the acceptance tests.

Every suite returns a :class:`~wronskian_brackets.wronskian.CheckReport`.
Randomized parts draw from ``random.Random(seed)`` and always run on top of
an exhaustive small grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .conformal import conformal_weight, verify_conformal_grid, verify_conformal_law
from .diffop import verify_theorem1
from .exact import Monomial, Poly, parse_poly
from .ncfree import DEFAULT_MAX_ARGS, verify_table6
from .shlie import (
    structure_constants_kN,
    verify_jacobi_kN,
    verify_jacobiator_grid,
    verify_sl2,
    verify_witt,
    verify_witt_jacobi,
)
from .wronskian import (
    CheckReport,
    basis_wronskian,
    vandermonde_closed_form,
    verify_factorization_eq10,
    verify_generating_function,
    wronskian,
    wronskian_cofactor,
    wronskian_monomials_det,
)


@dataclass
class SuiteParams:
    seed: int = 0
    degree_bound: int | None = None
    max_arity: int = DEFAULT_MAX_ARGS
    samples: int | None = None
    k: int | None = None
    l: int | None = None


def _random_poly(rng: random.Random, degree: int) -> Poly:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-9, 9)
    return Poly(coeffs + [lead])


def suite_eq4(params: SuiteParams) -> CheckReport:
    """Alternated composition of ``w_j D^p`` against ``W(w) D^p`` for p = 1, 2."""
    rng = random.Random(params.seed)
    d1 = 6 if params.degree_bound is None else params.degree_bound
    samples = 200 if params.samples is None else params.samples
    cases = [(1, ds) for ds in product(range(d1 + 1), repeat=2)]
    cases += [(2, ds) for ds in product(range(4), repeat=4)]
    reports = [verify_theorem1(p, [Poly.monomial(1, d) for d in ds]) for p, ds in cases]
    for _ in range(samples):
        ws = [_random_poly(rng, rng.randint(0, 4)) for _ in range(4)]
        reports.append(verify_theorem1(2, ws))
    failures = [r.to_dict() for r in reports if not r.equal]
    ratios: dict[int, set[str]] = {}
    for r in reports:
        if r.ratio is not None and not r.rhs.is_zero():
            ratios.setdefault(r.p, set()).add(str(r.ratio))
    return CheckReport(
        "eq4",
        len(reports),
        failures,
        {
            "closed": all(r.closed for r in reports),
            "measured_ratio": {str(p): sorted(v) for p, v in sorted(ratios.items())},
            "seed": params.seed,
        },
    )


def suite_eq6(params: SuiteParams) -> CheckReport:
    k_max = 4 if params.k is None else params.k
    l_max = 5 if params.l is None else params.l
    report = verify_table6(k_max, l_max, params.max_arity)
    data = report.to_dict()
    return CheckReport(
        "eq6", data["checks"], data["failures"], {"entries": data["entries"]}
    )


def suite_eq7(params: SuiteParams) -> CheckReport:
    ks = [params.k] if params.k is not None else [1, 2, 3]
    ls = [params.l] if params.l is not None else [1, 2, 3]
    failures = []
    checks = 0
    pairs = []
    for k in ks:
        for l in ls:
            r = verify_jacobiator_grid(k, l, params.degree_bound)
            checks += r.checks
            failures += r.failures
            pairs.append({"k": k, "l": l, "degree_bound": r.details["degree_bound"], "checks": r.checks})
    return CheckReport("eq7", checks, failures, {"pairs": pairs})


def suite_eq9(params: SuiteParams) -> CheckReport:
    n_max = 8 if params.degree_bound is None else params.degree_bound
    failures = []
    checks = 0
    for n in range(0, n_max + 1):
        for k in range(0, n + 1):
            checks += 1
            w = basis_wronskian(n, k)
            if w != Poly.basis(n - k):
                failures.append({"N": n, "k": k, "got": str(w)})
    for n in range(1, n_max + 1):
        checks += 1
        nz = structure_constants_kN(n).nonzero()
        if len(nz) != n + 1 or any(abs(c) != 1 for _, c in nz.values()):
            failures.append({"N": n, "nonzero": {str(a): v for a, v in nz.items()}})
    return CheckReport("eq9", checks, failures, {"N_max": n_max})


def suite_eq12(params: SuiteParams) -> CheckReport:
    m_max = 12 if params.degree_bound is None else params.degree_bound
    gen = verify_generating_function(m_max)
    failures = list(gen.failures)
    checks = gen.checks
    for n in range(0, 9):
        for k in range(0, n + 1):
            r = verify_factorization_eq10(n, k)
            checks += r.checks
            failures += r.failures
    return CheckReport("eq12", checks, failures, {"M": m_max, "series": gen.details["series"]})


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 6))


def suite_eq15(params: SuiteParams) -> CheckReport:
    """Vandermonde closed form against the direct monomial determinant."""
    rng = random.Random(params.seed)
    bound = 8 if params.degree_bound is None else params.degree_bound
    samples = 100 if params.samples is None else params.samples
    failures = []
    checks = 0
    for n in range(1, 5):
        for nus in product(range(bound + 1), repeat=n):
            checks += 1
            closed = vandermonde_closed_form(nus)
            direct = wronskian_monomials_det([Monomial.power(v) for v in nus])
            if closed != direct:
                failures.append({"nus": list(nus), "closed": str(closed), "direct": str(direct)})
    for n in range(2, 6):
        for _ in range(samples):
            checks += 1
            nus = [_random_rational(rng) for _ in range(n)]
            closed = vandermonde_closed_form(nus)
            direct = wronskian_monomials_det([Monomial.power(v) for v in nus])
            if closed != direct:
                failures.append(
                    {"nus": [str(v) for v in nus], "closed": str(closed), "direct": str(direct)}
                )
    return CheckReport(
        "eq15", checks, failures, {"degree_bound": bound, "samples": samples, "seed": params.seed}
    )


def suite_jacobi_kn(params: SuiteParams) -> CheckReport:
    failures = []
    checks = 0
    for n in (2, 4):
        r = verify_jacobi_kN(n)
        checks += r.checks
        failures += r.failures
    return CheckReport("jacobi-kN", checks, failures, {"N": [2, 4]})


def suite_witt(params: SuiteParams) -> CheckReport:
    samples = 100 if params.samples is None else params.samples
    r = verify_witt(samples=samples, seed=params.seed)
    failures = list(r.failures)
    checks = r.checks
    for n in (2, 3, 4):
        j = verify_witt_jacobi(n)
        checks += j.checks
        failures += j.failures
    return CheckReport("witt", checks, failures, {**r.details, "jacobi_N": [2, 3, 4]})


def weight_is_unique(n: int, change: Poly, phis: list[Poly]) -> bool:
    """Only ``conformal_weight(n)`` makes the law hold on this instance."""
    delta = conformal_weight(n)
    if not verify_conformal_law(phis, change, delta).equal:
        return False
    others = [w for w in (delta - 1, delta + 1) if w >= 0]
    return not any(verify_conformal_law(phis, change, w).equal for w in others)


def suite_conformal(params: SuiteParams) -> CheckReport:
    grid = verify_conformal_grid()
    failures = list(grid.failures)
    checks = grid.checks
    change = parse_poly("x + x^2")
    for n in (2, 3, 4):
        checks += 1
        phis = [Poly.monomial(1, a) for a in range(1, n + 1)]
        if not weight_is_unique(n, change, phis):
            failures.append({"N": n, "weight_unique": False})
    return CheckReport("conformal", checks, failures, grid.details)


def suite_sl2(params: SuiteParams) -> CheckReport:
    return verify_sl2()


SUITES = {
    "sl2": suite_sl2,
    "eq4": suite_eq4,
    "eq6": suite_eq6,
    "eq7": suite_eq7,
    "eq9": suite_eq9,
    "eq12": suite_eq12,
    "eq15": suite_eq15,
    "jacobi-kN": suite_jacobi_kn,
    "witt": suite_witt,
    "conformal": suite_conformal,
}


def run_suite(name: str, params: SuiteParams | None = None) -> CheckReport:
    """Run one suite, or every suite for ``name == "all"``."""
    params = params or SuiteParams()
    if name != "all":
        return SUITES[name](params)
    parts = {n: fn(params) for n, fn in SUITES.items()}
    failures = [{"suite": n, **f} for n, r in parts.items() for f in r.failures]
    summary = {n: {"passed": r.passed, "checks": r.checks} for n, r in parts.items()}
    return CheckReport("all", sum(r.checks for r in parts.values()), failures, {"summary": summary})


def wronskian_cross_checked(fs: list[Poly]) -> tuple[Poly, bool]:
    """Wronskian by elimination, together with agreement against cofactor expansion."""
    w = wronskian(fs)
    return w, w == wronskian_cofactor(fs)
