"""Jacobiators of Wronskian brackets, the algebras k_N[x], sl(2) and the Witt deformation.

The bracket of arity ``n`` is the Wronskian ``W^{0,...,n-1}``.  Insertion of
an inner bracket into an outer one always uses the first slot of the outer
bracket and is summed over unshuffles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .combinat import Unshuffle, enumerate_unshuffles, permutation_sign
from .diffop import DiffOp, compose
from .errors import InternalInconsistencyError, ResourceLimitError
from .exact import Monomial, Poly, Scalar
from .wronskian import (
    CheckReport,
    is_monomial_basis_multiple,
    kn_basis,
    vandermonde,
    vandermonde_closed_form,
    wronskian,
    wronskian_monomials_det,
)

MAX_JACOBI_KN = 4


def jacobiator(k: int, l: int, fs: Sequence[Poly]) -> Poly:
    """``W^{0..k}[W^{0..l}]`` on ``k + l + 1`` polynomials.

    Sum over (l+1, k)-unshuffles ``t`` of
    ``sign(t) * W^{0..k}(W^{0..l}(f_t(1..l+1)), f_t(l+2..k+l+1))``.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    if len(fs) != k + l + 1:
        raise ValueError(f"need {k + l + 1} arguments, got {len(fs)}")
    acc = Poly()
    for u in enumerate_unshuffles(l + 1, k):
        inner = wronskian([fs[i - 1] for i in u.first_block])
        if inner.is_zero():
            continue
        outer = wronskian([inner] + [fs[i - 1] for i in u.second_block])
        acc = acc + outer if u.sign > 0 else acc - outer
    return acc


def monomial_jacobiator(k: int, l: int, ms: Sequence[Monomial]) -> Monomial:
    """:func:`jacobiator` for single terms with rational exponents."""
    if len(ms) != k + l + 1:
        raise ValueError(f"need {k + l + 1} arguments, got {len(ms)}")
    acc = Monomial(0, 0)
    for u in enumerate_unshuffles(l + 1, k):
        inner = wronskian_monomials_det([ms[i - 1] for i in u.first_block])
        if inner.is_zero():
            continue
        outer = wronskian_monomials_det([inner] + [ms[i - 1] for i in u.second_block])
        acc = acc + outer * u.sign
    return acc


def verify_jacobiator_grid(
    k: int, l: int, degree_bound: int | None = None, repeats: bool = True
) -> CheckReport:
    """Evaluate the Jacobiator on every tuple of monomials ``x^d``, ``d <= degree_bound``.

    Tuples are taken in nondecreasing order of degree (with repetition when
    ``repeats``); together with multilinearity this covers every polynomial
    argument of those degrees.
    """
    if degree_bound is None:
        degree_bound = k + l + 2
    monos = [Poly.monomial(1, d) for d in range(degree_bound + 1)]
    pick = combinations_with_replacement if repeats else combinations
    failures = []
    checks = 0
    for degs in pick(range(degree_bound + 1), k + l + 1):
        checks += 1
        j = jacobiator(k, l, [monos[d] for d in degs])
        if not j.is_zero():
            failures.append({"k": k, "l": l, "degrees": list(degs), "jacobiator": str(j)})
    return CheckReport(
        "eq7",
        checks=checks,
        failures=failures,
        details={"k": k, "l": l, "degree_bound": degree_bound, "repeats": repeats},
    )


# -- k_N[x] ------------------------------------------------------------------


@dataclass
class StructureTable:
    """Brackets of increasing basis-index tuples.

    ``entries`` maps an argument tuple to ``(result, coeff)``; for ``kN`` the
    result is a basis index ``m`` of ``x^m/m!``, for ``witt`` it is the index of
    ``a_m``.  Zero brackets are kept with ``result = None`` and ``coeff = 0``.
    """

    algebra: str
    n: int
    entries: dict[tuple[int, ...], tuple[int | None, int]] = field(default_factory=dict)

    def nonzero(self) -> dict[tuple[int, ...], tuple[int | None, int]]:
        return {a: v for a, v in self.entries.items() if v[1] != 0}

    def rows(self) -> list[dict]:
        return [
            {"args": list(args), "result": res, "coeff": str(c)}
            for args, (res, c) in sorted(self.entries.items())
        ]

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "N": self.n, "entries": self.rows()}


def kn_bracket(n: int, indices: Sequence[int]) -> tuple[int | None, int]:
    """Bracket of basis elements ``x^i/i!`` of k_N[x], expressed in the basis."""
    basis = kn_basis(n)
    w = wronskian([basis[i] for i in indices])
    if w.is_zero():
        return None, 0
    if w.degree > n:
        raise InternalInconsistencyError(f"bracket {w} leaves k_{n}[x]")
    found = is_monomial_basis_multiple(w)
    if found is None:
        raise InternalInconsistencyError(f"bracket {w} is not a single basis element")
    m, c = found
    if c.denominator != 1:
        raise InternalInconsistencyError(f"non-integral structure constant {c}")
    return m, int(c)


def structure_constants_kN(n: int) -> StructureTable:
    """Structure constants of the N-ary Wronskian bracket on ``1, x, ..., x^N/N!``."""
    if n < 1:
        raise ValueError("N must be positive")
    table = StructureTable("kN", n)
    for args in combinations(range(n + 1), n):
        table.entries[args] = kn_bracket(n, args)
    return table


def verify_kn_closure(n: int) -> CheckReport:
    """Brackets of basis tuples (with repetition) stay in k_N[x]."""
    basis = kn_basis(n)
    failures = []
    checks = 0
    for args in combinations_with_replacement(range(n + 1), n):
        checks += 1
        w = wronskian([basis[i] for i in args])
        if not w.is_zero() and w.degree > n:
            failures.append({"args": list(args), "bracket": str(w)})
    return CheckReport("kN-closure", checks, failures, {"N": n})


def verify_jacobi_kN(n: int, max_n: int = MAX_JACOBI_KN) -> CheckReport:
    """Jacobiator of the N-ary bracket on all basis tuples of k_N[x], N even."""
    if n < 2 or n % 2:
        raise ValueError("N must be a positive even integer")
    if n > max_n:
        raise ResourceLimitError(f"N={n} exceeds cap {max_n}")
    basis = kn_basis(n)
    failures = []
    checks = 0
    for args in combinations_with_replacement(range(n + 1), 2 * n - 1):
        checks += 1
        j = jacobiator(n - 1, n - 1, [basis[i] for i in args])
        if not j.is_zero():
            failures.append({"args": list(args), "jacobiator": str(j)})
    return CheckReport("jacobi-kN", checks, failures, {"N": n})


# -- sl(2) -------------------------------------------------------------------

SL2_REALISATION = {
    "e": Poly.const(1),
    "h": Poly((0, -2)),
    "f": Poly((0, 0, -1)),
}


def verify_sl2() -> CheckReport:
    """Chevalley relations for the vector fields ``e = D``, ``h = -2x D``, ``f = -x^2 D``."""
    r = SL2_REALISATION
    relations = [
        ("[h,e]=2e", ("h", "e"), r["e"] * 2),
        ("[h,f]=-2f", ("h", "f"), r["f"] * -2),
        ("[e,f]=h", ("e", "f"), r["h"]),
    ]
    rows = []
    failures = []
    for name, (a, b), expected in relations:
        w = wronskian([r[a], r[b]])
        commutator = compose(DiffOp.pure(r[a], 1), DiffOp.pure(r[b], 1)) - compose(
            DiffOp.pure(r[b], 1), DiffOp.pure(r[a], 1)
        )
        ok = w == expected and commutator == DiffOp.pure(expected, 1)
        rows.append(
            {"relation": name, "wronskian": str(w), "commutator": str(commutator), "equal": ok}
        )
        if not ok:
            failures.append(rows[-1])
    return CheckReport("sl2", len(relations), failures, {"relations": rows})


# -- Witt deformation ----------------------------------------------------------


def witt_exponent(n: int, i: int) -> Fraction:
    """Exponent of the generator ``a_i = x^(i + N/2)`` of the N-ary deformation."""
    return Fraction(i) + Fraction(n, 2)


def witt_bracket(n: int, indices: Sequence[int]) -> tuple[int, int]:
    """``[a_i1, ..., a_iN] = Omega * a_(i1 + ... + iN)``; returns ``(Omega, i1 + ... + iN)``."""
    if len(indices) != n:
        raise ValueError(f"need {n} indices, got {len(indices)}")
    w = vandermonde_closed_form([witt_exponent(n, i) for i in indices])
    target = sum(indices)
    if w.exponent != witt_exponent(n, target):
        raise InternalInconsistencyError(
            f"bracket exponent {w.exponent} != {witt_exponent(n, target)}"
        )
    if w.coeff.denominator != 1:
        raise InternalInconsistencyError(f"non-integral structure constant {w.coeff}")
    return int(w.coeff), target


def witt_table(n: int, lo: int = -5, hi: int = 5) -> StructureTable:
    """Witt structure constants over increasing index tuples from ``[lo, hi]``."""
    table = StructureTable("witt", n)
    for args in combinations(range(lo, hi + 1), n):
        omega, target = witt_bracket(n, args)
        table.entries[args] = (target, omega)
    return table


def verify_witt_bracket(n: int, indices: Sequence[int]) -> dict:
    """Closed form vs. direct monomial determinant for one Witt bracket."""
    omega, target = witt_bracket(n, indices)
    direct = wronskian_monomials_det([Monomial.power(witt_exponent(n, i)) for i in indices])
    expected = Monomial(omega, witt_exponent(n, target))
    ok = direct == expected and (omega == 0 or direct.exponent == witt_exponent(n, target))
    return {
        "N": n,
        "indices": list(indices),
        "omega": omega,
        "result_index": target,
        "direct": str(direct),
        "equal": ok,
    }


def verify_translation_invariance(n: int, indices: Sequence[int], shift: Scalar) -> dict:
    """The Vandermonde coefficient is unchanged when every index is shifted."""
    if len(indices) != n:
        raise ValueError(f"need {n} indices, got {len(indices)}")
    shift = Fraction(shift)
    plain = vandermonde(indices)
    shifted = vandermonde([Fraction(i) + shift for i in indices])
    det_plain = wronskian_monomials_det([Monomial.power(i) for i in indices]).coeff
    det_shifted = wronskian_monomials_det([Monomial.power(Fraction(i) + shift) for i in indices]).coeff
    ok = plain == shifted == det_plain == det_shifted
    return {
        "N": n,
        "indices": list(indices),
        "shift": str(shift),
        "closed_form": str(plain),
        "closed_form_shifted": str(shifted),
        "determinant": str(det_plain),
        "determinant_shifted": str(det_shifted),
        "equal": ok,
    }


def verify_witt_jacobi(n: int, lo: int | None = None, hi: int | None = None) -> CheckReport:
    """N-ary Jacobiator on Witt generators ``x^(i + N/2)`` for distinct indices in ``[lo, hi]``.

    The window defaults to ``[-N, N]``.
    """
    lo = -n if lo is None else lo
    hi = n if hi is None else hi
    gens = {i: Monomial.power(witt_exponent(n, i)) for i in range(lo, hi + 1)}
    failures = []
    checks = 0
    for args in combinations(range(lo, hi + 1), 2 * n - 1):
        checks += 1
        j = monomial_jacobiator(n - 1, n - 1, [gens[i] for i in args])
        if not j.is_zero():
            failures.append({"args": list(args), "jacobiator": str(j)})
    return CheckReport("witt-jacobi", checks, failures, {"N": n, "range": [lo, hi]})


def verify_witt(
    n_values: Sequence[int] = (2, 3, 4, 5),
    samples: int = 100,
    seed: int = 0,
    index_range: tuple[int, int] = (-5, 5),
) -> CheckReport:
    """Witt relations at N=2 plus randomized closure and translation-invariance checks."""
    lo, hi = index_range
    rng = random.Random(seed)
    failures = []
    checks = 0
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            checks += 1
            if witt_bracket(2, (i, j)) != (j - i, i + j):
                failures.append({"N": 2, "indices": [i, j], "got": list(witt_bracket(2, (i, j)))})
    for n in n_values:
        for _ in range(samples):
            idx = [rng.randint(lo, hi) for _ in range(n)]
            shift = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
            checks += 2
            row = verify_witt_bracket(n, idx)
            if not row["equal"]:
                failures.append(row)
            row = verify_translation_invariance(n, idx, shift)
            if not row["equal"]:
                failures.append(row)
    return CheckReport(
        "witt",
        checks,
        failures,
        {"N": list(n_values), "samples": samples, "seed": seed, "range": [lo, hi]},
    )


def witt_antisymmetric(n: int, indices: Sequence[int]) -> bool:
    """Omega transforms by the sign of any reordering of its arguments."""
    omega, _ = witt_bracket(n, indices)
    ordered = sorted(indices)
    if len(set(indices)) < n:
        return omega == 0
    base, _ = witt_bracket(n, ordered)
    # indices are distinct, so the sign of the reordering is well defined
    return omega == permutation_sign(list(indices)) * base
