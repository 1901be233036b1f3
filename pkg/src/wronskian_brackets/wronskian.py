"""Wronskian determinants of polynomials and of rational-exponent monomials.

Polynomial Wronskians go through fraction-free Bareiss elimination over
``Q[x]``; :func:`cofactor_det` is kept as an independent expansion used both
as a test oracle and as the kernel for monomial matrices, whose entries are
single terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, TypeVar

from .exact import Monomial, Poly, Scalar
from .errors import InternalInconsistencyError

T = TypeVar("T")


def bareiss_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by fraction-free elimination.

    Every division performed is exact in ``Q[x]``; a nonzero remainder would
    raise ``ArithmeticError`` from :meth:`Poly.divexact`.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return Poly.const(1)
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = num if k == 0 else num.divexact(prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_det(matrix: Sequence[Sequence[T]], zero: T) -> T:
    """Laplace expansion along successive rows, memoised on the remaining columns."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]):
        row = n - len(cols)
        if not cols:
            return None
        total = zero
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if _is_zero(entry):
                continue
            rest = minor(cols[:pos] + cols[pos + 1 :])
            term = entry if rest is None else entry * rest
            total = total + term if pos % 2 == 0 else total - term
        return total

    result = minor(tuple(range(n)))
    return _one_like(zero) if result is None else result


def _is_zero(value) -> bool:
    if isinstance(value, (Poly, Monomial)):
        return value.is_zero()
    return value == 0


def _one_like(zero):
    if isinstance(zero, Poly):
        return Poly.const(1)
    if isinstance(zero, Monomial):
        return Monomial(1, 0)
    return 1


def wronskian_matrix(fs: Sequence[Poly]) -> list[list[Poly]]:
    """Row ``i`` holds the ``i``-th derivatives of the arguments."""
    n = len(fs)
    rows = []
    current = list(fs)
    for _ in range(n):
        rows.append(current)
        current = [f.derivative() for f in current]
    return rows


@lru_cache(maxsize=65536)
def _wronskian_cached(fs: tuple[Poly, ...]) -> Poly:
    return bareiss_det(wronskian_matrix(fs))


def wronskian(fs: Sequence[Poly]) -> Poly:
    """``W^{0,1,...,N-1}(f_1, ..., f_N)``; the empty Wronskian is 1.

    >>> from .exact import parse_poly
    >>> str(wronskian([parse_poly("x"), parse_poly("x^2/2"), parse_poly("x^3/6")]))
    'x^3/6'
    """
    scale = Fraction(1)
    normed = []
    for f in fs:
        if f.is_zero():
            return Poly()
        c = f.leading()
        scale *= c
        normed.append(f if c == 1 else f * (1 / c))
    if len(set(normed)) < len(normed):
        return Poly()
    w = _wronskian_cached(tuple(normed))
    return w if scale == 1 else w * scale


def wronskian_cofactor(fs: Sequence[Poly]) -> Poly:
    return cofactor_det(wronskian_matrix(fs), Poly())


def wronskian_monomials_det(ms: Sequence[Monomial]) -> Monomial:
    """Wronskian of single terms, expanded directly over the monomial calculus."""
    n = len(ms)
    matrix = [[m.derivative(i) for m in ms] for i in range(n)]
    exponent = sum((m.exponent for m in ms), Fraction(0)) - Fraction(n * (n - 1), 2)
    det = cofactor_det(matrix, Monomial(0, exponent))
    return det


def vandermonde(nus: Sequence[Scalar]) -> Fraction:
    """``prod_{i<j} (nu_j - nu_i)``."""
    out = Fraction(1)
    for j in range(len(nus)):
        for i in range(j):
            out *= Fraction(nus[j]) - Fraction(nus[i])
    return out


def vandermonde_closed_form(nus: Sequence[Scalar]) -> Monomial:
    """Closed form of the Wronskian of ``x^nu_1, ..., x^nu_N``."""
    n = len(nus)
    exponent = sum((Fraction(v) for v in nus), Fraction(0)) - Fraction(n * (n - 1), 2)
    return Monomial(vandermonde(nus), exponent)


def kn_basis(n: int) -> list[Poly]:
    """``1, x, x^2/2!, ..., x^n/n!``."""
    return [Poly.basis(k) for k in range(n + 1)]


def basis_wronskian(n: int, k: int) -> Poly:
    """Wronskian of the divided-power basis of degree <= n with ``x^k/k!`` left out.

    The result is checked against ``x^(n-k)/(n-k)!`` and an
    :class:`InternalInconsistencyError` is raised on mismatch.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= N, got N={n}, k={k}")
    args = [b for j, b in enumerate(kn_basis(n)) if j != k]
    w = wronskian(args)
    if w != Poly.basis(n - k):
        raise InternalInconsistencyError(
            f"W(basis of degree {n} without x^{k}/{k}!) = {w}, expected {Poly.basis(n - k)}"
        )
    return w


@lru_cache(maxsize=None)
def wm_recurrence(m: int) -> Poly:
    """``W_m = W(x, x^2/2!, ..., x^m/m!)`` computed only through the recurrence.

    ``W_m = sum_{l=1}^{m-1} W_{m-l} (-1)^(l+1) x^l/l! - (-1)^m x^m/m!``
    with ``W_0 = 1`` as the empty Wronskian.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Poly.const(1)
    if m == 1:
        return Poly.x()
    acc = Poly.basis(m) * (-((-1) ** m))
    for l in range(1, m):
        acc = acc + wm_recurrence(m - l) * Poly.basis(l) * ((-1) ** (l + 1))
    return acc


def wm_direct(m: int) -> Poly:
    """``W_m`` as a determinant of the ``m x m`` matrix."""
    return wronskian([Poly.basis(j) for j in range(1, m + 1)])


@dataclass
class CheckReport:
    """Outcome of a batch of exact equality checks."""

    name: str
    checks: int
    failures: list[dict]
    details: dict

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            **self.details,
        }


def _truncate(p: Poly, degree: int) -> Poly:
    return Poly(p.coeffs[: degree + 1])


def exp_series(degree: int, scale: int = 1) -> Poly:
    """Truncated ``exp(scale * x)`` through ``x^degree``."""
    return Poly(Fraction(scale**m, math.factorial(m)) for m in range(degree + 1))


def verify_generating_function(m_max: int) -> CheckReport:
    """Check ``W_m = x^m/m!`` by recurrence and by determinant for ``1 <= m <= m_max``.

    Also checks the truncated series ``f = sum W_m`` against ``exp(x) - 1`` and
    the functional equation obtained by summing the recurrence over ``m``,
    ``f = f (1 - exp(-x)) - exp(-x) + 1``, whose solution is ``exp(x) - 1``.
    """
    if m_max < 1:
        raise ValueError("m_max must be positive")
    failures = []
    rows = []
    series = Poly()
    for m in range(1, m_max + 1):
        rec = wm_recurrence(m)
        direct = wm_direct(m)
        closed = Poly.basis(m)
        ok = rec == direct == closed
        rows.append({"m": m, "recurrence": str(rec), "direct": str(direct), "equal": ok})
        if not ok:
            failures.append(rows[-1])
        series = series + rec
    target = exp_series(m_max) - 1
    if series != target:
        failures.append({"series": str(series), "expected": str(target)})
    e_neg = exp_series(m_max, -1)
    rhs = _truncate(series * (1 - e_neg) - e_neg + 1, m_max)
    if series != rhs:
        failures.append({"functional_equation_rhs": str(rhs), "series": str(series)})
    return CheckReport(
        "eq12",
        checks=m_max + 2,
        failures=failures,
        details={"M": m_max, "rows": rows, "series": str(series)},
    )


def verify_factorization_eq10(n: int, k: int) -> CheckReport:
    """Factor the omit-``k`` basis Wronskian into a unit factor times ``W_{n-k}``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= N, got N={n}, k={k}")
    basis = kn_basis(n)
    full = wronskian([b for j, b in enumerate(basis) if j != k])
    first = wronskian(basis[:k])
    # rows k.. of the remaining columns are the k-th derivatives x, x^2/2!, ...
    tail = wronskian([Poly.basis(j) for j in range(1, n - k + 1)])
    failures = []
    if first != 1:
        failures.append({"first_factor": str(first)})
    if full != first * tail:
        failures.append({"full": str(full), "product": str(first * tail)})
    if tail != wm_recurrence(n - k):
        failures.append({"tail": str(tail), "W_m": str(wm_recurrence(n - k))})
    return CheckReport(
        "eq10",
        checks=3,
        failures=failures,
        details={
            "N": n,
            "k": k,
            "full": str(full),
            "first_factor": str(first),
            "second_factor": str(tail),
        },
    )


def is_monomial_basis_multiple(p: Poly) -> tuple[int, Fraction] | None:
    """If ``p = c * x^m/m!`` return ``(m, c)``; otherwise ``None``."""
    nz = [(k, c) for k, c in enumerate(p.coeffs) if c != 0]
    if len(nz) != 1:
        return None
    m, c = nz[0]
    return m, c * math.factorial(m)


def antisymmetry_sign_check(fn: Callable[[list], object], args: list, i: int, j: int) -> bool:
    """``fn`` changes sign when arguments ``i`` and ``j`` are swapped."""
    swapped = list(args)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    return fn(swapped) == -fn(args)
