"""Differential operators ``sum_j c_j(x) D^j`` with polynomial coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .combinat import signed_permutations
from .errors import ResourceLimitError
from .exact import Poly
from .wronskian import wronskian

MAX_ALT_ARITY = 8


class DiffOp:
    """Immutable operator stored as ``{order: coefficient}`` with nonzero coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Poly] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Poly] = {}
        for j, c in items:
            if j < 0:
                raise ValueError("negative derivative order")
            c = c if isinstance(c, Poly) else Poly.const(c)
            acc[j] = acc[j] + c if j in acc else c
        self._coeffs = {j: acc[j] for j in sorted(acc) if not acc[j].is_zero()}

    @classmethod
    def pure(cls, w: Poly, p: int) -> DiffOp:
        """``w(x) * D^p``."""
        return cls({p: w})

    @classmethod
    def identity(cls) -> DiffOp:
        return cls({0: Poly.const(1)})

    @property
    def coeffs(self) -> dict[int, Poly]:
        return dict(self._coeffs)

    def coefficient(self, j: int) -> Poly:
        return self._coeffs.get(j, Poly())

    @property
    def order(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_pure(self, p: int) -> bool:
        return all(j == p for j in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: DiffOp) -> DiffOp:
        return DiffOp(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> DiffOp:
        return DiffOp({j: -c for j, c in self._coeffs.items()})

    def __sub__(self, other: DiffOp) -> DiffOp:
        return self + (-other)

    def scale(self, s) -> DiffOp:
        return DiffOp({j: c * s for j, c in self._coeffs.items()})

    def __matmul__(self, other: DiffOp) -> DiffOp:
        return compose(self, other)

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)

    def __repr__(self):
        return f"DiffOp({str(self)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for j in sorted(self._coeffs, reverse=True):
            c = self._coeffs[j]
            d = "" if j == 0 else ("D" if j == 1 else f"D^{j}")
            text = str(c)
            if not d:
                parts.append(text)
            elif c == 1:
                parts.append(d)
            elif c == -1:
                parts.append(f"-{d}")
            elif len([x for x in c.coeffs if x != 0]) > 1:
                parts.append(f"({text})*{d}")
            else:
                parts.append(f"{text}*{d}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """``a o b`` by the Leibniz rule.

    ``(u D^p) o (v D^q) = sum_{s=0}^{p} C(p, s) u v^(s) D^(p+q-s)``.
    """
    acc: dict[int, Poly] = {}
    for p, u in a._coeffs.items():
        for q, v in b._coeffs.items():
            for s in range(p + 1):
                dv = v.derivative(s)
                if dv.is_zero():
                    break
                term = u * dv * math.comb(p, s)
                order = p + q - s
                acc[order] = acc[order] + term if order in acc else term
    return DiffOp(acc)


def apply(op: DiffOp, f: Poly) -> Poly:
    """``sum_j c_j(x) f^(j)(x)``."""
    out = Poly()
    for j, c in op._coeffs.items():
        out = out + c * f.derivative(j)
    return out


def alt_compose_ops(ops: Sequence[DiffOp], max_arity: int = MAX_ALT_ARITY) -> DiffOp:
    """Signed sum of all ``n!`` ordered compositions, enumerated explicitly."""
    n = len(ops)
    if n < 1:
        raise ValueError("need at least one operator")
    if n > max_arity:
        raise ResourceLimitError(f"{n}! compositions exceeds arity cap {max_arity}")
    acc: dict[int, Poly] = {}
    for perm, sign in signed_permutations(n):
        prod = ops[perm[0]]
        for i in perm[1:]:
            prod = compose(prod, ops[i])
        for j, c in prod._coeffs.items():
            c = c if sign > 0 else -c
            acc[j] = acc[j] + c if j in acc else c
    return DiffOp(acc)


@dataclass
class PureOrderReport:
    p: int
    ws: list[Poly]
    lhs: DiffOp
    rhs: DiffOp

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    passed = equal

    @property
    def closed(self) -> bool:
        """The alternated composition is again of pure order ``p``."""
        return self.lhs.is_pure(self.p)

    @property
    def ratio(self) -> Fraction | None:
        """Scalar ``c`` with ``lhs == c * rhs``, or ``None`` if not proportional."""
        w = self.rhs.coefficient(self.p)
        if not self.closed:
            return None
        l = self.lhs.coefficient(self.p)
        if w.is_zero():
            return Fraction(0) if l.is_zero() else None
        q, r = divmod(l, w)
        if not r.is_zero() or q.degree > 0:
            return None
        return q[0]

    def to_dict(self) -> dict:
        ratio = self.ratio
        return {
            "p": self.p,
            "N": 2 * self.p,
            "ws": [str(w) for w in self.ws],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
            "closed": self.closed,
            "ratio": None if ratio is None else str(ratio),
        }


def verify_theorem1(p: int, ws: Sequence[Poly], max_arity: int = MAX_ALT_ARITY) -> PureOrderReport:
    """Compare the alternated composition of ``w_j D^p`` with ``W(w_1..w_2p) D^p``."""
    if p < 1:
        raise ValueError("p must be positive")
    ws = list(ws)
    if len(ws) != 2 * p:
        raise ValueError(f"need {2 * p} coefficients for p={p}, got {len(ws)}")
    if any(w.is_zero() for w in ws):
        raise ValueError("coefficients must be nonzero")
    lhs = alt_compose_ops([DiffOp.pure(w, p) for w in ws], max_arity)
    rhs = DiffOp.pure(wronskian(ws), p)
    return PureOrderReport(p, ws, lhs, rhs)
