"""Behaviour of the Wronskian under a polynomial change of coordinate ``y = y(x)``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .exact import Poly, parse_poly
from .wronskian import CheckReport, wronskian


@dataclass(frozen=True)
class CoordinateChange:
    y_of_x: Poly

    def __post_init__(self):
        if self.y_of_x.is_zero() or self.y_of_x.degree < 1:
            raise ValueError("coordinate change must have degree >= 1")

    @property
    def jacobian(self) -> Poly:
        """``dy/dx``."""
        return self.y_of_x.derivative()

    def pullback(self, phi: Poly) -> Poly:
        """``phi(y(x))``."""
        return phi.compose(self.y_of_x)


def conformal_weight(n: int) -> int:
    """Power of ``dy/dx`` picked up by the Wronskian of ``n`` weight-0 fields."""
    if n < 1:
        raise ValueError("N must be positive")
    return n * (n - 1) // 2


@dataclass
class ConformalReport:
    phis: list[Poly]
    change: CoordinateChange
    weight: int
    lhs: Poly
    rhs: Poly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "N": len(self.phis),
            "phis": [p.render("y") for p in self.phis],
            "change": str(self.change.y_of_x),
            "weight": self.weight,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
        }


def verify_conformal_law(
    phis: Sequence[Poly], change: CoordinateChange | Poly, weight: int | None = None
) -> ConformalReport:
    """Compare ``W_x(phi_i(y(x)))`` with ``(y')^weight * W_y(phi_i)(y(x))``.

    ``weight`` defaults to :func:`conformal_weight`; passing another value
    lets callers confirm that no other exponent works.
    """
    if isinstance(change, Poly):
        change = CoordinateChange(change)
    phis = list(phis)
    if weight is None:
        weight = conformal_weight(len(phis))
    lhs = wronskian([change.pullback(phi) for phi in phis])
    rhs = change.jacobian**weight * change.pullback(wronskian(phis))
    return ConformalReport(phis, change, weight, lhs, rhs)


DEFAULT_CHANGES = ("x + x^2", "x^2", "2*x + 1", "x^3 + x")


def verify_conformal_grid(
    n_values: Sequence[int] = (2, 3, 4),
    max_exponent: int = 4,
    changes: Sequence[Poly] | None = None,
) -> CheckReport:
    """Exhaustive sweep over monomial tuples ``y^a`` and a fixed list of changes."""
    if changes is None:
        changes = [parse_poly(c) for c in DEFAULT_CHANGES]
    failures = []
    checks = 0
    for change in changes:
        cc = CoordinateChange(change)
        for n in n_values:
            for exps in product(range(max_exponent + 1), repeat=n):
                checks += 1
                report = verify_conformal_law([Poly.monomial(1, a) for a in exps], cc)
                if not report.equal:
                    failures.append(report.to_dict())
    return CheckReport(
        "conformal",
        checks,
        failures,
        {
            "N": list(n_values),
            "max_exponent": max_exponent,
            "changes": [str(c) for c in changes],
        },
    )
