"""Exact scalars, dense univariate polynomials and rational-exponent monomials.

Scalars are :class:`fractions.Fraction`; nothing in the package ever rounds.

Text grammar (shared by :func:`parse_poly`, :func:`parse_monomial` and the
``str`` of both types)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*       # '/' only by a constant
    factor   := NUMBER | VAR ['^' exponent]
    exponent := INT | '(' ['-'] INT ['/' INT] ')'

Rendering is in descending degree, e.g. ``3/2*x^2 - x + 1``, ``x^3/6`` and
``5*x^(7/2)``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import ParseError

Rational = Fraction
Scalar = Union[int, Fraction]

# Degree of the zero polynomial.
NEG_INF = float("-inf")


class Poly:
    """Polynomial in one variable with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative exponent in Poly")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def basis(cls, k: int) -> Poly:
        """The divided-power basis element x^k/k!."""
        return cls.monomial(Fraction(1, math.factorial(k)), k)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.const(other)._coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self._coeffs))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        return self.render()

    def render(self, var: str = "x") -> str:
        terms = [(c, k) for k, c in enumerate(self._coeffs) if c != 0]
        return _join_terms(reversed(terms), var)

    @staticmethod
    def _lift(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = Poly._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, Poly):
            return self.divexact(other)
        return NotImplemented

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        d = len(other._coeffs) - 1
        lead = other._coeffs[-1]
        if len(rem) - 1 < d:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - d] = q
            for i, oc in enumerate(other._coeffs):
                rem[k - d + i] -= q * oc
        return Poly(quot), Poly(rem[:d])

    def divexact(self, other: Poly) -> Poly:
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self, j: int = 1) -> Poly:
        if j < 0:
            raise ValueError("derivative order must be nonnegative")
        if j == 0:
            return self
        cs = self._coeffs
        return Poly(
            cs[k] * math.perm(k, j) for k in range(j, len(cs))
        )

    def __call__(self, value):
        """Evaluate at a scalar, or compose when given a :class:`Poly`."""
        if isinstance(value, Poly):
            return self.compose(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(x))`` by Horner's scheme."""
        acc = Poly()
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc


def poly_derivative(p: Poly, j: int) -> Poly:
    return p.derivative(j)


def poly_compose(p: Poly, q: Poly) -> Poly:
    return p.compose(q)


class Monomial:
    """A single term ``coeff * x**exponent`` with a rational exponent.

    All zero monomials compare equal whatever their exponent, but the exponent
    is kept as given so degree bookkeeping can still be inspected.
    """

    __slots__ = ("coeff", "exponent")

    def __init__(self, coeff: Scalar, exponent: Scalar):
        object.__setattr__(self, "coeff", Fraction(coeff))
        object.__setattr__(self, "exponent", Fraction(exponent))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def power(cls, exponent: Scalar) -> Monomial:
        return cls(1, exponent)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.coeff == 0 or other.coeff == 0:
            return self.coeff == other.coeff
        return self.coeff == other.coeff and self.exponent == other.exponent

    def __hash__(self):
        if self.coeff == 0:
            return hash(("Monomial", 0))
        return hash(("Monomial", self.coeff, self.exponent))

    def __repr__(self):
        return f"Monomial({self.coeff!s}, {self.exponent!s})"

    def __str__(self):
        return self.render()

    def render(self, var: str = "x") -> str:
        if self.coeff == 0:
            return "0"
        return _join_terms([(self.coeff, self.exponent)], var)

    def __neg__(self):
        return Monomial(-self.coeff, self.exponent)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial(self.coeff * other.coeff, self.exponent + other.exponent)
        if isinstance(other, (int, Fraction)):
            return Monomial(self.coeff * other, self.exponent)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.coeff == 0:
            return self
        if self.coeff == 0:
            return other
        if self.exponent != other.exponent:
            raise ArithmeticError(
                f"sum of monomials with exponents {self.exponent} and {other.exponent}"
            )
        return Monomial(self.coeff + other.coeff, self.exponent)

    def __sub__(self, other):
        return self + (-other)

    def derivative(self, j: int = 1) -> Monomial:
        if j < 0:
            raise ValueError("derivative order must be nonnegative")
        c = self.coeff
        for i in range(j):
            c *= self.exponent - i
        return Monomial(c, self.exponent - j)

    def to_poly(self) -> Poly:
        if self.coeff == 0:
            return Poly()
        if self.exponent.denominator != 1 or self.exponent < 0:
            raise ValueError(f"{self} is not a polynomial")
        return Poly.monomial(self.coeff, int(self.exponent))


def monomial_derivative(m: Monomial, j: int) -> Monomial:
    return m.derivative(j)


# -- rendering -------------------------------------------------------------


def _render_exponent(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return "" if e == 1 else f"^{e.numerator}"
    return f"^({e})"


def _render_term(a: Fraction, e: Fraction, var: str) -> str:
    """Render ``a * var**e`` for ``a > 0``."""
    if e == 0:
        return str(a)
    v = var + _render_exponent(e)
    if a == 1:
        return v
    if a.numerator == 1:
        return f"{v}/{a.denominator}"
    return f"{a}*{v}"


def _join_terms(terms, var: str) -> str:
    out = []
    for c, e in terms:
        body = _render_term(abs(c), Fraction(e), var)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) if out else "0"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect_op(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}", tok)

    def expression(self) -> list[tuple[Fraction, Fraction, int]]:
        terms = []
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        while True:
            start = self.peek()[2]
            c, e = self.term()
            terms.append((sign * c, e, start))
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                continue
            if tok[0] != "end":
                self.fail("unexpected token")
            return terms

    def term(self) -> tuple[Fraction, Fraction]:
        coeff, exp = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                c, e = self.factor()
                coeff, exp = coeff * c, exp + e
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                divisor_tok = self.peek()
                c, e = self.factor()
                if e != 0:
                    self.fail("division by a non-constant", divisor_tok)
                if c == 0:
                    self.fail("division by zero", divisor_tok)
                coeff = coeff / c
            else:
                return coeff, exp

    def factor(self) -> tuple[Fraction, Fraction]:
        tok = self.take()
        if tok[0] == "num":
            return Fraction(tok[1]), Fraction(0)
        if tok[0] == "name":
            if tok[1] != self.var:
                self.fail(f"unknown variable {tok[1]!r} (expected {self.var!r})", tok)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.take()
                return Fraction(1), self.exponent()
            return Fraction(1), Fraction(1)
        self.fail("expected a number or variable", tok)

    def exponent(self) -> Fraction:
        tok = self.take()
        if tok[0] == "num":
            return Fraction(tok[1])
        if tok[0] == "op" and tok[1] == "(":
            sign = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "-":
                self.take()
                sign = -1
            num = self.take()
            if num[0] != "num":
                self.fail("expected an integer exponent", num)
            value = Fraction(num[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num" or den[1] == 0:
                    self.fail("expected a nonzero integer denominator", den)
                value /= den[1]
            self.expect_op(")")
            return sign * value
        self.fail("expected an exponent", tok)


def _parse_terms(text: str, var: str):
    if not text.strip():
        raise ParseError("empty expression", text, 0)
    return _Parser(text, var).expression()


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse the text grammar into a :class:`Poly`.

    >>> str(parse_poly("x^3/6 - 3/2*x + 1"))
    'x^3/6 - 3/2*x + 1'
    """
    acc: dict[int, Fraction] = {}
    for c, e, start in _parse_terms(text, var):
        if e.denominator != 1 or e < 0:
            raise ParseError(f"exponent {e} is not a nonnegative integer", text, start)
        acc[int(e)] = acc.get(int(e), Fraction(0)) + c
    if not acc:
        return Poly()
    out = [Fraction(0)] * (max(acc) + 1)
    for k, c in acc.items():
        out[k] = c
    return Poly(out)


def parse_monomial(text: str, var: str = "x") -> Monomial:
    """Parse a single term such as ``5*x^(7/2)`` or ``-x^(-1/2)/2``."""
    terms = _parse_terms(text, var)
    if len(terms) != 1:
        raise ParseError("expected a single term", text, terms[1][2])
    c, e, _ = terms[0]
    return Monomial(c, e)


def parse_poly_list(text: str, var: str = "x") -> list[Poly]:
    """Parse a comma-separated list of polynomials; positions refer to ``text``."""
    polys = []
    offset = 0
    for chunk in text.split(","):
        try:
            polys.append(parse_poly(chunk, var))
        except ParseError as exc:
            raise ParseError(str(exc).split(" at position")[0], text, offset + exc.position) from None
        offset += len(chunk) + 1
    return polys
