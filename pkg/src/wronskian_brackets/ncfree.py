"""Free associative algebra over the integers and the alternated product.

Elements are integer combinations of words in generators ``a_1, a_2, ...``;
a word is a tuple of 1-based generator indices.  ``alt(a_1, ..., a_n)`` is the
signed sum of the ``n!`` ordered products, and :func:`nested_alt` inserts one
alternated product into the first slot of another, summed over unshuffles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .combinat import enumerate_unshuffles, signed_permutations
from .errors import ResourceLimitError

Word = tuple[int, ...]

DEFAULT_MAX_ARGS = 8


class NCPoly:
    """Finite sum ``sum c_w * w`` of words with nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in sorted(acc.items()) if c != 0}

    @classmethod
    def generator(cls, i: int) -> NCPoly:
        return cls({(i,): 1})

    @classmethod
    def one(cls) -> NCPoly:
        return cls({(): 1})

    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: NCPoly) -> NCPoly:
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return NCPoly(acc)

    def __neg__(self) -> NCPoly:
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NCPoly({w: c * other for w, c in self._terms.items()})
        if not isinstance(other, NCPoly):
            return NotImplemented
        acc: dict[Word, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        return NCPoly(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def ratio_to(self, other: NCPoly) -> Fraction | None:
        """The scalar ``c`` with ``self == c * other``, or ``None`` if there is none."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        if self.is_zero():
            return Fraction(0)
        if self._terms.keys() != other._terms.keys():
            return None
        w0 = next(iter(other._terms))
        c = Fraction(self._terms[w0], other._terms[w0])
        for w, oc in other._terms.items():
            if self._terms[w] != c * oc:
                return None
        return c

    def __repr__(self):
        return f"NCPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self._terms.items():
            word = "*".join(f"a{i}" for i in w) or "1"
            mag = abs(c)
            body = word if mag == 1 else f"{mag}*{word}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


def generators(n: int) -> list[NCPoly]:
    return [NCPoly.generator(i) for i in range(1, n + 1)]


def _product(factors: Sequence[NCPoly]) -> NCPoly:
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc


def alt_composition(args: Sequence[NCPoly]) -> NCPoly:
    """Signed sum over all orderings of the product of ``args``."""
    n = len(args)
    if n < 1:
        raise ValueError("alt_composition needs at least one argument")
    acc: dict[Word, int] = {}
    for perm, sign in signed_permutations(n):
        for w, c in _product([args[i] for i in perm]):
            acc[w] = acc.get(w, 0) + sign * c
    return NCPoly(acc)


def nested_alt(k: int, l: int) -> NCPoly:
    """``alt_k[alt_l]`` evaluated on the distinct generators ``a_1 .. a_{k+l-1}``.

    Sum over (l, k-1)-unshuffles ``t`` of
    ``sign(t) * alt_k(alt_l(a_t(1..l)), a_t(l+1..k+l-1))``.
    """
    if k < 1 or l < 1:
        raise ValueError("arities must be positive")
    gens = generators(k + l - 1)
    acc = NCPoly()
    for u in enumerate_unshuffles(l, k - 1):
        inner = alt_composition([gens[i - 1] for i in u.first_block])
        outer = alt_composition([inner] + [gens[i - 1] for i in u.second_block])
        acc = acc + outer * u.sign
    return acc


def nested_alt_full(k: int, l: int) -> NCPoly:
    """Same insertion summed over the whole symmetric group (no unshuffle reduction)."""
    n = k + l - 1
    gens = generators(n)
    acc = NCPoly()
    for perm, sign in signed_permutations(n):
        args = [gens[i] for i in perm]
        inner = alt_composition(args[:l])
        acc = acc + alt_composition([inner] + args[l:]) * sign
    return acc


def table6_case(k: int, l: int) -> tuple[str, int]:
    """Which identity governs ``alt_k[alt_l]`` and its predicted coefficient of ``alt_{k+l-1}``."""
    if l % 2 == 1:
        return "6c", k
    if k % 2 == 0:
        return "6a", 0
    return "6b", 1


@dataclass
class Table6Entry:
    k: int
    l: int
    case: str
    expected: int
    ratio: Fraction | None
    lhs_terms: int
    rhs_terms: int
    difference: NCPoly = field(default_factory=NCPoly, repr=False)

    @property
    def equal(self) -> bool:
        return self.ratio is not None and self.ratio == self.expected

    @property
    def equal_up_to_sign(self) -> bool:
        return self.ratio is not None and abs(self.ratio) == abs(self.expected)

    @property
    def sign(self) -> int | None:
        """Measured sign relative to the predicted coefficient (``None`` if not proportional)."""
        if not self.equal_up_to_sign:
            return None
        if self.expected == 0:
            return 1
        return 1 if self.ratio == self.expected else -1

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "ℓ": self.l,
            "case": self.case,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "equal": self.equal,
            "equal_up_to_sign": self.equal_up_to_sign,
            "sign": self.sign,
            "expected_coefficient": self.expected,
            "measured_coefficient": None if self.ratio is None else str(self.ratio),
        }
        if not self.equal_up_to_sign:
            out["difference"] = str(self.difference)
        return out


@dataclass
class Table6Report:
    entries: list[Table6Entry]

    @property
    def failures(self) -> list[Table6Entry]:
        return [e for e in self.entries if not e.equal_up_to_sign]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": len(self.entries),
            "entries": [e.to_dict() for e in self.entries],
            "failures": [e.to_dict() for e in self.failures],
        }


def check_table6_pair(k: int, l: int) -> Table6Entry:
    case, expected = table6_case(k, l)
    n = k + l - 1
    lhs = nested_alt(k, l)
    base = alt_composition(generators(n))
    rhs = base * expected
    ratio = lhs.ratio_to(base)
    return Table6Entry(
        k=k,
        l=l,
        case=case,
        expected=expected,
        ratio=ratio,
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        difference=lhs - rhs,
    )


def verify_table6(k_max: int, l_max: int, max_args: int = DEFAULT_MAX_ARGS) -> Table6Report:
    """Check every outer arity ``k <= k_max`` against every inner arity ``l <= l_max``.

    Raises :class:`ResourceLimitError` when some pair would need more than
    ``max_args`` generators, since the work grows like ``(k + l - 1)!``.
    """
    if k_max < 1 or l_max < 1:
        raise ValueError("arity bounds must be positive")
    if k_max + l_max - 1 > max_args:
        raise ResourceLimitError(
            f"alt_{k_max}[alt_{l_max}] needs {k_max + l_max - 1} arguments (cap {max_args})"
        )
    entries = [
        check_table6_pair(k, l)
        for k in range(1, k_max + 1)
        for l in range(1, l_max + 1)
    ]
    return Table6Report(entries)


def unshuffle_normalization(k: int, l: int) -> int:
    """Ratio between the full-group insertion sum and the unshuffle sum."""
    return math.factorial(k - 1) * math.factorial(l)
