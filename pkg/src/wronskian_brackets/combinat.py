"""Signed permutations and unshuffles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations


def permutation_sign(seq) -> int:
    """Sign of ``seq`` viewed as a permutation of its sorted values."""
    inversions = 0
    n = len(seq)
    for i in range(n):
        si = seq[i]
        for j in range(i + 1, n):
            if seq[j] < si:
                inversions += 1
    return -1 if inversions & 1 else 1


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All ``(perm, sign)`` of ``range(n)`` in lexicographic order."""
    return tuple((p, permutation_sign(p)) for p in permutations(range(n)))


@dataclass(frozen=True)
class Unshuffle:
    """An (l, r)-unshuffle of 1..l+r given by its two increasing blocks."""

    first_block: tuple[int, ...]
    second_block: tuple[int, ...]
    sign: int

    @property
    def sequence(self) -> tuple[int, ...]:
        return self.first_block + self.second_block


@lru_cache(maxsize=None)
def _unshuffles(l: int, r: int) -> tuple[Unshuffle, ...]:
    universe = range(1, l + r + 1)
    out = []
    for first in combinations(universe, l):
        chosen = set(first)
        second = tuple(i for i in universe if i not in chosen)
        out.append(Unshuffle(first, second, permutation_sign(first + second)))
    return tuple(out)


def enumerate_unshuffles(l: int, r: int) -> tuple[Unshuffle, ...]:
    """All (l, r)-unshuffles of ``{1, ..., l + r}``, lexicographic in the first block.

    >>> [(u.first_block, u.sign) for u in enumerate_unshuffles(2, 1)]
    [((1, 2), 1), ((1, 3), -1), ((2, 3), 1)]
    """
    if l < 0 or r < 0:
        raise ValueError("unshuffle block sizes must be nonnegative")
    return _unshuffles(l, r)
