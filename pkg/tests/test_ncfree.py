import json
import math
from itertools import permutations

import pytest

from wronskian_brackets.errors import ResourceLimitError
from wronskian_brackets.ncfree import (
    NCPoly,
    alt_composition,
    generators,
    nested_alt,
    nested_alt_full,
    table6_case,
    unshuffle_normalization,
    verify_table6,
)

a1, a2, a3, a4 = generators(4)


def sign_by_cycles(perm) -> int:
    """Permutation sign from the cycle decomposition (independent of inversion counting)."""
    seen = set()
    sign = 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def test_commutator():
    assert alt_composition([a1, a2]) == a1 * a2 - a2 * a1


def test_repeated_argument_vanishes():
    assert alt_composition([a1, a1, a2]).is_zero()


def test_three_generators_against_explicit_s3():
    expected = NCPoly(
        {
            (1, 2, 3): 1,
            (1, 3, 2): -1,
            (2, 1, 3): -1,
            (2, 3, 1): 1,
            (3, 1, 2): 1,
            (3, 2, 1): -1,
        }
    )
    assert alt_composition([a1, a2, a3]) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_term_count_and_signs(n):
    alt = alt_composition(generators(n))
    assert len(alt) == math.factorial(n)
    for word, c in alt:
        perm = [i - 1 for i in word]
        assert c == sign_by_cycles(perm)


@pytest.mark.parametrize("n", range(2, 7))
def test_transposition_negates(n):
    gens = generators(n)
    base = alt_composition(gens)
    for i in range(n):
        for j in range(i + 1, n):
            swapped = list(gens)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            assert alt_composition(swapped) == -base


def test_multilinear_in_first_slot():
    x = a1 * 2 + a4 * a2
    lhs = alt_composition([x, a3])
    rhs = alt_composition([a1, a3]) * 2 + alt_composition([a4 * a2, a3])
    assert lhs == rhs


@pytest.mark.parametrize("k, l", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (1, 3)])
def test_full_group_sum_is_normalized_unshuffle_sum(k, l):
    full = nested_alt_full(k, l)
    assert full == nested_alt(k, l) * unshuffle_normalization(k, l)


def test_nested_examples():
    assert nested_alt(2, 2).is_zero()
    assert nested_alt(4, 2).is_zero()
    assert nested_alt(2, 3) == alt_composition(generators(4)) * 2


def test_jacobi_by_hand():
    # alt_2[alt_2] on three letters is the classical Jacobiator of commutators
    def br(x, y):
        return x * y - y * x

    jac = br(br(a1, a2), a3) - br(br(a1, a3), a2) + br(br(a2, a3), a1)
    assert jac.is_zero()
    assert nested_alt(2, 2) == jac


@pytest.mark.parametrize(
    "k, l, case, coeff", [(2, 2, "6a", 0), (3, 2, "6b", 1), (3, 3, "6c", 3), (2, 3, "6c", 2)]
)
def test_nested_table_examples(k, l, case, coeff):
    report = verify_table6(k, l)
    entry = next(e for e in report.entries if (e.k, e.l) == (k, l))
    assert entry.case == case
    assert entry.expected == coeff
    assert entry.equal_up_to_sign
    assert entry.ratio == coeff
    assert entry.sign == 1


def test_nested_table_classification():
    assert table6_case(4, 2) == ("6a", 0)
    assert table6_case(5, 4) == ("6b", 1)
    assert table6_case(4, 5) == ("6c", 4)


def test_nested_table_report_schema():
    data = verify_table6(3, 3).to_dict()
    entry = data["entries"][0]
    assert set(entry) >= {
        "k", "ℓ", "case", "lhs_terms", "rhs_terms", "equal", "equal_up_to_sign", "sign"
    }
    json.dumps(data)


def test_nested_table_cap():
    with pytest.raises(ResourceLimitError):
        verify_table6(5, 5)
    with pytest.raises(ResourceLimitError):
        verify_table6(3, 3, max_args=4)


def test_ratio_to():
    base = alt_composition([a1, a2])
    assert (base * -3).ratio_to(base) == -3
    assert (base + a1).ratio_to(base) is None
    assert NCPoly().ratio_to(base) == 0


def test_render():
    assert str(alt_composition([a1, a2])) == "a1*a2 - a2*a1"
    assert str(NCPoly()) == "0"


def test_word_sum_over_permutations_matches_module():
    # direct oracle: sum over itertools.permutations with cycle-based signs
    gens = generators(4)
    acc = NCPoly()
    for perm in permutations(range(4)):
        prod = NCPoly.one()
        for i in perm:
            prod = prod * gens[i]
        acc = acc + prod * sign_by_cycles(perm)
    assert acc == alt_composition(gens)
