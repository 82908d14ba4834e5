from itertools import combinations, permutations, product
from math import gcd

import pytest

from ratelem.cyclo import RootExp, all_roots, primitive_roots, totient, trivial
from ratelem.lambdas import (
    MAX_SUBSET_BITS,
    delta_brute,
    delta_closed,
    identity_suite,
    inverse_pairs,
    lambda3_star,
    lambda_all_brute,
    lambda_brute,
    lambda_closed,
    subset_sum_levels,
    subset_sum_table,
)

ODD = range(3, 46, 2)


def punctured(m):
    return all_roots(m) - trivial(m)


def combos_oracle(m, i):
    prim = [e for e in range(1, m) if gcd(e, m) == 1]
    return {sum(c) % m for c in combinations(prim, i)}


def test_lambda_examples():
    assert lambda_brute(5, 2) == all_roots(5)
    assert lambda_brute(5, 3) == punctured(5)
    assert lambda_brute(9, 1) == primitive_roots(9)
    assert lambda_closed(15, 3) == punctured(15)
    assert lambda_closed(7, 4) == all_roots(7)
    assert lambda_closed(9, 6) == trivial(9)


def test_lambda_brute_against_combinations():
    for m in (3, 5, 7, 9, 11, 13, 15, 21):
        for i in range(1, totient(m) + 1):
            assert set(lambda_brute(m, i)) == combos_oracle(m, i)


def test_raw_walk_agrees_with_collapsed_walk():
    for m in ODD:
        values = sorted(primitive_roots(m))
        if len(values) > MAX_SUBSET_BITS:
            continue
        table = subset_sum_table(values, m)
        levels = subset_sum_levels(values, m)
        for size, bits in enumerate(levels):
            assert {e for e in range(m) if bits >> e & 1} == set(table[size].nonzero()[0].tolist())


def test_raw_walk_refuses_large_input():
    with pytest.raises(ValueError):
        subset_sum_table(list(range(MAX_SUBSET_BITS + 1)), 101)


def test_lambda_brute_equals_closed():
    for m in range(5, 46, 2):
        brute = lambda_all_brute(m)
        for i, s in brute.items():
            assert s == lambda_closed(m, i), (m, i)


def test_lambda_arity_errors():
    with pytest.raises(ValueError):
        lambda_brute(5, 0)
    with pytest.raises(ValueError):
        lambda_brute(5, 5)
    with pytest.raises(ValueError):
        lambda_closed(8, 2)


def test_lambda3_star():
    assert lambda3_star(5) == all_roots(5)
    assert lambda3_star(9) == all_roots(9)
    prim = [1, 2, 3, 4, 5, 6]
    assert {(a + b - c) % 7 for a, b, c in permutations(prim, 3)} == set(range(7))
    assert lambda3_star(7) == all_roots(7)
    for m in range(5, 46, 2):
        assert lambda3_star(m) == all_roots(m)


def test_inverse_pairs():
    as_ints = lambda m: [(a.exponent, b.exponent) for a, b in inverse_pairs(m)]
    assert as_ints(3) == [(1, 2)]
    assert as_ints(9) == [(1, 8), (2, 7), (4, 5)]
    assert as_ints(5) == [(1, 4), (2, 3)]
    assert all(isinstance(a, RootExp) for pair in inverse_pairs(7) for a in pair)


def delta_oracle(m):
    reps = [e for e in range(1, m) if gcd(e, m) == 1 and e < m - e]
    return {sum(s * e for s, e in zip(signs, reps)) % m for signs in product((1, -1), repeat=len(reps))}


def test_delta_examples():
    assert set(delta_brute(9)) == delta_oracle(9) == set(range(1, 9))
    assert delta_brute(15) == all_roots(15)
    assert set(delta_brute(3)) == {1, 2}
    assert delta_closed(45) == all_roots(45)
    assert delta_closed(5) == punctured(5)
    assert delta_closed(25) == all_roots(25)
    # witness from the m=15 argument: zeta, zeta^2, zeta^4, zeta^8 multiply to 1
    assert (1 + 2 + 4 + 8) % 15 == 0


def test_delta_brute_equals_closed():
    for m in ODD:
        assert delta_brute(m) == delta_closed(m), m
        if m <= 31:
            assert set(delta_brute(m)) == delta_oracle(m)


def test_delta_containments():
    for m in ODD:
        d = delta_brute(m)
        assert primitive_roots(m) <= d
        assert punctured(m) <= d
        assert (0 in d) == (m not in (3, 5, 9))


def test_lambda3_contained_in_higher_arities():
    for m in ODD:
        k = totient(m)
        if k <= 6:
            continue
        for i in range(4, k - 2):
            assert lambda_brute(m, 3) <= lambda_brute(m, i)


def test_lambda3_contains_one_outside_exceptions():
    for m in range(5, 46, 2):
        assert (0 in lambda_brute(m, 3)) == (m not in (3, 5, 9, 15))


def test_identity_suite_all_hold():
    results = identity_suite(45)
    assert len(results) == 13
    for name, per_m in results.items():
        assert all(v is not False for v in per_m.values()), name


def test_triple_identity_fails_on_excluded_moduli():
    from ratelem.lambdas import _triple_product_one

    # the hypothesis excludes these; the direct search confirms they really fail
    for m in (5, 9, 15):
        prim = [e for e in range(1, m) if gcd(e, m) == 1]
        found = any(
            (a + b + c) % m == 0 and len({a, m - a, b, m - b, c, m - c}) == 6
            for a, b, c in combinations(prim, 3)
        )
        assert not found
    assert _triple_product_one(7, 7) is True


def test_identity_suite_rejects_even_bound():
    with pytest.raises(ValueError):
        identity_suite(4)
