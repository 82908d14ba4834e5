"""Product sets built from primitive roots: Lambda_i, Lambda*_3 and Delta.

Every set comes in two flavours.  The ``*_brute`` functions enumerate the
underlying choices exhaustively and are the ground truth; the ``*_closed``
functions return the closed-form answer.  Disagreement between them is a
finding to report, never something to smooth over.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import gcd

import numpy as np

from .cyclo import (
    RootExp,
    RootSet,
    _rotate,
    all_roots,
    primitive_roots,
    totient,
    trivial,
)

# Lambda_3 is R(m) \ {1} instead of R(m) for odd arity at these moduli.
LAMBDA_ODD_EXCEPTIONS = frozenset({5, 9, 15})
# Delta(m) misses 1 exactly here.
DELTA_EXCEPTIONS = frozenset({3, 5, 9})

# raw 2**k walk only; larger inputs go through subset_sum_levels
MAX_SUBSET_BITS = 26


def _check_odd(m: int, lower: int) -> None:
    if m % 2 == 0 or m < lower:
        raise ValueError(f"expected an odd modulus >= {lower}, got {m}")


def _mask_from_residues(m: int, residues: np.ndarray) -> RootSet:
    present = np.zeros(m, dtype=bool)
    present[residues] = True
    bits = 0
    for e in np.flatnonzero(present).tolist():
        bits |= 1 << e
    return RootSet.from_bits(m, bits)


def subset_sum_table(values: list[int], m: int) -> np.ndarray:
    """Walk every subset of ``values`` and record (size, sum mod m) pairs.

    Returns a boolean array ``t`` of shape ``(len(values) + 1, m)`` with
    ``t[k, s]`` true iff some ``k``-element subset of positions sums to ``s``.
    Subsets are generated by doubling: after step ``j`` the arrays hold the
    sums and sizes of all ``2**j`` subsets of the first ``j`` values.
    """
    k = len(values)
    if k > MAX_SUBSET_BITS:
        raise ValueError(f"{k} values means 2**{k} subsets; limit is 2**{MAX_SUBSET_BITS}")
    dtype = np.uint16 if m < 2**15 else np.int64
    sums = np.zeros(1, dtype=dtype)
    sizes = np.zeros(1, dtype=np.uint8)
    for v in values:
        v %= m
        sums = np.concatenate((sums, (sums + v) % m if v else sums))
        sizes = np.concatenate((sizes, sizes + 1))
    table = np.zeros((k + 1, m), dtype=bool)
    table[sizes, sums] = True
    return table


def subset_sum_levels(values: list[int], m: int) -> list[int]:
    """Same information as :func:`subset_sum_table`, without the ``2**k`` blow-up.

    The walk adds one value at a time and keeps, for each subset size, the
    bitmap of sums reached so far.  Subsets that land on the same (size, sum)
    state are merged, so the cost is ``O(k**2)`` bitmap rotations instead of
    ``2**k`` sums.  Returns ``levels`` with ``levels[size]`` a bitmap over
    ``R(m)``.
    """
    mask = (1 << m) - 1
    levels = [1] + [0] * len(values)
    for j, v in enumerate(values):
        v %= m
        for size in range(j, -1, -1):
            cur = levels[size]
            if cur:
                levels[size + 1] |= _rotate(cur, v, m, mask)
    return levels


@lru_cache(maxsize=None)
def _lambda_levels(m: int) -> tuple[int, ...]:
    return tuple(subset_sum_levels(sorted(primitive_roots(m)), m))


def lambda_brute(m: int, i: int) -> RootSet:
    """Products of ``i`` distinct primitive ``m``-th roots, by subset walk."""
    _check_odd(m, 3)
    k = totient(m)
    if not 1 <= i <= k:
        raise ValueError(f"arity {i} outside 1..{k} for m={m}")
    return RootSet.from_bits(m, _lambda_levels(m)[i])


def lambda_all_brute(m: int) -> dict[int, RootSet]:
    """``lambda_brute(m, i)`` for every arity at once (one walk)."""
    _check_odd(m, 3)
    levels = _lambda_levels(m)
    return {i: RootSet.from_bits(m, levels[i]) for i in range(1, totient(m) + 1)}


def lambda_closed(m: int, i: int) -> RootSet:
    """Closed form of ``Lambda_i(Phi(m))``.

    For ``m = 3`` there is no closed form to speak of and the brute-force
    answer is returned.
    """
    _check_odd(m, 3)
    k = totient(m)
    if not 1 <= i <= k:
        raise ValueError(f"arity {i} outside 1..{k} for m={m}")
    if m == 3:
        return lambda_brute(m, i)
    # boundary arities: single roots, complements of single roots, everything
    if i in (1, k - 1):
        return primitive_roots(m)
    if i == k:
        return trivial(m)
    if i % 2 == 1 and m in LAMBDA_ODD_EXCEPTIONS:
        return all_roots(m) - trivial(m)
    return all_roots(m)


def lambda3_star(m: int) -> RootSet:
    """``{a*b/c : a, b, c distinct in Phi(m)}`` over all ordered triples."""
    _check_odd(m, 5)
    prim = sorted(primitive_roots(m))
    return RootSet(m, (a + b - c for a, b, c in permutations(prim, 3)))


def inverse_pairs(m: int) -> list[tuple[RootExp, RootExp]]:
    """Split ``Phi(m)`` into pairs ``{x, x^-1}``, smallest exponent first."""
    _check_odd(m, 3)
    return [(RootExp(m, e), RootExp(m, m - e)) for e in sorted(primitive_roots(m)) if e < m - e]


def delta_brute(m: int) -> RootSet:
    """One root from each inverse pair, all ``2**(phi(m)/2)`` choices."""
    _check_odd(m, 3)
    sums = np.zeros(1, dtype=np.int64)
    for x, _ in inverse_pairs(m):
        e = x.exponent
        sums = np.concatenate(((sums + e) % m, (sums - e) % m))
    return _mask_from_residues(m, sums)


def delta_closed(m: int) -> RootSet:
    _check_odd(m, 3)
    if m in DELTA_EXCEPTIONS:
        return all_roots(m) - trivial(m)
    return all_roots(m)


# --- identity suite -----------------------------------------------------------------


def _punctured(m: int) -> RootSet:
    return all_roots(m) - trivial(m)


def _phi_squared(m: int, max_m: int) -> bool:
    return primitive_roots(m) * primitive_roots(m) == all_roots(m)


def _punctured_product(m: int, max_m: int) -> bool:
    for m2 in range(3, max_m + 1, 2):
        if gcd(m, m2) > 1:
            prod = _punctured(m) * _punctured(m2)
            if prod != all_roots(prod.modulus):
                return False
    return True


def _shift_into_phi(m: int, max_m: int) -> bool:
    prim = primitive_roots(m)
    for z in range(m):
        if not any((z + e) % m in prim and (m == 3 or e != z) for e in prim):
            return False
    return True


def _lambda2_full(m: int, max_m: int) -> bool | None:
    return None if m == 3 else lambda_brute(m, 2) == all_roots(m)


def _triple_product_one(m: int, max_m: int) -> bool | None:
    """Three roots whose six values ``eta^{+-1}`` are distinct, with product 1."""
    if m in (3, 5, 9, 15):
        return None
    prim = sorted(e for e in primitive_roots(m) if e < m - e)
    for a_idx, a in enumerate(prim):
        for b in prim[a_idx + 1 :]:
            for sa, sb in ((1, 1), (1, -1)):
                c = (-(sa * a) - sb * b) % m
                if c in primitive_roots(m) and len({a, m - a, b, m - b, c, m - c}) == 6:
                    return True
    return False


def _lambda3(m: int, max_m: int) -> bool | None:
    if m == 3:
        return None
    expected = _punctured(m) if m in LAMBDA_ODD_EXCEPTIONS else all_roots(m)
    return lambda_brute(m, 3) == expected


def _lambda3_star(m: int, max_m: int) -> bool | None:
    return None if m == 3 else lambda3_star(m) == all_roots(m)


def _lambda3_monotone(m: int, max_m: int) -> bool | None:
    k = totient(m)
    if k <= 6:
        return None
    base = lambda_brute(m, 3)
    return all(base <= lambda_brute(m, i) for i in range(4, k - 2))


def _lambda_closed_agrees(m: int, max_m: int) -> bool | None:
    if m == 3:
        return None
    k = totient(m)
    punct = _punctured(m)
    for i in range(1, k + 1):
        brute = lambda_brute(m, i)
        if brute != lambda_closed(m, i):
            return False
        if 2 <= i <= k - 2 and not punct <= brute:
            return False
    return True


def _delta_has_one(m: int, max_m: int) -> bool | None:
    return None if m in DELTA_EXCEPTIONS else 0 in delta_brute(m)


def _delta_contains_phi(m: int, max_m: int) -> bool:
    return primitive_roots(m) <= delta_brute(m)


def _delta_punctured(m: int, max_m: int) -> bool:
    return _punctured(m) <= delta_brute(m)


def _delta_closed_agrees(m: int, max_m: int) -> bool:
    return delta_brute(m) == delta_closed(m)


# name -> check(m, max_m); a check returns None where its hypotheses exclude m
IDENTITIES = {
    "phi-squared": _phi_squared,
    "punctured-product": _punctured_product,
    "shift-into-phi": _shift_into_phi,
    "lambda2-full": _lambda2_full,
    "triple-product-one": _triple_product_one,
    "lambda3": _lambda3,
    "lambda3-star": _lambda3_star,
    "lambda3-monotone": _lambda3_monotone,
    "lambda-closed": _lambda_closed_agrees,
    "delta-has-one": _delta_has_one,
    "delta-contains-phi": _delta_contains_phi,
    "delta-punctured": _delta_punctured,
    "delta-closed": _delta_closed_agrees,
}


def identity_suite(max_m: int) -> dict[str, dict[int, bool | None]]:
    """Evaluate every identity for each odd ``3 <= m <= max_m``."""
    if max_m < 3 or max_m % 2 == 0:
        raise ValueError(f"max_m must be odd and at least 3, got {max_m}")
    return {
        name: {m: check(m, max_m) for m in range(3, max_m + 1, 2)}
        for name, check in IDENTITIES.items()
    }
