"""Eigenvalue sets ``E(rho_w(g))`` for the supported highest weights.

All spectra are sets of exponents over the modulus ``|g|``.  The diagonal of
``g`` on the natural module determines everything: the weights of each
supported module are evaluated on it directly.

Weights are written with the shape classes :class:`Fund`,
:class:`SumTwoFund` and :class:`TwistedProduct`.  A Frobenius twist
``p^t * w`` never changes the spectrum of a rational element, so twists are
not represented at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd
from typing import Sequence, Union

import numpy as np

from .cyclo import RootSet, all_roots, primitive_roots, product_set, trivial
from .elements import ElementError, SemisimpleElement, singular_count
from .lambdas import _mask_from_residues, delta_closed, subset_sum_levels

MAX_SPIN_RANK = 24


class UnsupportedShape(ValueError):
    pass


@dataclass(frozen=True)
class Fund:
    i: int

    def __str__(self) -> str:
        return f"fund:{self.i}"


@dataclass(frozen=True)
class SumTwoFund:
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def __str__(self) -> str:
        return f"sum:{self.i},{self.j}"


@dataclass(frozen=True)
class TwistedProduct:
    """``sum p^{k_t} * mu_t``; the factors are tensor-multiplied."""

    parts: tuple[Weight, ...]

    def __str__(self) -> str:
        return "*".join(str(p) for p in self.parts)


Weight = Union[Fund, SumTwoFund, TwistedProduct]


class WeightSyntaxError(ValueError):
    pass


def _parse_index(tok: str, n: int) -> int:
    tok = tok.strip()
    if tok == "n":
        return n
    if tok == "n-1":
        return n - 1
    if not tok.isdigit():
        raise WeightSyntaxError(f"bad weight index {tok!r}; expected an integer, n or n-1")
    return int(tok)


def parse_weight(text: str, n: int) -> Weight:
    """Parse ``fund:i``, ``spin``, ``sum:i,j`` or a ``*``-joined product of those.

    ``i`` and ``j`` may be written ``n`` or ``n-1``; ``spin`` means ``fund:n``.
    """
    factors: list[Weight] = []
    for part in text.replace(" ", "").split("*"):
        if part == "spin":
            factors.append(Fund(n))
        elif part.startswith("fund:"):
            factors.append(Fund(_parse_index(part[5:], n)))
        elif part.startswith("sum:") and part.count(",") == 1:
            a, b = part[4:].split(",")
            factors.append(SumTwoFund(_parse_index(a, n), _parse_index(b, n)))
        else:
            raise WeightSyntaxError(f"cannot parse weight {part!r}; expected fund:i, spin or sum:i,j")
    for w in factors:
        idx = (w.i,) if isinstance(w, Fund) else (w.i, w.j)
        if any(not 1 <= i <= n for i in idx):
            raise WeightSyntaxError(f"weight index out of range 1..{n} in {text!r}")
    return factors[0] if len(factors) == 1 else TwistedProduct(tuple(factors))


@dataclass(frozen=True)
class Spectrum:
    modulus: int
    values: RootSet
    exact: bool = True
    label: str | None = None

    @property
    def has_one(self) -> bool:
        return 0 in self.values

    @property
    def is_full(self) -> bool:
        return self.values == all_roots(self.modulus)

    def __str__(self) -> str:
        return str(self.values)


def _spectrum(g: SemisimpleElement, bits_or_set: RootSet, **kw) -> Spectrum:
    s = bits_or_set.rescale(g.order) if bits_or_set.modulus != g.order else bits_or_set
    return Spectrum(g.order, s, **kw)


def has_eigenvalue_one(s: Spectrum | RootSet) -> bool:
    values = s.values if isinstance(s, Spectrum) else s
    return 0 in values


# --- natural module and exterior powers ---------------------------------------


def spectrum_natural(g: SemisimpleElement) -> Spectrum:
    return Spectrum(g.order, RootSet(g.order, g.diagonal()))


@lru_cache(maxsize=4096)
def _exterior_levels(g: SemisimpleElement) -> tuple[int, ...]:
    return tuple(subset_sum_levels(g.diagonal(), g.order))


def _exterior(g: SemisimpleElement, i: int) -> Spectrum:
    return Spectrum(g.order, RootSet.from_bits(g.order, _exterior_levels(g)[i]))


def spectrum_exterior(g: SemisimpleElement, i: int) -> Spectrum:
    """``i``-th exterior power of the natural module of SL_n."""
    if g.group.family != "A":
        raise ElementError("exterior powers of the natural module are exposed for family A")
    n = g.group.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"arity {i} outside 1..{n - 1}")
    return _exterior(g, i)


def spectrum_sp_fund(g: SemisimpleElement, i: int, p: int = 0) -> Spectrum:
    """``rho_{omega_i}`` of Sp_2n via the ``i``-th exterior power of SL_2n."""
    if g.group.family != "C":
        raise ElementError("expected a symplectic element")
    n = g.group.n
    if not 1 <= i <= n:
        raise ValueError(f"arity {i} outside 1..{n}")
    if (i, p) == (n, 2):
        raise UnsupportedShape(
            f"fund:{n} of Sp_{2 * n} in characteristic 2 has no spectrum here; "
            "use the si-delta criterion"
        )
    return _exterior(g, i)


# --- spin module ------------------------------------------------------------------


def _require_b(g: SemisimpleElement) -> None:
    if g.group.family != "B":
        raise ElementError("the spin module belongs to family B")


def spectrum_spin_brute(g: SemisimpleElement) -> Spectrum:
    """All ``2^n`` signed sums ``+-d_1 +- ... +- d_n`` of the top half of the diagonal."""
    _require_b(g)
    if g.group.n > MAX_SPIN_RANK:
        raise ValueError(f"spin enumeration limited to n <= {MAX_SPIN_RANK}")
    M = g.order
    sums = np.zeros(1, dtype=np.int64)
    for d in g.top_half():
        sums = np.concatenate(((sums + d) % M, (sums - d) % M))
    return Spectrum(M, _mask_from_residues(M, sums), label=spin_case(g))


def isolated_small_orbits(g: SemisimpleElement) -> list[int]:
    """Orbit orders in {3, 5, 9} occurring once and coprime to every other orbit."""
    orders = g.orbit_orders
    out = []
    for idx, m in enumerate(orders):
        if m not in (3, 5, 9):
            continue
        if all(gcd(m, other) == 1 for j, other in enumerate(orders) if j != idx):
            out.append(m)
    return out


def spin_case(g: SemisimpleElement) -> str:
    """``Full``, ``Case2(m)`` or ``Case3(m)``; see :func:`spin_case_formula`."""
    _require_b(g)
    iso = isolated_small_orbits(g)
    if not iso:
        return "Full"
    if len(iso) == 1:
        return f"Case2({iso[0]})"
    (other,) = [m for m in iso if m != 5]
    return f"Case3({other})"


def spin_case_formula(g: SemisimpleElement) -> RootSet:
    """Set predicted by the case label, assembled from R and Phi only."""
    M = g.order
    label = spin_case(g)
    if label == "Full":
        return all_roots(M)
    m = int(label[6:-1])
    punctured = all_roots(m) - trivial(m)
    if label.startswith("Case2"):
        return product_set(punctured, all_roots(M // m))
    return product_set(product_set(punctured, primitive_roots(5)), all_roots(M // (5 * m)))


def spectrum_spin_closed(g: SemisimpleElement) -> Spectrum:
    """Product of ``Delta(m)`` over the orbits, one factor per copy."""
    _require_b(g)
    acc = trivial(1)
    for m in g.orbit_orders:
        acc = product_set(acc, delta_closed(m))
    return _spectrum(g, acc, label=spin_case(g))


def b_fund2_lower_bound(g: SemisimpleElement) -> Spectrum:
    """``{+-d_i +- d_j : i != j} + {1}``: a subset of ``E(rho_{omega_2}(g))``, type B."""
    _require_b(g)
    M, top = g.order, g.top_half()
    vals = {0}
    for a, b in combinations(top, 2):
        vals.update({a + b, a - b, -a + b, -a - b})
    return Spectrum(M, RootSet(M, vals), exact=False)


# --- two-term and twisted weights -------------------------------------------------


def _positions(g: SemisimpleElement) -> list[int]:
    return g.diagonal()


def supported_sum_two(g: SemisimpleElement, i: int, j: int, p: int = 0) -> str:
    """Name of the rule used for ``omega_i + omega_j``; raises if unsupported."""
    fam, n = g.group.family, g.group.n
    i, j = sorted((i, j))
    if fam == "A":
        if (i, j) == (1, n - 1):
            return "a-adjoint"
        if (i, j) == (2, n - 1) and n >= 4:
            return "a-2-n1"
        if (i, j) == (1, 2) and n >= 4:
            return "a-1-2"
        if (i, j) == (1, 4) and n >= 6:
            return "a-1-4"
    elif fam == "B":
        if (i, j) == (1, n):
            return "b-1-n"
        if (i, j) == (2, n):
            return "b-2-n"
    elif fam == "C":
        if (i, j) == (1, 1) and p != 2:
            return "c-1-1"
        if (i, j) == (1, n) and p != 2:
            return "c-1-n"
    raise UnsupportedShape(f"sum:{i},{j} is not supported for {g.group} with p={p}")


def spectrum_sum_two(g: SemisimpleElement, shape: SumTwoFund, p: int = 0) -> Spectrum:
    rule = supported_sum_two(g, shape.i, shape.j, p)
    M, d = g.order, _positions(g)
    if rule == "a-adjoint":
        vals = {a - b for a, b in permutations(d, 2)}
    elif rule == "a-2-n1":
        vals = {a + b - c for a, b, c in permutations(d, 3)}
    elif rule == "a-1-2":
        # orbit of 2e_1 + e_2 on distinct positions
        vals = {2 * a + b for a, b in permutations(d, 2)}
    elif rule == "a-1-4":
        # orbit of 2e_1 + e_2 + e_3 + e_4 on distinct positions
        vals = set()
        for idx, a in enumerate(d):
            rest = d[:idx] + d[idx + 1 :]
            vals.update(2 * a + b + c + e for b, c, e in combinations(rest, 3))
    elif rule == "b-1-n":
        s = product_set(spectrum_natural(g).values, spectrum_spin_brute(g).values)
        return Spectrum(M, s)
    elif rule == "b-2-n":
        s = product_set(b_fund2_lower_bound(g).values, spectrum_spin_brute(g).values)
        return Spectrum(M, s, exact=False)
    elif rule == "c-1-1":
        nat = spectrum_natural(g).values
        return Spectrum(M, product_set(nat, nat))
    else:  # c-1-n
        s = product_set(spectrum_natural(g).values, spectrum_sp_fund(g, g.group.n, p).values)
        return Spectrum(M, s)
    return Spectrum(M, RootSet(M, vals), exact=rule in ("a-adjoint", "a-2-n1"))


def twisted_product_spectrum(g: SemisimpleElement, specs: Sequence[Weight], p: int = 0) -> Spectrum:
    """Tensor product of the factors; the twists are dropped."""
    if not specs:
        raise ValueError("empty product")
    parts = [spectrum(g, w, p) for w in specs]
    acc = parts[0].values
    for s in parts[1:]:
        acc = product_set(acc, s.values)
    return Spectrum(g.order, acc, exact=all(s.exact for s in parts))


def spectrum(g: SemisimpleElement, weight: Weight, p: int = 0) -> Spectrum:
    """Dispatch on the weight shape."""
    fam, n = g.group.family, g.group.n
    if isinstance(weight, TwistedProduct):
        if len(weight.parts) == 1:
            return spectrum(g, weight.parts[0], p)
        return twisted_product_spectrum(g, weight.parts, p)
    if isinstance(weight, SumTwoFund):
        return spectrum_sum_two(g, weight, p)
    i = weight.i
    if fam == "A":
        return spectrum_exterior(g, i)
    if fam == "C":
        return spectrum_sp_fund(g, i, p)
    if i == 1:
        return spectrum_natural(g)
    if i == n:
        return spectrum_spin_brute(g)
    raise UnsupportedShape(f"fund:{i} of {g.group} has no exact spectrum here (only fund:1 and fund:{n})")


# --- characteristic 2, Sp_2n with a_n != 0 ---------------------------------------


def delta_nu(coeffs: Sequence[int]) -> int:
    """Weighted index sum of the 2-adic digit sum of ``sum a_j omega_j``.

    ``coeffs`` are ``a_1..a_{n-1}``.  Writing the weight as ``sum 2^k nu_k``
    with 2-restricted ``nu_k`` puts bit ``k`` of ``a_j`` into ``nu_k``; then
    ``nu = sum nu_k`` has coefficient ``b_j`` = number of set bits of ``a_j``.
    """
    if any(a < 0 for a in coeffs):
        raise ValueError("weight coefficients must be non-negative")
    b = [0] * len(coeffs)
    k = 0
    while any(a >> k for a in coeffs):
        for j, a in enumerate(coeffs):
            b[j] += (a >> k) & 1
        k += 1
    return sum(bj * (j + 1) for j, bj in enumerate(b))


def sp2_eig1_absent(g: SemisimpleElement, coeffs: Sequence[int]) -> bool:
    """Eigenvalue 1 is absent iff ``delta(nu) < Si(g)``; coeffs are ``a_1..a_n``."""
    if g.group.family != "C":
        raise ElementError("criterion applies to symplectic groups")
    if len(coeffs) != g.group.n:
        raise ValueError(f"expected {g.group.n} coefficients, got {len(coeffs)}")
    if coeffs[-1] == 0:
        raise ValueError("a_n = 0: use the spectra path instead")
    return delta_nu(coeffs[:-1]) < singular_count(g)
