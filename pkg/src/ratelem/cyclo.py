"""Roots of unity as exponents modulo m, and sets of them as bitmaps.

A root of unity of order dividing ``m`` is stored as its exponent ``e`` with
respect to a fixed primitive ``m``-th root, so ``zeta_m^e``.  Multiplication of
roots is addition of exponents.  No complex numbers are used anywhere.

A :class:`RootSet` is a subset of ``R(M)`` stored as a Python ``int`` whose bit
``e`` is set when ``zeta_M^e`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

MAX_MODULUS = 10**6


class InvalidModulus(ValueError):
    pass


def _check_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidModulus(f"modulus must be a positive integer, got {m!r}")
    if m > MAX_MODULUS:
        raise InvalidModulus(f"modulus {m} exceeds limit {MAX_MODULUS}")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    """Euler's function, by trial factorisation."""
    _check_modulus(m)
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def multiplicative_order(a: int, m: int) -> int:
    """Least ``e >= 1`` with ``a**e == 1 (mod m)``; requires gcd(a, m) = 1."""
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m == 1:
        return 1
    e, x = 1, a % m
    while x != 1:
        x = x * a % m
        e += 1
    return e


@dataclass(frozen=True, order=True)
class RootExp:
    """The root ``zeta_modulus^exponent``."""

    modulus: int
    exponent: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def order(self) -> int:
        return self.modulus // gcd(self.exponent, self.modulus)

    def reduced(self) -> RootExp:
        """Same root written over the smallest modulus (its order)."""
        g = gcd(self.exponent, self.modulus)
        return RootExp(self.modulus // g, self.exponent // g)

    @property
    def is_canonical(self) -> bool:
        return gcd(self.exponent, self.modulus) == 1

    def rescale(self, new_modulus: int) -> RootExp:
        if new_modulus % self.modulus:
            raise ValueError(f"{new_modulus} is not a multiple of {self.modulus}")
        return RootExp(new_modulus, self.exponent * (new_modulus // self.modulus))

    def __mul__(self, other: RootExp) -> RootExp:
        M = lcm(self.modulus, other.modulus)
        return RootExp(M, self.rescale(M).exponent + other.rescale(M).exponent)

    def inverse(self) -> RootExp:
        return RootExp(self.modulus, -self.exponent)

    def __str__(self) -> str:
        r = self.reduced()
        return f"ζ_{r.modulus}^{r.exponent}"


def _rotate(bits: int, shift: int, m: int, mask: int) -> int:
    shift %= m
    if shift == 0:
        return bits
    return ((bits << shift) | (bits >> (m - shift))) & mask


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class RootSet:
    """Immutable subset of ``R(modulus)`` as a membership bitmap."""

    __slots__ = ("_m", "_bits")

    def __init__(self, modulus: int, members: Iterable[int] = ()) -> None:
        _check_modulus(modulus)
        bits = 0
        for e in members:
            bits |= 1 << (e % modulus)
        self._m = modulus
        self._bits = bits

    @classmethod
    def from_bits(cls, modulus: int, bits: int) -> RootSet:
        _check_modulus(modulus)
        if bits >> modulus:
            raise ValueError("bitmap has bits beyond the modulus")
        obj = cls.__new__(cls)
        obj._m = modulus
        obj._bits = bits
        return obj

    @property
    def modulus(self) -> int:
        return self._m

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def mask(self) -> int:
        return (1 << self._m) - 1

    def __contains__(self, e: object) -> bool:
        if isinstance(e, RootExp):
            if self._m % e.modulus:
                return False
            e = e.rescale(self._m).exponent
        if not isinstance(e, int):
            return False
        return bool(self._bits >> (e % self._m) & 1)

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self._bits)

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __bool__(self) -> bool:
        return self._bits != 0

    def __hash__(self) -> int:
        r = self.reduce()
        return hash((r._m, r._bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootSet):
            return NotImplemented
        if self._m == other._m:
            return self._bits == other._bits
        a, b = _common(self, other)
        return a._bits == b._bits

    def __repr__(self) -> str:
        return f"RootSet({self._m}, {sorted(self)})"

    def __str__(self) -> str:
        return f"mod {self._m}: {{{','.join(map(str, sorted(self)))}}}"

    def roots(self) -> list[RootExp]:
        return [RootExp(self._m, e) for e in self]

    def rescale(self, new_modulus: int) -> RootSet:
        """Embed into ``R(new_modulus)``: residue ``e`` goes to ``k*e``."""
        if new_modulus % self._m:
            raise ValueError(f"{new_modulus} is not a multiple of {self._m}")
        if new_modulus == self._m:
            return self
        k = new_modulus // self._m
        bits = 0
        for e in self:
            bits |= 1 << (e * k)
        return RootSet.from_bits(new_modulus, bits)

    def reduce(self) -> RootSet:
        """Rewrite over the smallest modulus containing every member."""
        m = 0
        for e in self:
            m = gcd(m, e)
        m = gcd(m, self._m)
        if m in (0, self._m):
            # empty set or {0}
            return RootSet.from_bits(1, self._bits & 1)
        return RootSet.from_bits(self._m // m, _spread(self, m))

    # set algebra; operands are brought to the lcm of their moduli first

    def __or__(self, other: RootSet) -> RootSet:
        a, b = _common(self, other)
        return RootSet.from_bits(a._m, a._bits | b._bits)

    def __and__(self, other: RootSet) -> RootSet:
        a, b = _common(self, other)
        return RootSet.from_bits(a._m, a._bits & b._bits)

    def __sub__(self, other: RootSet) -> RootSet:
        a, b = _common(self, other)
        return RootSet.from_bits(a._m, a._bits & ~b._bits)

    def __le__(self, other: RootSet) -> bool:
        a, b = _common(self, other)
        return a._bits & ~b._bits == 0

    def __ge__(self, other: RootSet) -> bool:
        return other <= self

    def complement(self) -> RootSet:
        return RootSet.from_bits(self._m, self.mask & ~self._bits)

    def __mul__(self, other: RootSet) -> RootSet:
        return product_set(self, other)

    def shift(self, e: int) -> RootSet:
        """Multiply every member by ``zeta^e``."""
        return RootSet.from_bits(self._m, _rotate(self._bits, e, self._m, self.mask))

    def scale(self, i: int) -> RootSet:
        """Image under the power map ``x -> x**i``."""
        bits = 0
        for e in self:
            bits |= 1 << (e * i % self._m)
        return RootSet.from_bits(self._m, bits)

    def is_galois_closed(self) -> bool:
        units = [i for i in range(1, self._m) if gcd(i, self._m) == 1]
        return all(self.scale(i) == self for i in units)


def _spread(s: RootSet, step: int) -> int:
    bits = 0
    for e in s:
        bits |= 1 << (e // step)
    return bits


def _common(a: RootSet, b: RootSet) -> tuple[RootSet, RootSet]:
    if a.modulus == b.modulus:
        return a, b
    M = lcm(a.modulus, b.modulus)
    _check_modulus(M)
    return a.rescale(M), b.rescale(M)


def all_roots(m: int) -> RootSet:
    """``R(m)``."""
    _check_modulus(m)
    return RootSet.from_bits(m, (1 << m) - 1)


def primitive_roots(m: int) -> RootSet:
    """``Phi(m)``, the residues coprime to ``m``."""
    _check_modulus(m)
    if m == 1:
        return RootSet(1, [0])
    return RootSet(m, (e for e in range(1, m) if gcd(e, m) == 1))


def trivial(m: int = 1) -> RootSet:
    """The singleton ``{1}`` over modulus ``m``."""
    return RootSet.from_bits(m, 1)


def product_set(a: RootSet, b: RootSet) -> RootSet:
    """``{xy : x in a, y in b}``."""
    a, b = _common(a, b)
    if len(a) > len(b):
        a, b = b, a
    m, mask, out = a.modulus, a.mask, 0
    for e in a:
        out |= _rotate(b.bits, e, m, mask)
    return RootSet.from_bits(m, out)


def inverse_set(a: RootSet) -> RootSet:
    return a.scale(-1)


def galois_orbit(r: RootExp) -> RootSet:
    """``{r**i : gcd(i, m) = 1}`` inside ``R(m)``."""
    m = r.modulus
    return RootSet(m, (i * r.exponent for i in range(m) if gcd(i, m) == 1))
