"""Rational odd-order semisimple elements of SL_n, Sp_2n and Spin_2n+1.

An element is described by its eigenvalues on the natural module.  Rationality
forces that multiset to be a union of full Galois orbits ``Phi(m)``, so the
canonical description is a multiset of :class:`OrbitBlock` plus the number of
eigenvalues equal to 1.

Textual syntax (used by the CLI and in reports)::

    <family>:<dim>:<term>+<term>+...

    term   := phi(<m>)[*<count>] | 1[*<count>]
    family := a | b | c        (SL_dim, Spin_dim, Sp_dim)

for example ``a:8:phi(5)+phi(3)*2``, ``b:11:phi(5)+phi(9)+1``,
``c:10:phi(5)+phi(9)``.  ``dim`` is the dimension of the natural module.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Literal, Sequence

from .cyclo import RootExp, lcm, multiplicative_order, primitive_roots, totient

Family = Literal["A", "B", "C"]
_MIN_N = {"A": 2, "B": 3, "C": 2}


class ElementError(ValueError):
    pass


class DimensionMismatch(ElementError):
    pass


class ParityViolation(ElementError):
    pass


class EvenOrder(ElementError):
    pass


class ParseError(ElementError):
    pass


@dataclass(frozen=True, order=True)
class GroupTag:
    """``A``: SL_n, natural dim n.  ``C``: Sp_2n, dim 2n.  ``B``: Spin_2n+1, dim 2n+1."""

    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_N:
            raise ElementError(f"unknown family {self.family!r}")
        if self.n < _MIN_N[self.family]:
            raise ElementError(f"family {self.family} needs n >= {_MIN_N[self.family]}, got {self.n}")

    @property
    def natural_dim(self) -> int:
        return {"A": self.n, "C": 2 * self.n, "B": 2 * self.n + 1}[self.family]

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "A" else self.n

    @classmethod
    def from_dim(cls, family: str, dim: int) -> GroupTag:
        family = family.upper()
        if family == "A":
            return cls("A", dim)
        if family == "C":
            if dim % 2:
                raise DimensionMismatch(f"symplectic natural module has even dimension, got {dim}")
            return cls("C", dim // 2)
        if family == "B":
            if dim % 2 == 0:
                raise DimensionMismatch(f"orthogonal natural module of type B has odd dimension, got {dim}")
            return cls("B", (dim - 1) // 2)
        raise ElementError(f"unknown family {family!r}")

    def __str__(self) -> str:
        return {"A": f"SL_{self.n}", "C": f"Sp_{2 * self.n}", "B": f"Spin_{2 * self.n + 1}"}[self.family]


@dataclass(frozen=True, order=True)
class OrbitBlock:
    """The orbit ``Phi(m)`` repeated ``count`` times on the diagonal."""

    m: int
    count: int = 1

    def __post_init__(self) -> None:
        if self.m <= 1:
            raise ElementError(f"orbit order must exceed 1, got {self.m}")
        if self.m % 2 == 0:
            raise EvenOrder(f"orbit order {self.m} is even")
        if self.count < 1:
            raise ElementError(f"orbit multiplicity must be positive, got {self.count}")

    @property
    def dim(self) -> int:
        return self.count * totient(self.m)


@dataclass(frozen=True, order=True)
class SemisimpleElement:
    group: GroupTag
    blocks: tuple[OrbitBlock, ...]
    trivial_count: int

    @property
    def order(self) -> int:
        return reduce(lcm, (b.m for b in self.blocks), 1)

    @property
    def orbit_orders(self) -> list[int]:
        """Block orders with repetition, ascending."""
        return [b.m for b in self.blocks for _ in range(b.count)]

    def diagonal(self) -> list[int]:
        """Expanded eigenvalues as exponents over modulus ``self.order``."""
        M = self.order
        out: list[int] = []
        for b in self.blocks:
            orbit = [e * (M // b.m) for e in sorted(primitive_roots(b.m))]
            out.extend(orbit * b.count)
        out.extend([0] * self.trivial_count)
        return out

    def diagonal_roots(self) -> list[RootExp]:
        M = self.order
        return [RootExp(M, e) for e in self.diagonal()]

    def top_half(self) -> list[int]:
        """``n`` entries ``d_1..d_n`` with the diagonal equal to ``{d_i^{+-1}} + {1}``.

        Defined for families B and C.  Each orbit contributes one exponent
        from every inverse pair.
        """
        if self.group.family == "A":
            raise ElementError("top half is defined for families B and C only")
        M = self.order
        out: list[int] = []
        for b in self.blocks:
            reps = [e * (M // b.m) for e in sorted(primitive_roots(b.m)) if e < b.m - e]
            out.extend(reps * b.count)
        out.extend([0] * (self.trivial_count // 2))
        return out

    @property
    def syntax(self) -> str:
        return format_element(self)

    def __str__(self) -> str:
        return self.syntax

    def to_record(self) -> dict:
        return {
            "family": self.group.family,
            "n": self.group.n,
            "blocks": [[b.m, b.count] for b in self.blocks],
            "trivial_count": self.trivial_count,
            "order": self.order,
        }


def _normalise_blocks(blocks: Iterable[OrbitBlock | tuple[int, int] | int]) -> tuple[OrbitBlock, ...]:
    counts: Counter[int] = Counter()
    for b in blocks:
        if isinstance(b, OrbitBlock):
            counts[b.m] += b.count
        elif isinstance(b, tuple):
            ob = OrbitBlock(*b)
            counts[ob.m] += ob.count
        else:
            counts[OrbitBlock(b).m] += 1
    return tuple(OrbitBlock(m, c) for m, c in sorted(counts.items()))


def build_element(
    group: GroupTag,
    blocks: Iterable[OrbitBlock | tuple[int, int] | int],
    trivial_count: int,
) -> SemisimpleElement:
    """Validate and canonicalise a rational odd-order element.

    ``blocks`` may mix :class:`OrbitBlock`, ``(m, count)`` pairs and bare
    orders; repeated orders are merged.
    """
    norm = _normalise_blocks(blocks)
    k = trivial_count
    if k < 0:
        raise ElementError(f"trivial multiplicity must be non-negative, got {k}")
    if group.family == "C" and k % 2:
        raise ParityViolation(f"eigenvalue 1 has odd multiplicity {k} on a symplectic space")
    if group.family == "B" and k % 2 == 0:
        raise ParityViolation(f"type B needs an odd number of eigenvalues 1, got {k}")
    dim = sum(b.dim for b in norm) + k
    if dim != group.natural_dim:
        raise DimensionMismatch(f"blocks fill dimension {dim}, natural module of {group} has {group.natural_dim}")
    g = SemisimpleElement(group, norm, k)
    if sum(g.diagonal()) % g.order:
        raise ElementError("determinant is not 1")  # unreachable for full odd orbits
    return g


def element_order(g: SemisimpleElement) -> int:
    return g.order


def _orbit_multiplicities(diagonal: Iterable[RootExp]) -> Counter[RootExp]:
    return Counter(r.reduced() for r in diagonal)


def is_rational(diagonal: Iterable[RootExp]) -> bool:
    """True iff the multiset is a union of full Galois orbits, each with uniform multiplicity."""
    counts = _orbit_multiplicities(diagonal)
    orders = {r.modulus for r in counts}
    for m in orders:
        if m == 1:
            continue
        mult = {counts.get(RootExp(m, e), 0) for e in primitive_roots(m)}
        if len(mult) != 1:
            return False
    return True


def is_real(diagonal: Iterable[RootExp]) -> bool:
    counts = _orbit_multiplicities(diagonal)
    return all(counts[r] == counts.get(r.inverse().reduced(), 0) for r in counts)


# --- characteristic 2 symplectic decomposition ---------------------------------


@dataclass(frozen=True, order=True)
class F2Block:
    """A minimal non-degenerate g-stable subspace of dimension ``2d`` over GF(2)."""

    d: int
    m: int
    kind: Literal["irreducible", "split-pair"]

    def __post_init__(self) -> None:
        if self.kind == "irreducible" and (2**self.d + 1) % self.m:
            raise ElementError(f"irreducible block order {self.m} does not divide 2^{self.d}+1")
        if self.kind == "split-pair" and (2**self.d - 1) % self.m:
            raise ElementError(f"split block order {self.m} does not divide 2^{self.d}-1")

    @property
    def dim(self) -> int:
        return 2 * self.d


def _require_c(g: SemisimpleElement) -> None:
    if g.group.family != "C":
        raise ElementError(f"expected a symplectic element, got family {g.group.family}")


def orbit_f2_blocks(m: int) -> list[F2Block]:
    """Blocks produced by a single orbit ``Phi(m)``, m odd > 1."""
    e = multiplicative_order(2, m)
    if e % 2 == 0 and pow(2, e // 2, m) == m - 1:
        return [F2Block(e // 2, m, "irreducible")] * (totient(m) // e)
    return [F2Block(e, m, "split-pair")] * (totient(m) // (2 * e))


def f2_block_decomposition(g: SemisimpleElement) -> list[F2Block]:
    _require_c(g)
    out: list[F2Block] = []
    for b in g.blocks:
        out.extend(orbit_f2_blocks(b.m) * b.count)
    return out


def singular_indices(g: SemisimpleElement) -> list[F2Block]:
    """Irreducible blocks with ``m = 2^d + 1`` coprime to every other block."""
    blocks = f2_block_decomposition(g)
    out = []
    for i, blk in enumerate(blocks):
        if blk.kind != "irreducible" or blk.m != 2**blk.d + 1:
            continue
        if all(gcd(blk.m, other.m) == 1 for j, other in enumerate(blocks) if j != i):
            out.append(blk)
    return out


def singular_count(g: SemisimpleElement) -> int:
    return len(singular_indices(g))


# --- text syntax -----------------------------------------------------------------

_TERM = re.compile(r"^(?:phi\((\d+)\)|(1))(?:\*(\d+))?$")


def parse_element(text: str) -> SemisimpleElement:
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise ParseError(f"element must look like <family>:<dim>:<terms>, got {text!r}")
    fam, dim_s, terms = parts
    if fam.lower() not in ("a", "b", "c") or not dim_s.isdigit():
        raise ParseError(f"bad family or dimension in {text!r}")
    group = GroupTag.from_dim(fam, int(dim_s))
    blocks: list[tuple[int, int]] = []
    k = 0
    for term in filter(None, (t.strip() for t in terms.replace(" ", "").split("+"))):
        match = _TERM.match(term)
        if not match:
            raise ParseError(f"cannot parse term {term!r}; expected phi(m)[*c] or 1[*k]")
        count = int(match.group(3)) if match.group(3) else 1
        if match.group(1):
            blocks.append((int(match.group(1)), count))
        else:
            k += count
    return build_element(group, blocks, k)


def format_element(g: SemisimpleElement) -> str:
    terms = [f"phi({b.m})" + (f"*{b.count}" if b.count > 1 else "") for b in g.blocks]
    if g.trivial_count:
        terms.append("1" + (f"*{g.trivial_count}" if g.trivial_count > 1 else ""))
    return f"{g.group.family.lower()}:{g.group.natural_dim}:{'+'.join(terms)}"


def element_from_orders(group: GroupTag, orders: Sequence[int]) -> SemisimpleElement:
    """Convenience: fill the remaining dimension with eigenvalue 1."""
    dim = sum(totient(m) for m in orders)
    return build_element(group, list(orders), group.natural_dim - dim)
