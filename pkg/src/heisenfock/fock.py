"""The Fock representation: creators multiply, annihilators differentiate.

The space is realized concretely as rational combinations of monomials
indexed by multi-partitions; the monomial labelled nu is the creation word
a(-nu) applied to the vacuum.  A negative-mode generator appends a part; a
positive-mode generator a_i(n) acts as the derivation that removes one part
of size n at some index j, weighted by n * <i, j> and the multiplicity.
The vacuum (empty multi-partition) is killed by every positive mode.

This realization never performs normal ordering, which makes the action an
independent oracle for the rewriting engine: acting with a product must
agree with acting by its normal form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .heisenberg import (
    BasisIndexError,
    Element,
    GeneratorSymbol,
    InvalidModeError,
    PairingMatrix,
    _format_terms,
    creation_word,
)
from .partitions import EMPTY_MULTIPARTITION, MultiPartition

Scalar = Union[int, Fraction]


class FockVector:
    """A finite rational combination of creation monomials applied to the
    vacuum, keyed by multi-partition."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MultiPartition, Scalar] | None = None) -> None:
        clean: dict[MultiPartition, Fraction] = {}
        if terms:
            for mp, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mp] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({EMPTY_MULTIPARTITION: Fraction(1)})

    @classmethod
    def monomial(cls, nu: MultiPartition, coeff: Scalar = 1) -> "FockVector":
        return cls({nu: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, nu: MultiPartition) -> Fraction:
        return self.terms.get(nu, Fraction(0))

    def __add__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        acc = dict(self.terms)
        for mp, c in other.terms.items():
            acc[mp] = acc.get(mp, Fraction(0)) + c
        return FockVector(acc)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __neg__(self) -> "FockVector":
        return FockVector({mp: -c for mp, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> "FockVector":
        if isinstance(other, (int, Fraction)):
            return FockVector({mp: c * other for mp, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __repr__(self) -> str:
        return "FockVector(%s)" % str(self)

    def __str__(self) -> str:
        keys = sorted(self.terms, key=lambda nu: (-nu.weight, creation_word(nu)))
        return _format_terms([(creation_word(nu), self.terms[nu]) for nu in keys])


def act_generator(g: GeneratorSymbol, v: FockVector, pairing: PairingMatrix) -> FockVector:
    """Action of a single generator."""
    if not (0 <= g.index < pairing.dim):
        raise BasisIndexError(
            "basis index %d out of range for dimension %d" % (g.index, pairing.dim)
        )
    if g.mode == 0:
        raise InvalidModeError("generator mode must be nonzero")
    acc: dict[MultiPartition, Fraction] = {}
    if g.mode < 0:
        size = -g.mode
        for nu, c in v.terms.items():
            key = nu.add_part(g.index, size)
            acc[key] = acc.get(key, Fraction(0)) + c
    else:
        size = g.mode
        for nu, c in v.terms.items():
            for j in nu.support:
                count = nu.partition_at(j).multiplicity(size)
                if count:
                    key = nu.remove_part(j, size)
                    scalar = c * count * size * pairing.entry(g.index, j)
                    acc[key] = acc.get(key, Fraction(0)) + scalar
    return FockVector(acc)


def act_element(x: Element, v: FockVector, pairing: PairingMatrix) -> FockVector:
    """Linear extension of the word-by-word action, rightmost symbol first."""
    result = FockVector.zero()
    for word, coeff in x.terms.items():
        cur = v
        for g in reversed(word):
            if cur.is_zero:
                break
            cur = act_generator(g, cur, pairing)
        result = result + coeff * cur
    return result


@lru_cache(maxsize=None)
def _bounded_partition_count(n: int, max_part: int) -> int:
    # number of partitions of n with all parts <= max_part
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    total = _bounded_partition_count(n, max_part - 1)
    if n >= max_part:
        total += _bounded_partition_count(n - max_part, max_part)
    return total


@lru_cache(maxsize=None)
def fock_dim(level: int, dim: int) -> int:
    """Dimension of the degree-`level` piece: the number of multi-partitions
    of total weight `level` over `dim` indices.  Equals the coefficient of
    q^level in prod_n (1 - q^n)^(-dim)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    if dim < 1:
        raise ValueError("dim must be positive")
    if dim == 1:
        return _bounded_partition_count(level, level)
    return sum(
        _bounded_partition_count(a, a) * fock_dim(level - a, dim - 1)
        for a in range(level + 1)
    )
