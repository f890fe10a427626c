"""Degreewise dimension bookkeeping for towers of symmetric-power spaces.

For a d-dimensional base space, the degree-l piece of the tower decomposes
into blocks indexed by partitions of l, where a partition with
multiplicities (m_1, m_2, ...) contributes the product of the symmetric
power dimensions binom(d + m_j - 1, m_j).  The total must agree degree by
degree with the Fock space dimension; `compare_dims` tabulates both counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .fock import fock_dim
from .partitions import partitions_of


def vistoli_dim(level: int, dim: int) -> int:
    """Sum over partitions of `level` of the product, over part sizes, of
    binom(dim + multiplicity - 1, multiplicity)."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    if dim < 1:
        raise ValueError("dim must be positive")
    total = 0
    for lam in partitions_of(level):
        block = 1
        for _, count in lam.multiplicities().items():
            block *= comb(dim + count - 1, count)
        total += block
    return total


@dataclass(frozen=True)
class DimRow:
    level: int
    fock: int
    vistoli: int

    @property
    def equal(self) -> bool:
        return self.fock == self.vistoli


@dataclass(frozen=True)
class DimComparison:
    dim: int
    rows: tuple[DimRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.rows)


def compare_dims(max_level: int, dim: int) -> DimComparison:
    """Table of (level, fock dimension, partition-sum dimension) for levels
    0..max_level, plus the overall equality verdict."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    rows = tuple(
        DimRow(level, fock_dim(level, dim), vistoli_dim(level, dim))
        for level in range(max_level + 1)
    )
    return DimComparison(dim, rows)
