"""Finite graded dimension vectors with signed symmetric and exterior powers.

A graded vector space enters only through its dimension vector: a finitely
supported map from integer degrees to nonnegative dimensions.  Symmetric
and exterior powers follow the sign convention forced by the Euler
characteristic identity euler(S^k W) = s^k(euler W): generators in odd
degree anticommute inside S and commute inside the exterior power, so an
odd generator squares to zero symmetrically but admits all powers
exteriorly.  Concretely the degree-by-degree dimensions are read off the
two-variable series

    S:  prod_{i even} (1 - t q^i)^(-d_i) * prod_{i odd} (1 + t q^i)^(d_i)
    E:  prod_{i even} (1 + t q^i)^(d_i)  * prod_{i odd} (1 - t q^i)^(-d_i)

as the coefficient of t^k, a polynomial in q with nonnegative integer
coefficients.  All arithmetic is exact.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping


class GradedDims:
    """Dimension vector of a finite-dimensional graded vector space."""

    __slots__ = ("dims", "_hash")

    def __init__(self, dims: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        pairs = dims.items() if isinstance(dims, Mapping) else dims
        clean: dict[int, int] = {}
        for deg, d in pairs:
            deg, d = int(deg), int(d)
            if d < 0:
                raise ValueError("dimensions must be nonnegative, got %d in degree %d" % (d, deg))
            if d:
                clean[deg] = clean.get(deg, 0) + d
        self.dims = clean
        self._hash = hash(tuple(sorted(clean.items())))

    @classmethod
    def zero(cls) -> "GradedDims":
        return cls()

    @classmethod
    def unit(cls) -> "GradedDims":
        return cls({0: 1})

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_at(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.dims.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedDims) and self.dims == other.dims

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "GradedDims(%r)" % (dict(self.items()),)

    def __str__(self) -> str:
        if not self.dims:
            return "0"
        return " ".join("%d:%d" % (deg, d) for deg, d in self.items())


def euler(space: GradedDims) -> int:
    """Alternating sum of dimensions."""
    return sum((-1) ** (deg % 2) * d for deg, d in space.dims.items())


def _bosonic_series(degree: int, count: int, order: int) -> list[dict[int, int]]:
    # (1 - t q^degree)^(-count) truncated at t^order
    return [{degree * j: comb(count + j - 1, j)} for j in range(order + 1)]


def _fermionic_series(degree: int, count: int, order: int) -> list[dict[int, int]]:
    # (1 + t q^degree)^(count) truncated at t^order
    return [
        {degree * j: comb(count, j)} if j <= count else {}
        for j in range(order + 1)
    ]


def _series_product(factors: list[list[dict[int, int]]], order: int) -> list[dict[int, int]]:
    acc: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(order)]
    for factor in factors:
        nxt: list[dict[int, int]] = [{} for _ in range(order + 1)]
        for i, qa in enumerate(acc):
            if not qa:
                continue
            for j in range(order + 1 - i):
                qb = factor[j]
                if not qb:
                    continue
                target = nxt[i + j]
                for da, ca in qa.items():
                    for db, cb in qb.items():
                        target[da + db] = target.get(da + db, 0) + ca * cb
        acc = nxt
    return acc


def sym_power(space: GradedDims, k: int) -> GradedDims:
    """Degree-wise dimensions of the k-th signed symmetric power."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    factors = [
        _bosonic_series(deg, d, k) if deg % 2 == 0 else _fermionic_series(deg, d, k)
        for deg, d in space.items()
    ]
    return GradedDims(_series_product(factors, k)[k])


def ext_power(space: GradedDims, k: int) -> GradedDims:
    """Degree-wise dimensions of the k-th signed exterior power."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    factors = [
        _fermionic_series(deg, d, k) if deg % 2 == 0 else _bosonic_series(deg, d, k)
        for deg, d in space.items()
    ]
    return GradedDims(_series_product(factors, k)[k])


def tensor(left: GradedDims, right: GradedDims) -> GradedDims:
    """Graded tensor product: convolution of dimension vectors."""
    acc: dict[int, int] = {}
    for da, ca in left.dims.items():
        for db, cb in right.dims.items():
            acc[da + db] = acc.get(da + db, 0) + ca * cb
    return GradedDims(acc)
