"""Integer partitions, multi-partitions, and the coarsening order.

Partitions label everything in this package: a normally ordered monomial of
the oscillator algebra carries one partition per basis index (a
multi-partition), and the triangularity argument for the generator families
is phrased in terms of the coarsening order on those labels.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Mapping


class Partition:
    """A weakly decreasing tuple of positive integers.

    Parts may be supplied in any order and are stored sorted decreasingly;
    the empty partition is the unique partition of 0.
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if ps and ps[-1] < 1:
            raise ValueError("partition parts must be positive, got %r" % (ps,))
        self.parts = ps
        self._hash = hash(ps)

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        """Build a partition from a map part-size -> multiplicity."""
        parts = []
        for size, count in mult.items():
            if count < 0:
                raise ValueError("multiplicities must be nonnegative")
            parts.extend([size] * count)
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def multiplicities(self) -> dict[int, int]:
        """Map part-size -> multiplicity, only nonzero entries."""
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def multiplicity(self, size: int) -> int:
        return self.parts.count(size)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Partition(%r)" % (self.parts,)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY_PARTITION = Partition()


def _partition_lists(n: int, max_part: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_lists(n - first, first):
            yield [first] + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, each exactly once.

    Listed in reverse-lexicographic order on part sequences, largest first
    part first: partitions_of(4) starts with (4) and ends with (1,1,1,1).
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return tuple(Partition(p) for p in _partition_lists(n, n))


def z_constant(partition: Partition) -> int:
    """The normalizing constant prod_l l^(m_l) * m_l! of a partition.

    This is the coefficient denominator arising when the exponential
    generating function of the creation family is expanded over partitions.
    """
    z = 1
    for size, count in partition.multiplicities().items():
        z *= size**count * factorial(count)
    return z


def _subsets_summing(parts: tuple[int, ...], target: int) -> Iterator[tuple[int, ...]]:
    # parts sorted decreasingly; yields the remaining parts for each
    # distinct sub-multiset summing to target
    if target == 0:
        yield parts
        return
    prev = None
    for i, p in enumerate(parts):
        if p == prev or p > target:
            prev = p
            continue
        prev = p
        for rem in _subsets_summing(parts[i + 1 :], target - p):
            yield parts[:i] + rem


@lru_cache(maxsize=None)
def _can_group(targets: tuple[int, ...], parts: tuple[int, ...]) -> bool:
    if not targets:
        return not parts
    for rem in _subsets_summing(parts, targets[0]):
        if _can_group(targets[1:], rem):
            return True
    return False


def is_coarser(coarse: Partition, fine: Partition) -> bool:
    """True iff both partitions have equal weight and the parts of `fine`
    can be grouped into blocks whose sums are exactly the parts of `coarse`
    (with multiplicity).  Reflexive: every partition is coarser than itself.
    """
    if coarse.weight != fine.weight:
        return False
    return _can_group(coarse.parts, fine.parts)


class MultiPartition:
    """A finitely supported map from basis indices to partitions.

    Indices mapped to the empty partition are dropped, so equality is
    structural on the support.
    """

    __slots__ = ("assignments", "_hash")

    def __init__(self, assignments: Mapping[int, Partition | Iterable[int]] | Iterable = ()) -> None:
        pairs = assignments.items() if isinstance(assignments, Mapping) else assignments
        kept = []
        seen = set()
        for i, p in pairs:
            i = int(i)
            if i < 0:
                raise ValueError("basis index must be nonnegative, got %d" % i)
            if i in seen:
                raise ValueError("duplicate basis index %d" % i)
            seen.add(i)
            part = p if isinstance(p, Partition) else Partition(p)
            if not part.is_empty:
                kept.append((i, part))
        self.assignments = tuple(sorted(kept, key=lambda pair: pair[0]))
        self._hash = hash(self.assignments)

    @property
    def weight(self) -> int:
        return sum(part.weight for _, part in self.assignments)

    @property
    def is_empty(self) -> bool:
        return not self.assignments

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.assignments)

    def partition_at(self, index: int) -> Partition:
        for i, part in self.assignments:
            if i == index:
                return part
        return EMPTY_PARTITION

    def add_part(self, index: int, size: int) -> "MultiPartition":
        """New multi-partition with one extra part of `size` at `index`."""
        if size < 1:
            raise ValueError("part size must be positive")
        current = self.partition_at(index)
        updated = Partition(current.parts + (size,))
        items = [(i, p) for i, p in self.assignments if i != index]
        items.append((index, updated))
        return MultiPartition(items)

    def remove_part(self, index: int, size: int) -> "MultiPartition":
        """New multi-partition with one part of `size` removed at `index`."""
        current = list(self.partition_at(index).parts)
        if size not in current:
            raise ValueError("no part of size %d at index %d" % (size, index))
        current.remove(size)
        items = [(i, p) for i, p in self.assignments if i != index]
        items.append((index, Partition(current)))
        return MultiPartition(items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiPartition) and self.assignments == other.assignments

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join("%d: %s" % (i, p) for i, p in self.assignments)
        return "MultiPartition({%s})" % inner

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        return "{" + ", ".join("%d: %s" % (i, p) for i, p in self.assignments) + "}"


EMPTY_MULTIPARTITION = MultiPartition()


def multipartition_coarser(coarse: MultiPartition, fine: MultiPartition) -> bool:
    """True iff is_coarser holds index by index (equal weight at each index)."""
    indices = set(coarse.support) | set(fine.support)
    return all(is_coarser(coarse.partition_at(i), fine.partition_at(i)) for i in indices)


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions_of_weight(weight: int, dim: int) -> tuple[MultiPartition, ...]:
    """All multi-partitions of the given total weight over `dim` indices.

    Deterministic order: weight compositions (w_0, ..., w_{dim-1}) with w_0
    largest first, then the per-index partition order of partitions_of.
    """
    if weight < 0 or dim < 0:
        raise ValueError("weight and dim must be nonnegative")
    out = []
    for comp in _compositions(weight, dim):
        for combo in product(*(partitions_of(w) for w in comp)):
            out.append(MultiPartition(enumerate(combo)))
    return tuple(out)
