"""Partitions, multi-partitions, and the coarsening order."""

from fractions import Fraction
from itertools import chain

import pytest

from heisenfock import (
    MultiPartition,
    Partition,
    is_coarser,
    multipartition_coarser,
    multipartitions_of_weight,
    partitions_of,
    z_constant,
)
from helpers import merge_closure, pentagonal_partition_count


def test_partitions_of_zero_is_single_empty():
    assert partitions_of(0) == (Partition(),)


def test_partitions_of_four_reverse_lexicographic():
    assert [p.parts for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_partitions_of_ten_has_42_elements():
    # frozen from the pentagonal-number recurrence
    assert pentagonal_partition_count(10) == 42
    assert len(partitions_of(10)) == 42


@pytest.mark.parametrize("n", range(13))
def test_partition_counts_match_pentagonal_recurrence(n):
    assert len(partitions_of(n)) == pentagonal_partition_count(n)
    assert len(set(partitions_of(n))) == len(partitions_of(n))


def test_partition_canonicalizes_part_order():
    assert Partition([1, 3, 2]).parts == (3, 2, 1)
    assert Partition().parts == ()


@pytest.mark.parametrize("bad", [[0], [-1], [2, 0]])
def test_partition_rejects_nonpositive_parts(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_multiplicities_agree_with_parts():
    for n in range(9):
        for lam in partitions_of(n):
            assert sum(size * count for size, count in lam.multiplicities().items()) == n
            assert Partition.from_multiplicities(lam.multiplicities()) == lam


def test_z_constant_examples():
    assert z_constant(Partition()) == 1
    assert z_constant(Partition([2])) == 2
    assert z_constant(Partition([1, 1, 1])) == 6


@pytest.mark.parametrize("n", range(11))
def test_z_constant_reciprocal_sum_is_one(n):
    assert sum(Fraction(1, z_constant(lam)) for lam in partitions_of(n)) == 1


def test_is_coarser_examples():
    assert is_coarser(Partition([3]), Partition([2, 1]))
    assert not is_coarser(Partition([2, 1]), Partition([3]))
    assert is_coarser(Partition([2, 2]), Partition([2, 1, 1]))


def test_is_coarser_requires_equal_weight():
    assert not is_coarser(Partition([2]), Partition([1]))


@pytest.mark.parametrize("n", range(7))
def test_is_coarser_matches_merge_closure(n):
    for fine in partitions_of(n):
        closure = merge_closure(fine)
        for coarse in partitions_of(n):
            assert is_coarser(coarse, fine) == (coarse in closure)


def test_coarsening_is_a_partial_order():
    for n in range(7):
        universe = partitions_of(n)
        for p in universe:
            assert is_coarser(p, p)
        for p in universe:
            for q in universe:
                if is_coarser(p, q) and is_coarser(q, p):
                    assert p == q
                for r in universe:
                    if is_coarser(p, q) and is_coarser(q, r):
                        assert is_coarser(p, r)


def test_multipartition_drops_empty_assignments():
    assert MultiPartition({0: Partition(), 2: [1]}) == MultiPartition({2: [1]})
    assert MultiPartition() == MultiPartition({5: []})
    assert MultiPartition({0: [2, 1]}).weight == 3


def test_multipartition_rejects_bad_indices():
    with pytest.raises(ValueError):
        MultiPartition({-1: [1]})
    with pytest.raises(ValueError):
        MultiPartition([(0, [1]), (0, [2])])


def test_multipartition_add_remove_parts():
    mp = MultiPartition({0: [2]}).add_part(1, 1).add_part(0, 2)
    assert mp == MultiPartition({0: [2, 2], 1: [1]})
    assert mp.remove_part(0, 2) == MultiPartition({0: [2], 1: [1]})
    with pytest.raises(ValueError):
        mp.remove_part(1, 3)


def test_multipartition_coarser_examples():
    nu = MultiPartition({0: [2]})
    assert multipartition_coarser(nu, nu)
    assert multipartition_coarser(nu, MultiPartition({0: [1, 1]}))
    assert not multipartition_coarser(nu, MultiPartition({1: [1, 1]}))


def test_multipartitions_of_weight_counts():
    # independent count: sum over weight splittings of products of p(n)
    def count(weight, dim):
        if dim == 0:
            return 1 if weight == 0 else 0
        return sum(
            len(partitions_of(w)) * count(weight - w, dim - 1) for w in range(weight + 1)
        )

    for dim in range(1, 4):
        for weight in range(7):
            listed = multipartitions_of_weight(weight, dim)
            assert len(listed) == count(weight, dim)
            assert len(set(listed)) == len(listed)
            assert all(mp.weight == weight for mp in listed)


def test_multipartitions_weight_two_dim_two_frozen():
    assert len(multipartitions_of_weight(2, 2)) == 5
