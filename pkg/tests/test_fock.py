"""The Fock representation and its dimension count."""

import random
from fractions import Fraction
from itertools import product

import pytest

from heisenfock import (
    Element,
    FockVector,
    MultiPartition,
    PairingMatrix,
    act_element,
    act_generator,
    expand_p,
    expand_q,
    fock_dim,
    multipartitions_of_weight,
    normal_order,
    symbol,
)
from heisenfock.generators import PLAIN, TRANSPOSED
from heisenfock.heisenberg import BasisIndexError
from heisenfock.linalg import rational_rank
from heisenfock.partitions import EMPTY_MULTIPARTITION
from helpers import random_element, random_multipartition, random_pairing

P1 = PairingMatrix([[1]])
CHI = Fraction(4, 3)
PCHI = PairingMatrix([[CHI]])


def test_vacuum_is_killed_by_annihilators():
    assert act_generator(symbol(0, 3), FockVector.vacuum(), P1).is_zero


def test_creation_appends_a_part():
    result = act_generator(symbol(0, -2), FockVector.vacuum(), P1)
    assert result == FockVector.monomial(MultiPartition({0: [2]}))


def test_annihilation_is_a_derivation():
    state = FockVector.monomial(MultiPartition({0: [1, 1]}))
    result = act_generator(symbol(0, 1), state, P1)
    assert result == 2 * FockVector.monomial(MultiPartition({0: [1]}))


def test_act_element_unit_and_contraction():
    v = FockVector.monomial(MultiPartition({0: [2], 1: [1]}), Fraction(2, 3))
    P2 = PairingMatrix([[1, 2], [3, 4]])
    assert act_element(Element.one(), v, P2) == v
    x = Element.generator(0, 1) * Element.generator(0, -1)
    assert act_element(x, FockVector.vacuum(), PCHI) == CHI * FockVector.vacuum()


def test_act_element_level_two_creation_family():
    result = act_element(expand_p(0, 2), FockVector.vacuum(), P1)
    expected = FockVector(
        {
            MultiPartition({0: [2]}): Fraction(1, 2),
            MultiPartition({0: [1, 1]}): Fraction(1, 2),
        }
    )
    assert result == expected


def test_act_generator_validates_index():
    with pytest.raises(BasisIndexError):
        act_generator(symbol(1, 1), FockVector.vacuum(), P1)


def test_cross_index_annihilation_uses_pairing():
    P2 = PairingMatrix([[1, 2], [3, 4]])
    state = FockVector.monomial(MultiPartition({1: [2]}))
    result = act_generator(symbol(0, 2), state, P2)
    assert result == 2 * 2 * FockVector.vacuum()


def test_vacuum_annihilated_by_all_lowering_families():
    P2 = PairingMatrix([[1, 2], [3, 4]])
    for kind in (PLAIN, TRANSPOSED):
        for i in range(2):
            for n in range(1, 9):
                assert act_element(expand_q(i, n, kind), FockVector.vacuum(), P2).is_zero


def test_action_is_a_representation_on_random_triples():
    rng = random.Random(1618)
    for _ in range(100):
        d = rng.choice([1, 2])
        P = random_pairing(rng, d)
        x = random_element(rng, d, max_len=4, max_mode=3)
        y = random_element(rng, d, max_len=4, max_mode=3)
        v = FockVector.monomial(random_multipartition(rng, d, 4), Fraction(rng.randint(1, 3)))
        stepwise = act_element(x, act_element(y, v, P), P)
        at_once = act_element(normal_order(x * y, P).to_element(), v, P)
        assert stepwise == at_once


def test_creation_operators_span_each_graded_piece():
    for d in (1, 2, 3):
        P = PairingMatrix.identity(d)
        for level in range(6):
            basis = multipartitions_of_weight(level, d)
            vectors = []
            for nu in basis:
                word = Element.from_word(
                    tuple(symbol(i, -size) for i, part in nu.assignments for size in part.parts)
                )
                image = act_element(word, FockVector.vacuum(), P)
                vectors.append([image.coefficient(mu) for mu in basis])
            assert rational_rank(vectors) == fock_dim(level, d)


def test_raising_family_members_commute_on_graded_pieces():
    P = PairingMatrix([[1, 2], [3, 4]])
    for m, n in product(range(1, 4), repeat=2):
        for level in range(0, 4):
            for nu in multipartitions_of_weight(level, 2):
                v = FockVector.monomial(nu)
                ab = act_element(expand_p(0, m), act_element(expand_p(1, n), v, P), P)
                ba = act_element(expand_p(1, n), act_element(expand_p(0, m), v, P), P)
                assert ab == ba


def test_fock_dim_examples():
    for d in (1, 2, 3):
        assert fock_dim(0, d) == 1
    assert fock_dim(4, 1) == 5
    assert fock_dim(2, 2) == 5


def test_fock_dim_counts_multipartitions():
    for d in (1, 2, 3):
        for level in range(9):
            assert fock_dim(level, d) == len(multipartitions_of_weight(level, d))


def test_fock_dim_validates_arguments():
    with pytest.raises(ValueError):
        fock_dim(-1, 1)
    with pytest.raises(ValueError):
        fock_dim(0, 0)


def test_fock_vector_arithmetic():
    v = FockVector.monomial(MultiPartition({0: [1]}))
    w = FockVector.monomial(MultiPartition({0: [2]}))
    assert (v + w) - v == w
    assert (0 * v).is_zero
    assert str(FockVector.zero()) == "0"
