"""Raising and lowering generator families and their quadratic relations.

The families p (creation side) and q (annihilation side) are defined by
exponential generating functions: the level-n member is the coefficient of
z^n in exp(sum_l a(-l) z^l / l) respectively exp(sum_l a(l) z^l / l).  The
transposed families flip the sign inside the exponential.  Expanding over
partitions gives the closed form used here,

    p_i^(n) = sum over partitions lam of n of a_i(-lam) / z(lam),

with an extra (-1)^(number of parts) for the transposed kind.

The verifiers below check, by exact normal ordering, that same-side family
members commute and that moving a q past a p produces the finite sum with
generalized-binomial coefficients s^k(chi), where chi is the pairing of the
two labels (negated chi for the mixed plain/transposed pairing).  The
triangularity check expresses the products p(nu)q(mu) in the normally
ordered basis and confirms they are triangular with respect to coarsening,
with explicitly known nonzero diagonal, hence linearly independent.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional, Union

from .heisenberg import (
    Element,
    GeneratorSymbol,
    NormalElement,
    PairingMatrix,
    normal_order,
)
from .partitions import (
    MultiPartition,
    multipartition_coarser,
    multipartitions_of_weight,
    partitions_of,
    z_constant,
)

Scalar = Union[int, Fraction]

PLAIN = "plain"
TRANSPOSED = "transposed"
_KINDS = (PLAIN, TRANSPOSED)

MIXED = "mixed_transposed"
_VARIANTS = (PLAIN, MIXED, TRANSPOSED)


def s_coefficient(chi: Scalar, k: int) -> Fraction:
    """The generalized binomial coefficient binom(chi + k - 1, k).

    Equals (1/k!) * chi * (chi+1) * ... * (chi+k-1); for integer chi >= 0 it
    is the dimension of the k-th symmetric power of a chi-dimensional space,
    and s_coefficient(-chi, k) carries the exterior-power count up to sign.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    chi = Fraction(chi)
    num = Fraction(1)
    for j in range(k):
        num *= chi + j
    return num / factorial(k)


@lru_cache(maxsize=None)
def expand_p(index: int, level: int, kind: str = PLAIN) -> Element:
    """The level-n creation family member at a basis index, as an Element.

    Creation modes only; words are emitted in the canonical creation order
    (part sizes ascending).
    """
    return _expand(index, level, kind, mode_sign=-1)


@lru_cache(maxsize=None)
def expand_q(index: int, level: int, kind: str = PLAIN) -> Element:
    """The level-n annihilation family member; mirror of expand_p with
    positive modes."""
    return _expand(index, level, kind, mode_sign=+1)


def _expand(index: int, level: int, kind: str, mode_sign: int) -> Element:
    if kind not in _KINDS:
        raise ValueError("kind must be one of %r" % (_KINDS,))
    if level < 0:
        raise ValueError("level must be nonnegative")
    terms = {}
    for lam in partitions_of(level):
        word = tuple(GeneratorSymbol(index, mode_sign * size) for size in sorted(lam.parts))
        coeff = Fraction(1, z_constant(lam))
        if kind == TRANSPOSED and len(lam) % 2 == 1:
            coeff = -coeff
        terms[word] = coeff
    return Element(terms)


def verify_qq_pp_commute(
    m: int,
    n: int,
    alpha: int,
    beta: int,
    pairing: PairingMatrix,
    q_kind: str = PLAIN,
    p_kind: str = PLAIN,
) -> bool:
    """Check [q^(m)_alpha, q^(n)_beta] = 0 = [p^(m)_alpha, p^(n)_beta]
    by normal ordering, for the given family kinds."""
    qm, qn = expand_q(alpha, m, q_kind), expand_q(beta, n, q_kind)
    if not normal_order(qm * qn - qn * qm, pairing).is_zero:
        return False
    pm, pn = expand_p(alpha, m, p_kind), expand_p(beta, n, p_kind)
    return normal_order(pm * pn - pn * pm, pairing).is_zero


@lru_cache(maxsize=None)
def _normal_pq(
    p_index: int, p_level: int, p_kind: str, q_index: int, q_level: int, q_kind: str, pairing: PairingMatrix
) -> NormalElement:
    # products p * q are already normally ordered word by word, so this is cheap
    return normal_order(expand_p(p_index, p_level, p_kind) * expand_q(q_index, q_level, q_kind), pairing)


def verify_qp_relation(
    m: int,
    n: int,
    alpha: int,
    beta: int,
    pairing: PairingMatrix,
    variant: str = PLAIN,
) -> bool:
    """Check the straightening relation for q^(m)_alpha * p^(n)_beta.

    plain:            q p = sum_k s^k(chi)  * p^(n-k) q^(m-k)
    mixed_transposed: transposed q with plain p, coefficients s^k(-chi)
    transposed:       both transposed, coefficients s^k(chi)

    with chi the pairing of (alpha, beta).  Returns exact equality of the
    two sides as NormalElements.
    """
    if variant not in _VARIANTS:
        raise ValueError("variant must be one of %r" % (_VARIANTS,))
    chi = pairing.entry(alpha, beta)
    if variant == PLAIN:
        q_kind, p_kind, coeff_arg = PLAIN, PLAIN, chi
    elif variant == MIXED:
        q_kind, p_kind, coeff_arg = TRANSPOSED, PLAIN, -chi
    else:
        q_kind, p_kind, coeff_arg = TRANSPOSED, TRANSPOSED, chi
    lhs = normal_order(expand_q(alpha, m, q_kind) * expand_p(beta, n, p_kind), pairing)
    rhs = NormalElement.zero()
    for k in range(min(m, n) + 1):
        term = _normal_pq(beta, n - k, p_kind, alpha, m - k, q_kind, pairing)
        rhs = rhs + s_coefficient(coeff_arg, k) * term
    return lhs == rhs


def creation_product(nu: MultiPartition, kind: str = PLAIN) -> Element:
    """The ordered product of creation family members labelled by nu:
    outer product over basis indices ascending, inner over levels ascending."""
    el = Element.one()
    for i, part in nu.assignments:
        for size in sorted(set(part.parts)):
            el = el * expand_p(i, size, kind) ** part.multiplicity(size)
    return el


def annihilation_product(mu: MultiPartition, kind: str = PLAIN) -> Element:
    """Mirror of creation_product on the annihilation side."""
    el = Element.one()
    for i, part in mu.assignments:
        for size in sorted(set(part.parts)):
            el = el * expand_q(i, size, kind) ** part.multiplicity(size)
    return el


def pq_to_a_basis(nu: MultiPartition, mu: MultiPartition, pairing: PairingMatrix) -> NormalElement:
    """Expand the product p(nu) q(mu) in the normally ordered basis."""
    return normal_order(creation_product(nu) * annihilation_product(mu), pairing)


def _diagonal_coefficient(nu: MultiPartition, mu: MultiPartition) -> Fraction:
    # each level-k family member contributes 1/k on its leading word
    coeff = Fraction(1)
    for label in (nu, mu):
        for _, part in label.assignments:
            for size in part.parts:
                coeff /= size
    return coeff


def triangularity_counterexample(
    weight_bound: int, pairing: PairingMatrix
) -> Optional[tuple]:
    """First violation of triangularity for p(nu)q(mu) up to the weight bound.

    Returns None when, for every pair with |nu| + |mu| <= weight_bound, the
    expansion has the predicted nonzero diagonal coefficient and every other
    term is strictly dominated in the componentwise coarsening order.
    """
    if weight_bound < 0:
        raise ValueError("weight bound must be nonnegative")
    d = pairing.dim
    for total in range(weight_bound + 1):
        for w_nu in range(total + 1):
            for nu in multipartitions_of_weight(w_nu, d):
                for mu in multipartitions_of_weight(total - w_nu, d):
                    expansion = pq_to_a_basis(nu, mu, pairing)
                    expected = _diagonal_coefficient(nu, mu)
                    if expansion.coefficient(nu, mu) != expected:
                        return (nu, mu, "diagonal", expansion.coefficient(nu, mu), expected)
                    for (nu2, mu2), c in expansion.terms.items():
                        if (nu2, mu2) == (nu, mu):
                            continue
                        if not (multipartition_coarser(nu, nu2) and multipartition_coarser(mu, mu2)):
                            return (nu, mu, "order", nu2, mu2)
    return None


def check_triangularity(weight_bound: int, pairing: PairingMatrix) -> bool:
    """True iff the p(nu)q(mu) expansion is triangular with nonzero diagonal
    for all pairs of total weight up to the bound (hence the p(nu)q(mu) of
    bounded weight are linearly independent)."""
    return triangularity_counterexample(weight_bound, pairing) is None


def bidegree_transition_matrix(
    creation_weight: int, annihilation_weight: int, pairing: PairingMatrix
) -> tuple[list[tuple[MultiPartition, MultiPartition]], list[list[Fraction]]]:
    """The transition matrix from {p(nu)q(mu)} to the normally ordered basis
    in a fixed bidegree.

    Returns (basis, rows) where basis lists the (nu, mu) pairs of the given
    bidegree and rows[r][c] is the coefficient of basis[c] in the expansion
    of p(basis[r][0]) q(basis[r][1]).
    """
    d = pairing.dim
    basis = [
        (nu, mu)
        for nu in multipartitions_of_weight(creation_weight, d)
        for mu in multipartitions_of_weight(annihilation_weight, d)
    ]
    rows = []
    for nu, mu in basis:
        expansion = pq_to_a_basis(nu, mu, pairing)
        rows.append([expansion.coefficient(nu2, mu2) for nu2, mu2 in basis])
    return basis, rows
