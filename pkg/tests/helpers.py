"""Shared oracles and random generators for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: partition counts come from the pentagonal-number recurrence, the
coarsening order from a merge closure, binomial series from exp/log
composition, and dimension series from truncated polynomial products.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from heisenfock import Element, GeneratorSymbol, PairingMatrix, Partition
from heisenfock.partitions import MultiPartition


def pentagonal_partition_count(n: int) -> int:
    """Partition function via Euler's pentagonal-number recurrence."""
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts[n]


def merge_closure(partition: Partition) -> set[Partition]:
    """All partitions reachable from `partition` by repeatedly merging two
    parts (including the partition itself): exactly its coarsenings."""
    seen = {partition}
    frontier = [partition]
    while frontier:
        current = frontier.pop()
        parts = current.parts
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                merged = list(parts)
                a = merged.pop(j)
                b = merged.pop(i)
                merged.append(a + b)
                coarser = Partition(merged)
                if coarser not in seen:
                    seen.add(coarser)
                    frontier.append(coarser)
    return seen


def poly_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] += ca * b[j]
    return out


def series_exp(coeffs: list[Fraction], order: int) -> list[Fraction]:
    """exp of a power series with zero constant term, truncated."""
    assert coeffs[0] == 0
    result = [Fraction(0)] * (order + 1)
    result[0] = Fraction(1)
    power = list(result)
    for k in range(1, order + 1):
        power = poly_mul(power, coeffs, order)
        for i in range(order + 1):
            result[i] += power[i] / factorial(k)
    return result


def binomial_series(chi, order: int) -> list[Fraction]:
    """Coefficients of (1 - t)^(-chi), computed as exp(chi * sum_k t^k / k)."""
    chi = Fraction(chi)
    log_part = [Fraction(0)] + [chi / k for k in range(1, order + 1)]
    return series_exp(log_part, order)


def product_series_coeff(level: int, dim: int) -> int:
    """Coefficient of q^level in prod_{n=1}^{level} (1 - q^n)^(-dim),
    by truncated polynomial multiplication."""
    coeffs = [0] * (level + 1)
    coeffs[0] = 1
    for n in range(1, level + 1):
        factor = [0] * (level + 1)
        j = 0
        while n * j <= level:
            factor[n * j] = comb(dim + j - 1, j)
            j += 1
        nxt = [0] * (level + 1)
        for i, c in enumerate(coeffs):
            if not c:
                continue
            for k in range(level + 1 - i):
                if factor[k]:
                    nxt[i + k] += c * factor[k]
        coeffs = nxt
    return coeffs[level]


def element_poly_mul(a: list[Element], b: list[Element], order: int) -> list[Element]:
    out = [Element.zero() for _ in range(order + 1)]
    for i, ea in enumerate(a):
        if ea.is_zero:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if not b[j].is_zero:
                out[i + j] = out[i + j] + ea * b[j]
    return out


def family_by_series_exp(index: int, level: int, mode_sign: int, inner_sign: int) -> Element:
    """Coefficient of z^level in exp(inner_sign * sum_l a(mode_sign*l) z^l / l),
    by truncated series exponentiation of Element-valued polynomials.
    Independent of the closed partition-sum expansion."""
    order = level
    summand = [Element.zero()]
    for l in range(1, order + 1):
        summand.append(Element.generator(index, mode_sign * l) * Fraction(inner_sign, l))
    result = [Element.zero() for _ in range(order + 1)]
    result[0] = Element.one()
    power = [Element.one()] + [Element.zero() for _ in range(order)]
    for k in range(1, order + 1):
        power = element_poly_mul(power, summand, order)
        for i in range(order + 1):
            result[i] = result[i] + power[i] * Fraction(1, factorial(k))
    return result[level]


def random_fraction(rng: random.Random, span: int = 6, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_pairing(rng: random.Random, dim: int) -> PairingMatrix:
    return PairingMatrix([[random_fraction(rng) for _ in range(dim)] for _ in range(dim)])


def five_pairings(dim: int, rng: random.Random) -> list[PairingMatrix]:
    """Identity, random symmetric, random asymmetric, all-negative entries,
    and one with a zero row."""
    identity = PairingMatrix.identity(dim)

    sym_rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            value = random_fraction(rng)
            sym_rows[i][j] = value
            sym_rows[j][i] = value
    symmetric = PairingMatrix(sym_rows)

    asym_rows = [[random_fraction(rng) for _ in range(dim)] for _ in range(dim)]
    if dim > 1:
        asym_rows[0][1] = asym_rows[1][0] + 1  # force asymmetry
    asymmetric = PairingMatrix(asym_rows)

    negative = PairingMatrix(
        [[-abs(random_fraction(rng)) - 1 for _ in range(dim)] for _ in range(dim)]
    )

    zero_row_rows = [[random_fraction(rng) for _ in range(dim)] for _ in range(dim)]
    zero_row_rows[0] = [Fraction(0)] * dim
    zero_row = PairingMatrix(zero_row_rows)

    return [identity, symmetric, asymmetric, negative, zero_row]


def random_word(rng: random.Random, dim: int, max_len: int, max_mode: int) -> tuple:
    length = rng.randint(0, max_len)
    modes = [m for m in range(-max_mode, max_mode + 1) if m != 0]
    return tuple(
        GeneratorSymbol(rng.randrange(dim), rng.choice(modes)) for _ in range(length)
    )


def random_element(
    rng: random.Random, dim: int, max_len: int = 6, max_mode: int = 4, max_terms: int = 3
) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        coeff = random_fraction(rng)
        if not coeff:
            coeff = Fraction(1)
        word = random_word(rng, dim, max_len, max_mode)
        terms[word] = terms.get(word, Fraction(0)) + coeff
    return Element(terms)


def random_multipartition(rng: random.Random, dim: int, max_weight: int) -> MultiPartition:
    weight = rng.randint(0, max_weight)
    assignments: dict[int, list[int]] = {}
    while weight > 0:
        size = rng.randint(1, weight)
        assignments.setdefault(rng.randrange(dim), []).append(size)
        weight -= size
    return MultiPartition({i: parts for i, parts in assignments.items()})
