"""The Heisenberg (oscillator) algebra on a based rational vector space.

Elements are exact rational combinations of words in generators a_i(n),
where i is a basis index and n a nonzero integer mode.  Negative modes
create, positive modes annihilate, and modes of opposite sign interact
through the defining relation

    a_i(m) a_j(-n)  =  a_j(-n) a_i(m) + delta(m, n) * m * <i, j>,   m, n > 0,

with <i, j> the (possibly asymmetric) bilinear pairing on the basis.  The
first slot of the pairing always carries the index of the positive-mode
generator; with an asymmetric pairing this ordering is exactly what keeps
the induced bracket antisymmetric.  Generators whose modes share a sign
commute, and the unit is central.

`normal_order` rewrites an arbitrary element into the basis of normally
ordered words (all creators left of all annihilators, each block in
canonical order) and is the single primitive that every identity check in
the package reduces to.  Coefficients are `fractions.Fraction` throughout;
no floating point enters the core.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .partitions import EMPTY_MULTIPARTITION, MultiPartition

Scalar = Union[int, Fraction]


class BasisIndexError(ValueError):
    """A basis index outside the range of the configured dimension."""


class InvalidModeError(ValueError):
    """A zero mode for an oscillator generator, or a negative family level."""


class GeneratorSymbol(NamedTuple):
    """One generator a_index(mode); mode != 0."""

    index: int
    mode: int

    def __str__(self) -> str:
        return "a(%d,%d)" % (self.index, self.mode)


def symbol(index: int, mode: int) -> GeneratorSymbol:
    """Validated constructor for a generator symbol."""
    if mode == 0:
        raise InvalidModeError("generator mode must be nonzero")
    if index < 0:
        raise BasisIndexError("basis index must be nonnegative, got %d" % index)
    return GeneratorSymbol(index, mode)


Word = tuple[GeneratorSymbol, ...]


class PairingMatrix:
    """A square matrix of exact rationals <beta_i, beta_j>.

    Not required to be symmetric.  Entries may be ints, Fractions, or
    strings like "3/4"; floats are rejected to keep arithmetic exact.
    Dimension 0 is allowed (the algebra degenerates to the rationals).
    """

    __slots__ = ("rows", "dim")

    def __init__(self, rows: Iterable[Iterable[Scalar | str]]) -> None:
        cleaned = []
        for row in rows:
            entries = []
            for x in row:
                if isinstance(x, float):
                    raise ValueError("pairing entries must be exact rationals, got float %r" % x)
                entries.append(Fraction(x))
            cleaned.append(tuple(entries))
        self.rows = tuple(cleaned)
        self.dim = len(self.rows)
        for row in self.rows:
            if len(row) != self.dim:
                raise ValueError("pairing matrix must be square")

    @classmethod
    def identity(cls, dim: int) -> "PairingMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise BasisIndexError(
                "basis index out of range: (%d, %d) for dimension %d" % (i, j, self.dim)
            )
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PairingMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "PairingMatrix(%r)" % ([list(map(str, row)) for row in self.rows],)


def _creation_key(g: GeneratorSymbol) -> tuple[int, int]:
    # canonical order inside the creation block: index ascending, then
    # mode descending (-1 before -2)
    return (g.index, -g.mode)


def _annihilation_key(g: GeneratorSymbol) -> tuple[int, int]:
    # canonical order inside the annihilation block: index, then mode ascending
    return (g.index, g.mode)


def creation_word(nu: MultiPartition) -> Word:
    """The canonical creation word a(-nu): index ascending, part sizes ascending."""
    return tuple(
        GeneratorSymbol(i, -size)
        for i, part in nu.assignments
        for size in sorted(part.parts)
    )


def annihilation_word(mu: MultiPartition) -> Word:
    """The canonical annihilation word a(mu): index ascending, part sizes ascending."""
    return tuple(
        GeneratorSymbol(i, size)
        for i, part in mu.assignments
        for size in sorted(part.parts)
    )


def canonical_word(nu: MultiPartition, mu: MultiPartition) -> Word:
    return creation_word(nu) + annihilation_word(mu)


def _word_from_block(symbols: Iterable[GeneratorSymbol]) -> MultiPartition:
    grouped: dict[int, list[int]] = {}
    for g in symbols:
        grouped.setdefault(g.index, []).append(abs(g.mode))
    return MultiPartition({i: parts for i, parts in grouped.items()})


def _format_coeff(c: Fraction) -> str:
    return str(c)


def _format_word(word: Word) -> str:
    if not word:
        return "1"
    chunks = []
    run_sym, run_len = word[0], 1
    for g in word[1:]:
        if g == run_sym:
            run_len += 1
        else:
            chunks.append(str(run_sym) + ("^%d" % run_len if run_len > 1 else ""))
            run_sym, run_len = g, 1
    chunks.append(str(run_sym) + ("^%d" % run_len if run_len > 1 else ""))
    return " ".join(chunks)


def _format_terms(pairs: list[tuple[Word, Fraction]]) -> str:
    if not pairs:
        return "0"
    out = []
    for k, (word, coeff) in enumerate(pairs):
        mag = abs(coeff)
        if word and mag == 1:
            body = _format_word(word)
        elif word:
            body = "%s %s" % (_format_coeff(mag), _format_word(word))
        else:
            body = _format_coeff(mag)
        if k == 0:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(out)


class Element:
    """A finite rational linear combination of words in the generators.

    The free product: multiplication concatenates words and no rewriting is
    applied.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None) -> None:
        clean: dict[Word, Fraction] = {}
        if terms:
            for word, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(word)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def one(cls) -> "Element":
        return cls({(): Fraction(1)})

    @classmethod
    def scalar(cls, c: Scalar) -> "Element":
        return cls({(): Fraction(c)})

    @classmethod
    def generator(cls, index: int, mode: int) -> "Element":
        return cls({(symbol(index, mode),): Fraction(1)})

    @classmethod
    def from_word(cls, symbols: Iterable[GeneratorSymbol], coeff: Scalar = 1) -> "Element":
        return cls({tuple(symbols): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self.terms)
        for word, c in other.terms.items():
            acc[word] = acc.get(word, Fraction(0)) + c
        return Element(acc)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def __mul__(self, other: "Element | Scalar") -> "Element":
        if isinstance(other, Element):
            acc: dict[Word, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    acc[w] = acc.get(w, Fraction(0)) + c1 * c2
            return Element(acc)
        if isinstance(other, (int, Fraction)):
            return Element({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "Element":
        if isinstance(other, (int, Fraction)):
            return Element({w: other * c for w, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Element.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __repr__(self) -> str:
        return "Element(%s)" % str(self)

    def __str__(self) -> str:
        pairs = sorted(self.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))
        return _format_terms(pairs)


def multiply(x: Element, y: Element) -> Element:
    """Free-product multiplication; alias for x * y."""
    return x * y


NormalKey = tuple[MultiPartition, MultiPartition]


def _normal_sort_key(key: NormalKey) -> tuple:
    nu, mu = key
    word = canonical_word(nu, mu)
    return (-(nu.weight + mu.weight), word)


class NormalElement:
    """An element written in the normally ordered basis a(-nu) a(mu).

    Keys are pairs (nu, mu) of multi-partitions: nu labels the creation
    block, mu the annihilation block.  The scalar component sits at the
    pair of empty multi-partitions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[NormalKey, Scalar] | None = None) -> None:
        clean: dict[NormalKey, Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[key] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "NormalElement":
        return cls()

    @classmethod
    def scalar(cls, c: Scalar) -> "NormalElement":
        return cls({(EMPTY_MULTIPARTITION, EMPTY_MULTIPARTITION): Fraction(c)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, nu: MultiPartition, mu: MultiPartition) -> Fraction:
        return self.terms.get((nu, mu), Fraction(0))

    @property
    def scalar_part(self) -> Fraction:
        return self.coefficient(EMPTY_MULTIPARTITION, EMPTY_MULTIPARTITION)

    def __add__(self, other: "NormalElement") -> "NormalElement":
        if not isinstance(other, NormalElement):
            return NotImplemented
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, Fraction(0)) + c
        return NormalElement(acc)

    def __sub__(self, other: "NormalElement") -> "NormalElement":
        return self + (-other)

    def __neg__(self) -> "NormalElement":
        return NormalElement({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> "NormalElement":
        if isinstance(other, (int, Fraction)):
            return NormalElement({k: c * other for k, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "NormalElement":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NormalElement) and self.terms == other.terms

    def to_element(self) -> Element:
        """The same element of the algebra, as a combination of canonical words."""
        return Element({canonical_word(nu, mu): c for (nu, mu), c in self.terms.items()})

    def __repr__(self) -> str:
        return "NormalElement(%s)" % str(self)

    def __str__(self) -> str:
        keys = sorted(self.terms, key=_normal_sort_key)
        return _format_terms([(canonical_word(nu, mu), self.terms[(nu, mu)]) for nu, mu in keys])


def commutator_scalar(g: GeneratorSymbol, h: GeneratorSymbol, pairing: PairingMatrix) -> Fraction:
    """The scalar [a_g, a_h] in the algebra; zero unless the modes cancel.

    When the modes cancel, the value is (mode of g) times the pairing entry
    whose first index belongs to the positive-mode generator.
    """
    for sym in (g, h):
        if not (0 <= sym.index < pairing.dim):
            raise BasisIndexError(
                "basis index %d out of range for dimension %d" % (sym.index, pairing.dim)
            )
        if sym.mode == 0:
            raise InvalidModeError("generator mode must be nonzero")
    if g.mode + h.mode != 0:
        return Fraction(0)
    ann, cre = (g, h) if g.mode > 0 else (h, g)
    return Fraction(g.mode) * pairing.entry(ann.index, cre.index)


def _normal_word(word: Word, pairing: PairingMatrix) -> dict[NormalKey, Fraction]:
    """Normal form of a single word, as a map (nu, mu) -> coefficient.

    Folds the symbols left to right, keeping the partial product normally
    ordered.  Appending an annihilator is free; appending a creator commutes
    it through the annihilation block, producing one contraction term for
    each removable part of matching size.
    """
    state: dict[NormalKey, Fraction] = {(EMPTY_MULTIPARTITION, EMPTY_MULTIPARTITION): Fraction(1)}
    for g in word:
        if not (0 <= g.index < pairing.dim):
            raise BasisIndexError(
                "basis index %d out of range for dimension %d" % (g.index, pairing.dim)
            )
        if g.mode == 0:
            raise InvalidModeError("generator mode must be nonzero")
        nxt: dict[NormalKey, Fraction] = {}
        if g.mode > 0:
            for (nu, mu), c in state.items():
                key = (nu, mu.add_part(g.index, g.mode))
                nxt[key] = nxt.get(key, Fraction(0)) + c
        else:
            size = -g.mode
            for (nu, mu), c in state.items():
                key = (nu.add_part(g.index, size), mu)
                nxt[key] = nxt.get(key, Fraction(0)) + c
                for j in mu.support:
                    count = mu.partition_at(j).multiplicity(size)
                    if count:
                        scalar = c * count * size * pairing.entry(j, g.index)
                        key = (nu, mu.remove_part(j, size))
                        nxt[key] = nxt.get(key, Fraction(0)) + scalar
        state = {k: v for k, v in nxt.items() if v}
    return state


def normal_order(x: Element, pairing: PairingMatrix) -> NormalElement:
    """The unique representation of x in the normally ordered basis."""
    acc: dict[NormalKey, Fraction] = {}
    for word, coeff in x.terms.items():
        for key, c in _normal_word(word, pairing).items():
            acc[key] = acc.get(key, Fraction(0)) + coeff * c
    return NormalElement(acc)


def commutator(x: Element, y: Element, pairing: PairingMatrix) -> NormalElement:
    """normal_order(x*y - y*x)."""
    return normal_order(x * y - y * x, pairing)


def rewrite_positions(word: Word) -> list[int]:
    """Positions i where word[i] annihilates and word[i+1] creates."""
    return [
        i
        for i in range(len(word) - 1)
        if word[i].mode > 0 and word[i + 1].mode < 0
    ]


def rewrite_step(word: Word, position: int, pairing: PairingMatrix) -> Element:
    """One elementary rewrite at an admissible position.

    Replaces the adjacent pair annihilator*creator by creator*annihilator
    plus the contraction scalar times the shortened word.  Exposed so that
    confluence of the rewriting system can be exercised directly.
    """
    if position not in rewrite_positions(word):
        raise ValueError("no admissible annihilator/creator pair at position %d" % position)
    g, h = word[position], word[position + 1]
    swapped = word[:position] + (h, g) + word[position + 2 :]
    acc: dict[Word, Fraction] = {swapped: Fraction(1)}
    scalar = commutator_scalar(g, h, pairing)
    if scalar:
        shorter = word[:position] + word[position + 2 :]
        acc[shorter] = acc.get(shorter, Fraction(0)) + scalar
    return Element(acc)


def word_blocks(nu_mu_word: Word) -> NormalKey:
    """Multi-partition labels of a normally ordered word (creators then
    annihilators); raises if the word is not normally ordered."""
    creators = [g for g in nu_mu_word if g.mode < 0]
    annihilators = [g for g in nu_mu_word if g.mode > 0]
    if tuple(creators) + tuple(annihilators) != nu_mu_word:
        raise ValueError("word is not normally ordered")
    return (_word_from_block(creators), _word_from_block(annihilators))
