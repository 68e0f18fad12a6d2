"""Exact linear algebra over GF(2), GF(q) and the mixed Z2/Z4 alphabet.

Three kinds of generating structure feed the explicit constructions:

  * plain GF(2) generator matrices (spans, ranks, coset unions),
  * mixed Z2Z4-additive matrices, whose rows have a block of binary
    coordinates (arithmetic mod 2) and a block of quaternary coordinates
    (arithmetic mod 4), mapped to binary words by the Gray map
    0->00, 1->01, 2->11, 3->10 applied to each quaternary symbol,
  * propelinear maps x -> t + pi(x), a translation composed with a
    coordinate permutation; these compose and invert, and orbit/closure
    computations give codes with a regular automorphism subgroup.

The Gray image of a mixed word lists the Gray pairs of the quaternary
block first, then the binary block, so that the quaternary generators of
the embedded data reproduce the matching binary generator rows exactly.

The permutation convention is (pi . x)[pi[i]] = x[i]: pi moves
coordinate i to position pi[i].  With cycles of length > 2 the opposite
convention gives different orbits; this one is the convention under
which the embedded propelinear generators reproduce the documented
96-word unitrade, which the test suite verifies.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Code, Space, Word

GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


# ---------------------------------------------------------------------------
# GF(2) and GF(q) vector machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryMatrix:
    """A list of binary words of common length, used as matrix rows."""

    rows: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.rows:
            space = self.rows[0].space
            if space.q != 2:
                raise ValueError("BinaryMatrix requires q=2 words")
            for r in self.rows:
                if r.space != space:
                    raise ValueError("ragged rows: all rows must share one space")

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "BinaryMatrix":
        return cls(tuple(Word.from_string(t, 2) for t in texts))

    @property
    def space(self) -> Space:
        if not self.rows:
            raise ValueError("empty matrix has no space")
        return self.rows[0].space

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r.symbols[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.space.n)]


def _as_rows(gens: BinaryMatrix | Sequence[Word]) -> tuple[Word, ...]:
    if isinstance(gens, BinaryMatrix):
        return gens.rows
    return tuple(gens)


def gf2_span(gens: BinaryMatrix | Sequence[Word], space: Space | None = None) -> Code:
    """The 2**rank distinct GF(2) sums of row subsets, multiplicity 1."""
    rows = _as_rows(gens)
    if not rows and space is None:
        raise ValueError("empty generator set: pass the ambient space explicitly")
    space = space if space is not None else rows[0].space
    if space.q != 2:
        raise ValueError("gf2_span requires q=2")
    span = {0}
    for r in rows:
        if r.space != space:
            raise ValueError("ragged rows: generator outside the ambient space")
        span |= {v ^ r.key for v in span}
    return Code.from_bits(space, span)


def gf2_rank(code: Code | Sequence[Word]) -> int:
    """Dimension of the GF(2) span of the words."""
    words = list(code)
    basis: list[int] = []
    for w in words:
        if w.space.q != 2:
            raise ValueError("gf2_rank requires q=2")
        v = w.key
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def coset_union(group_code: Code, reps: Sequence[Word]) -> Code:
    """Union of the cosets group_code + r over the given representatives.

    The carrier must actually be a group under coordinatewise addition
    mod q (checked).  Representatives falling in a common coset collapse,
    with a warning, since the union is taken as a set.
    """
    space = group_code.space
    members = set(group_code.words)
    if len(members) != len(group_code):
        raise ValueError("coset carrier contains duplicate words")
    zero = space.zero()
    if zero not in members:
        raise ValueError("coset carrier is not a group: missing the zero word")
    for a in members:
        for b in members:
            if a + b not in members:
                raise ValueError(f"coset carrier is not closed under addition: {a} + {b}")
    union: dict[int | bytes, Word] = {}
    expected = 0
    for r in reps:
        expected += len(members)
        for k in members:
            w = k + r
            union[w.key] = w
    if len(union) != expected:
        warnings.warn("coset representatives are not in distinct cosets; duplicates collapsed")
    return Code(space, union.values())


# ---------------------------------------------------------------------------
# Z2Z4-additive words and matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class MixedWord:
    """A word with a Z2 block (symbols mod 2) and a Z4 block (symbols mod 4)."""

    z2: tuple[int, ...]
    z4: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (0, 1) for s in self.z2):
            raise ValueError("Z2 symbols must be 0 or 1")
        if any(not 0 <= s <= 3 for s in self.z4):
            raise ValueError("Z4 symbols must be in 0..3")

    @classmethod
    def from_string(cls, text: str) -> "MixedWord":
        """Parse 'bb|qqqq' (binary digits, a bar, quaternary digits)."""
        left, _, right = text.partition("|")
        return cls(tuple(int(c) for c in left.strip()), tuple(int(c) for c in right.strip()))

    def __add__(self, other: "MixedWord") -> "MixedWord":
        if len(self.z2) != len(other.z2) or len(self.z4) != len(other.z4):
            raise ValueError("mixed word shape mismatch")
        return MixedWord(
            tuple((a + b) % 2 for a, b in zip(self.z2, other.z2)),
            tuple((a + b) % 4 for a, b in zip(self.z4, other.z4)),
        )

    def scaled(self, c: int) -> "MixedWord":
        return MixedWord(
            tuple((c * a) % 2 for a in self.z2),
            tuple((c * a) % 4 for a in self.z4),
        )

    def __str__(self) -> str:
        return "".join(map(str, self.z2)) + "|" + "".join(map(str, self.z4))


@dataclass(frozen=True)
class MixedMatrix:
    """Rows of common Z2/Z4 shape; the generator form of a Z2Z4-additive code."""

    binary_cols: int
    quaternary_cols: int
    rows: tuple[MixedWord, ...]

    def __post_init__(self) -> None:
        for r in self.rows:
            if len(r.z2) != self.binary_cols or len(r.z4) != self.quaternary_cols:
                raise ValueError("row shape does not match the declared column counts")

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "MixedMatrix":
        rows = tuple(MixedWord.from_string(t) for t in texts)
        if not rows:
            raise ValueError("empty mixed matrix")
        return cls(len(rows[0].z2), len(rows[0].z4), rows)

    def format(self) -> str:
        head = f"z2 {self.binary_cols} z4 {self.quaternary_cols}"
        return "\n".join([head] + [str(r) for r in self.rows]) + "\n"

    @classmethod
    def parse(cls, text: str) -> "MixedMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        head = lines[0].split()
        if len(head) != 4 or head[0] != "z2" or head[2] != "z4":
            raise ValueError(f"bad mixed matrix header {lines[0]!r}: expected 'z2 <b> z4 <k>'")
        b, k = int(head[1]), int(head[3])
        rows = tuple(MixedWord.from_string(ln) for ln in lines[1:])
        return cls(b, k, rows)


def gray_map(w: MixedWord) -> Word:
    """Binary image of a mixed word: Gray pairs of the Z4 block, then the Z2 block."""
    bits: list[int] = []
    for s in w.z4:
        bits.extend(GRAY[s])
    bits.extend(w.z2)
    return Word.from_symbols(bits, 2)


def gray_image(words: Iterable[MixedWord]) -> Code:
    ws = [gray_map(w) for w in words]
    if not ws:
        raise ValueError("cannot take the Gray image of an empty set")
    return Code(ws[0].space, ws)


def z4_module_span(gens: MixedMatrix | Sequence[MixedWord]) -> list[MixedWord]:
    """Closure of the generators under mixed addition (Z2 mod 2, Z4 mod 4);
    with no generators the span is the zero word alone."""
    if isinstance(gens, MixedMatrix):
        rows = list(gens.rows)
        shape = (gens.binary_cols, gens.quaternary_cols)
    else:
        rows = list(gens)
        if not rows:
            raise ValueError("empty generator list: the zero shape is ambiguous; pass a MixedMatrix")
        shape = (len(rows[0].z2), len(rows[0].z4))
    zero = MixedWord((0,) * shape[0], (0,) * shape[1])
    span = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in rows:
                w = v + g
                if w not in span:
                    span.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(span, key=lambda m: (m.z2, m.z4))


# ---------------------------------------------------------------------------
# propelinear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PropelinearMap:
    """x -> translation + pi(x), with (pi . x)[pi[i]] = x[i]."""

    translation: Word
    permutation: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.translation.space.n
        if self.translation.space.q != 2:
            raise ValueError("propelinear maps are defined on binary spaces")
        if sorted(self.permutation) != list(range(n)):
            raise ValueError("permutation is not a bijection of 0..n-1")

    @classmethod
    def identity(cls, space: Space) -> "PropelinearMap":
        return cls(space.zero(), tuple(range(space.n)))

    @classmethod
    def from_cycles(cls, translation: str, cycles: Sequence[Sequence[int]], n: int) -> "PropelinearMap":
        perm = list(range(n))
        for cyc in cycles:
            for idx, a in enumerate(cyc):
                perm[a] = cyc[(idx + 1) % len(cyc)]
        return cls(Word.from_string(translation, 2), tuple(perm))

    def __call__(self, x: Word) -> Word:
        return apply_propelinear(self, x)

    def compose(self, other: "PropelinearMap") -> "PropelinearMap":
        """self after other: (self*other)(x) = self(other(x))."""
        n = len(self.permutation)
        if len(other.permutation) != n:
            raise ValueError("length mismatch in composition")
        perm = tuple(self.permutation[other.permutation[i]] for i in range(n))
        return PropelinearMap(self.translation + _permute(self.permutation, other.translation), perm)

    def __mul__(self, other: "PropelinearMap") -> "PropelinearMap":
        return self.compose(other)


def _permute(perm: tuple[int, ...], x: Word) -> Word:
    n = x.space.n
    key = x.key
    out = 0
    for i in range(n):
        if (key >> (n - 1 - i)) & 1:
            out |= 1 << (n - 1 - perm[i])
    return Word(x.space, out)


def apply_propelinear(m: PropelinearMap, x: Word) -> Word:
    """translation + pi(x); an isometry of H(n, 2)."""
    if x.space != m.translation.space:
        raise ValueError("length mismatch between map and word")
    return m.translation + _permute(m.permutation, x)


def group_closure(gens: Sequence[PropelinearMap]) -> list[PropelinearMap]:
    """Smallest composition-closed set containing the generators and identity."""
    if not gens:
        raise ValueError("group_closure needs at least one generator to fix the space")
    space = gens[0].translation.space
    ident = PropelinearMap.identity(space)
    els = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = g * a
                if c not in els:
                    els.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(els, key=lambda m: (m.translation.key, m.permutation))


def orbit(gens: Sequence[PropelinearMap], seed: Word) -> Code:
    """Orbit of a word under the group generated by the maps."""
    seen = {seed.key: seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g(x)
                if y.key not in seen:
                    seen[y.key] = y
                    nxt.append(y)
        frontier = nxt
    return Code(seed.space, seen.values())
