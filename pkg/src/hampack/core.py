"""Words, codes and elementary operations in the Hamming graph H(n, q).

The vertices of H(n, q) are the length-n words over the alphabet
{0, ..., q-1}; two words are adjacent iff they differ in exactly one
coordinate.  Everything downstream (packing verification, bounds,
unitrade machinery, searches) consumes the value types defined here:

  Space -- the pair (n, q) with its validity rules
  Word  -- one vertex; binary words are bit-packed into a single int
           with coordinate 0 at the most significant bit, so integer
           order equals lexicographic order on digit strings; q-ary
           words are packed into bytes (bytes order is again lex order)
  Code  -- an immutable multiset of words of a common space, stored
           sorted, so equal codes compare equal and output is diffable

Multiplicities are kept on purpose: extremal arguments distinguish
codes with repeated words, and verification reports duplicates rather
than silently collapsing them.

Text interchange format (the only on-disk format used by the package)::

    q n
    <word>      # one n-digit string per line; repeats encode multiplicity

Lines starting with '#' and blank lines are ignored.  Writers emit words
in canonical (lexicographic) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, TextIO

MAX_Q = 10         # digit-string I/O: one character per symbol
MAX_BINARY_N = 64  # binary fast path: one machine word of bits


@dataclass(frozen=True, slots=True)
class Space:
    """Parameters (n, q) of the Hamming graph H(n, q)."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"word length must be positive, got n={self.n}")
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got q={self.q}")
        if self.q > MAX_Q:
            raise ValueError(f"alphabet size {self.q} exceeds digit-string limit {MAX_Q}")
        if self.q == 2 and self.n > MAX_BINARY_N:
            raise ValueError(f"binary length {self.n} exceeds bit-packing limit {MAX_BINARY_N}")

    @property
    def size(self) -> int:
        """Number of vertices q**n."""
        return self.q ** self.n

    @property
    def degree(self) -> int:
        """Vertex degree n*(q-1) of H(n, q)."""
        return self.n * (self.q - 1)

    def ball_size(self, r: int) -> int:
        """|B_r| = sum_{i<=r} C(n,i)(q-1)^i."""
        if not 0 <= r <= self.n:
            raise ValueError(f"radius {r} out of range 0..{self.n}")
        return sum(comb(self.n, i) * (self.q - 1) ** i for i in range(r + 1))

    def __iter__(self) -> Iterator["Word"]:
        """All q**n words in lexicographic order."""
        if self.q == 2:
            for key in range(1 << self.n):
                yield Word(self, key)
        else:
            for symbols in product(range(self.q), repeat=self.n):
                yield Word(self, bytes(symbols))

    def word(self, text: str) -> "Word":
        """Parse an n-character digit string."""
        return Word.from_string(text, self.q)

    def zero(self) -> "Word":
        return Word(self, 0 if self.q == 2 else bytes(self.n))


@dataclass(frozen=True, slots=True)
class Word:
    """One vertex of H(n, q).

    ``key`` is an int (bit-packed, q=2) or a bytes object (q>2); in both
    cases comparing keys of a common space is the lexicographic order on
    digit strings.
    """

    space: Space
    key: int | bytes

    def __post_init__(self) -> None:
        if self.space.q == 2:
            if not isinstance(self.key, int) or not 0 <= self.key < (1 << self.space.n):
                raise ValueError("binary word key out of range")
        else:
            if not isinstance(self.key, bytes) or len(self.key) != self.space.n:
                raise ValueError("word length does not match space")
            if any(s >= self.space.q for s in self.key):
                raise ValueError("symbol out of alphabet range")

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], q: int) -> "Word":
        syms = tuple(symbols)
        space = Space(len(syms), q)
        if q == 2:
            key = 0
            for s in syms:
                if s not in (0, 1):
                    raise ValueError(f"symbol {s} out of range for q=2")
                key = (key << 1) | s
            return cls(space, key)
        return cls(space, bytes(syms))

    @classmethod
    def from_string(cls, text: str, q: int) -> "Word":
        try:
            return cls.from_symbols((int(ch) for ch in text), q)
        except ValueError as exc:
            raise ValueError(f"bad word {text!r} over alphabet 0..{q - 1}: {exc}") from None

    @property
    def symbols(self) -> tuple[int, ...]:
        n = self.space.n
        if self.space.q == 2:
            return tuple((self.key >> (n - 1 - i)) & 1 for i in range(n))
        return tuple(self.key)

    @property
    def parity(self) -> int:
        """Sum of symbols mod 2 (the parity bit for q=2)."""
        if self.space.q == 2:
            return self.key.bit_count() & 1
        return sum(self.key) & 1

    def __str__(self) -> str:
        return "".join(str(s) for s in self.symbols)

    def __lt__(self, other: "Word") -> bool:
        _check_same_space(self, other)
        return self.key < other.key

    def __le__(self, other: "Word") -> bool:
        _check_same_space(self, other)
        return self.key <= other.key

    def __add__(self, other: "Word") -> "Word":
        """Coordinatewise addition mod q."""
        _check_same_space(self, other)
        if self.space.q == 2:
            return Word(self.space, self.key ^ other.key)
        q = self.space.q
        return Word(self.space, bytes((a + b) % q for a, b in zip(self.key, other.key)))

    def __neg__(self) -> "Word":
        if self.space.q == 2:
            return self
        q = self.space.q
        return Word(self.space, bytes((-a) % q for a in self.key))

    def __sub__(self, other: "Word") -> "Word":
        return self + (-other)


def _check_same_space(x: Word, y: Word) -> None:
    if x.space != y.space:
        raise ValueError(f"space mismatch: {x.space} vs {y.space}")


def hamming_distance(x: Word, y: Word) -> int:
    """Number of coordinates in which x and y differ."""
    _check_same_space(x, y)
    if x.space.q == 2:
        return (x.key ^ y.key).bit_count()
    return sum(a != b for a, b in zip(x.key, y.key))


def weight(x: Word) -> int:
    """Number of nonzero symbols."""
    if x.space.q == 2:
        return x.key.bit_count()
    return sum(s != 0 for s in x.key)


def antipode(x: Word) -> Word:
    """x + all-one word (binary only)."""
    if x.space.q != 2:
        raise ValueError("antipode is defined for q=2 only")
    return Word(x.space, x.key ^ ((1 << x.space.n) - 1))


def ball(center: Word, r: int) -> Iterator[Word]:
    """All words at distance <= r from the center, each exactly once."""
    space = center.space
    if not 0 <= r <= space.n:
        raise ValueError(f"radius {r} out of range 0..{space.n}")
    n, q = space.n, space.q
    if q == 2:
        key = center.key
        for k in range(r + 1):
            for positions in combinations(range(n), k):
                flip = 0
                for i in positions:
                    flip |= 1 << (n - 1 - i)
                yield Word(space, key ^ flip)
    else:
        base = center.key
        for k in range(r + 1):
            for positions in combinations(range(n), k):
                for deltas in product(range(1, q), repeat=k):
                    syms = bytearray(base)
                    for i, d in zip(positions, deltas):
                        syms[i] = (syms[i] + d) % q
                    yield Word(space, bytes(syms))


def coverage_multiplicity(code: "Code", v: Word, r: int) -> int:
    """Multiset count of codewords within distance r of v."""
    if code.space != v.space:
        raise ValueError(f"space mismatch: {code.space} vs {v.space}")
    return sum(1 for c in code if hamming_distance(c, v) <= r)


class Code:
    """An immutable multiset of words of one space, stored sorted."""

    __slots__ = ("space", "words")

    def __init__(self, space: Space, words: Iterable[Word]):
        ws = sorted(words, key=lambda w: w.key)
        for w in ws:
            if w.space != space:
                raise ValueError(f"word {w} does not live in {space}")
        self.space = space
        self.words = tuple(ws)

    @classmethod
    def from_strings(cls, texts: Iterable[str], q: int) -> "Code":
        words = [Word.from_string(t, q) for t in texts]
        if not words:
            raise ValueError("cannot infer the space of an empty code; pass Space explicitly")
        return cls(words[0].space, words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in set(self.words)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Code) and self.space == other.space and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.space, self.words))

    def __repr__(self) -> str:
        return f"Code(n={self.space.n}, q={self.space.q}, size={len(self.words)})"

    def multiplicity(self, w: Word) -> int:
        return sum(1 for x in self.words if x == w)

    def duplicate_words(self) -> list[Word]:
        """Distinct words occurring with multiplicity > 1."""
        dups, prev, run = [], None, 0
        for w in self.words:
            if prev is not None and w == prev:
                run += 1
                if run == 2:
                    dups.append(w)
            else:
                prev, run = w, 1
        return dups

    def support(self) -> "Code":
        """The underlying set (multiplicities dropped)."""
        seen, out = set(), []
        for w in self.words:
            if w.key not in seen:
                seen.add(w.key)
                out.append(w)
        return Code(self.space, out)

    def bit_list(self) -> list[int]:
        """Sorted bit-packed keys (binary codes only; the fast-path view)."""
        if self.space.q != 2:
            raise ValueError("bit_list is available for q=2 only")
        return [w.key for w in self.words]

    @classmethod
    def from_bits(cls, space: Space, keys: Iterable[int]) -> "Code":
        if space.q != 2:
            raise ValueError("from_bits is available for q=2 only")
        return cls(space, (Word(space, k) for k in keys))

    def translate(self, t: Word) -> "Code":
        return Code(self.space, (w + t for w in self.words))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_code(code: Code) -> str:
    lines = [f"{code.space.q} {code.space.n}"]
    lines.extend(str(w) for w in code.words)
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> Code:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file: missing 'q n' header")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header {lines[0]!r}: expected 'q n'")
    q, n = int(header[0]), int(header[1])
    space = Space(n, q)
    words = []
    for ln in lines[1:]:
        if len(ln) != n:
            raise ValueError(f"word {ln!r} has length {len(ln)}, expected {n}")
        words.append(space.word(ln))
    return Code(space, words)


def write_code(code: Code, stream: TextIO) -> None:
    stream.write(format_code(code))


def read_code(stream: TextIO) -> Code:
    return parse_code(stream.read())
