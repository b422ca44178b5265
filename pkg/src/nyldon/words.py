"""Words over small ordered alphabets, morphisms and the named word families.

Words are immutable byte strings tied to an :class:`Alphabet`.  The order on
symbols is the order in which the alphabet lists them, which need not agree
with byte values; comparisons go through :attr:`Word.key`, a byte string of
symbol ranks, so that plain ``bytes`` comparison gives the lexicographic
order (a proper prefix sorts first).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterator, Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    ByteNotInAlphabet,
    EmptyWord,
    InvalidAlphabet,
    InvalidFamilyIndex,
    LengthCapExceeded,
    NonBinaryAlphabet,
    NotAPrefix,
    PrefixStripFailed,
)

DEFAULT_CAP = 1 << 26


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        return text.encode("ascii")
    return bytes(text)


@dataclass(frozen=True)
class Alphabet:
    """Distinct single-byte symbols; listing order is the total order."""

    symbols: bytes

    def __post_init__(self):
        symbols = _as_bytes(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise InvalidAlphabet("alphabet must not be empty")
        if len(set(symbols)) != len(symbols):
            raise InvalidAlphabet(f"alphabet {symbols!r} repeats a symbol")

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        if isinstance(symbol, int):
            return symbol in self.symbols
        return len(symbol) == 1 and _as_bytes(symbol)[0] in self.symbols

    def __str__(self):
        return self.symbols.decode("ascii", "replace")

    @property
    def is_binary(self) -> bool:
        return len(self.symbols) == 2

    @cached_property
    def _rank_table(self) -> bytes | None:
        # None when byte order already matches listing order
        if list(self.symbols) == sorted(self.symbols):
            return None
        table = bytearray(256)
        for rank, sym in enumerate(self.symbols):
            table[sym] = rank
        return bytes(table)

    @cached_property
    def _swap_table(self) -> bytes:
        if not self.is_binary:
            raise NonBinaryAlphabet(f"alphabet {self} has {len(self)} symbols, need 2")
        a, b = self.symbols
        return bytes.maketrans(bytes([a, b]), bytes([b, a]))

    def sort_key(self, data: bytes) -> bytes:
        table = self._rank_table
        return data if table is None else data.translate(table)

    def swap(self, data: bytes) -> bytes:
        return data.translate(self._swap_table)

    def first_foreign(self, data: bytes) -> int | None:
        """Position of the first byte of ``data`` outside the alphabet."""
        rest = data.translate(None, self.symbols)
        if not rest:
            return None
        bad = set(rest)
        return next(i for i, c in enumerate(data) if c in bad)


AB = Alphabet(b"ab")


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
@dataclass(frozen=True, eq=False)
class Word:
    data: bytes
    alphabet: Alphabet = field(default=AB)

    def __post_init__(self):
        data = _as_bytes(self.data)
        object.__setattr__(self, "data", data)
        pos = self.alphabet.first_foreign(data)
        if pos is not None:
            raise ByteNotInAlphabet(pos, bytes([data[pos]]))

    @cached_property
    def key(self) -> bytes:
        return self.alphabet.sort_key(self.data)

    @property
    def text(self) -> str:
        return self.data.decode("ascii")

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"Word({self.text!r})"

    def __len__(self):
        return len(self.data)

    def __bool__(self):
        return bool(self.data)

    def __iter__(self) -> Iterator[str]:
        return (chr(c) for c in self.data)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.data[index], self.alphabet)
        return chr(self.data[index])

    def __hash__(self):
        return hash((self.data, self.alphabet))

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.data == other.data and self.alphabet == other.alphabet
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return self.key < other.key

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return Word(self.data + other.data, self.alphabet)

    def startswith(self, prefix: Word) -> bool:
        return self.data.startswith(prefix.data)

    def endswith(self, suffix: Word) -> bool:
        return self.data.endswith(suffix.data)


def _same_alphabet(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"{u.alphabet} vs {v.alphabet}")


def make_word(text, alphabet: Alphabet = AB) -> Word:
    return Word(_as_bytes(text), alphabet)


def compare(u: Word, v: Word) -> Ordering:
    _same_alphabet(u, v)
    a, b = u.key, v.key
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if a < b else Ordering.GREATER


def complement(w: Word) -> Word:
    """Swap the two letters of a binary alphabet."""
    return Word(w.alphabet.swap(w.data), w.alphabet)


def strip_prefix(w: Word, p: Word) -> Word:
    _same_alphabet(w, p)
    if not w.data.startswith(p.data):
        raise NotAPrefix(f"{p} is not a prefix of {w}")
    return Word(w.data[len(p):], w.alphabet)


def strip_suffix(w: Word, s: Word) -> Word:
    _same_alphabet(w, s)
    if not w.data.endswith(s.data):
        raise NotAPrefix(f"{s} is not a suffix of {w}")
    return Word(w.data[: len(w) - len(s)], w.alphabet)


def append(w: Word, s: Word) -> Word:
    return w + s


def drop_last(w: Word) -> Word:
    if not w:
        raise EmptyWord("cannot drop the last symbol of the empty word")
    return Word(w.data[:-1], w.alphabet)


def _check_cap(length: int, cap: int):
    if length > cap:
        raise LengthCapExceeded(cap, length)


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word substitution extended to words by concatenation."""

    images: Mapping[int, bytes]
    alphabet: Alphabet = AB

    def __post_init__(self):
        images = {}
        for sym, img in self.images.items():
            code = sym if isinstance(sym, int) else _as_bytes(sym)[0]
            images[code] = _as_bytes(img)
        missing = [chr(c) for c in self.alphabet.symbols if c not in images]
        if missing:
            raise InvalidAlphabet(f"no image for symbols {missing}")
        for img in images.values():
            pos = self.alphabet.first_foreign(img)
            if pos is not None:
                raise ByteNotInAlphabet(pos, bytes([img[pos]]))
        object.__setattr__(self, "images", images)

    def __hash__(self):
        return hash((tuple(sorted(self.images.items())), self.alphabet))

    def __call__(self, w: Word, power: int = 1, cap: int = DEFAULT_CAP) -> Word:
        return apply_morphism(self, w, power, cap)


def thue_morse_morphism(alphabet: Alphabet = AB) -> Morphism:
    if not alphabet.is_binary:
        raise NonBinaryAlphabet(f"alphabet {alphabet} has {len(alphabet)} symbols, need 2")
    a, b = alphabet.symbols
    return Morphism({a: bytes([a, b]), b: bytes([b, a])}, alphabet)


TAU = thue_morse_morphism()


def apply_morphism(m: Morphism, w: Word, power: int = 1, cap: int = DEFAULT_CAP) -> Word:
    if power < 1:
        raise ValueError("power must be >= 1")
    if w.alphabet != m.alphabet:
        raise AlphabetMismatch(f"{w.alphabet} vs {m.alphabet}")
    # images of single letters under m^power, then one pass over w
    images = dict(m.images)
    lengths = {c: len(img) for c, img in images.items()}
    for _ in range(power - 1):
        lengths = {c: sum(lengths[d] for d in m.images[c]) for c in images}
        if max(lengths.values()) > cap:
            # only fatal if a letter that actually occurs blows up
            used = set(w.data)
            if any(lengths[c] > cap for c in used):
                raise LengthCapExceeded(cap)
        images = {c: b"".join(images[d] for d in m.images[c]) for c in images}
    total = sum(w.data.count(c) * len(img) for c, img in images.items())
    _check_cap(total, cap)
    return Word(b"".join(map(images.__getitem__, w.data)), w.alphabet)


def fibonacci(k: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """F_0 = b, F_1 = a, F_k = F_{k-1} F_{k-2}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(alphabet) < 2:
        raise NonBinaryAlphabet("Fibonacci words need two symbols")
    la, lb = 1, 1  # |F_1|, |F_0|
    for _ in range(k - 1):
        la, lb = la + lb, la
    _check_cap(1 if k < 2 else la, cap)
    a, b = bytes(alphabet.symbols[:1]), bytes(alphabet.symbols[1:2])
    if k == 0:
        return Word(b, alphabet)
    cur, prev = a, b
    for _ in range(k - 1):
        cur, prev = cur + prev, cur
    return Word(cur, alphabet)


def thue_morse(n: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """TM_0 = a, TM_n = TM_{n-1} followed by its complement."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_cap(1 << n, cap)
    data = alphabet.symbols[:1]
    swap = alphabet.swap
    for _ in range(n):
        data += swap(data)
    return Word(data, alphabet)


def tm_prefix(length: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """Length-``length`` prefix of the infinite Thue-Morse word, by iterating tau on a."""
    if length < 0:
        raise ValueError("length must be >= 0")
    _check_cap(length, cap)
    tau = thue_morse_morphism(alphabet)
    w = Word(alphabet.symbols[:1], alphabet)
    while len(w) < length:
        w = apply_morphism(tau, w, 1, cap=max(cap, 2 * length))
    return w[:length]


def prime(w: Word) -> Word:
    """w' : the word without its last symbol."""
    return drop_last(w)


@dataclass(frozen=True)
class FamilyId:
    """Index (ell, k) of the twelve Nyldon families t_ell(k)."""

    ell: int
    k: int

    def __post_init__(self):
        if not 1 <= self.ell <= 12:
            raise InvalidFamilyIndex(f"ell={self.ell} not in [1, 12]")
        if self.k < 1:
            raise InvalidFamilyIndex(f"k={self.k} must be >= 1")


# Block recipes with A = TM_2k, B = complement(A), C = TM_{2k-1},
# D = complement(TM_{2k-2}); a trailing "'" drops the last symbol.
FAMILY_BLOCKS = {
    1: ("A", "B'"),
    2: ("A", "B"),
    3: ("A", "B", "B'"),
    4: ("A",),
    5: ("A", "C", "D'"),
    6: ("A", "A", "B'"),
    7: ("A", "A", "B"),
    8: ("A", "A", "B", "B'"),
    9: ("A", "B", "A", "A", "B'"),
    10: ("A", "B", "A", "A", "B"),
    11: ("A", "A", "B", "B", "A", "A", "B'"),
    12: ("A", "B", "A", "A", "B", "B", "A", "A", "B'"),
}

# lexicographic order of the twelve families at any fixed level k
FAMILY_ORDER = (4, 5, 6, 7, 8, 11, 1, 2, 9, 10, 12, 3)


def family_length(ell: int, k: int) -> int:
    FamilyId(ell, k)
    m = 4**k
    sizes = {"A": m, "B": m, "C": m // 2, "D": m // 4}
    total = 1
    for block in FAMILY_BLOCKS[ell]:
        total += sizes[block[0]] - block.endswith("'")
    return total


def family(ell: int, k: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """The word t_ell(k): the letter b followed by A/B blocks per FAMILY_BLOCKS."""
    fid = FamilyId(ell, k)
    _check_cap(family_length(ell, k), cap)
    blocks = FAMILY_BLOCKS[fid.ell]
    a_word = thue_morse(2 * k, alphabet).data
    parts = {"A": a_word, "B": alphabet.swap(a_word)}
    if "C" in "".join(blocks):
        parts["C"] = a_word[: len(a_word) // 2]
        parts["D"] = alphabet.swap(a_word[: len(a_word) // 4])
    out = [alphabet.symbols[1:2]]
    for block in blocks:
        piece = parts[block[0]]
        out.append(piece[:-1] if block.endswith("'") else piece)
    return Word(b"".join(out), alphabet)


W_BASE = (b"a", b"b", b"ba", b"baabbaa")


def w_seq(n: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """w_n: four literal words, then b TM_{2n-8} ~TM_{2n-6} ~TM'_{2n-6} (~ = complement)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 4:
        return _literal(W_BASE[n - 1], alphabet)
    m = 4 ** (n - 4)
    _check_cap(1 + m + 8 * m - 1, cap)
    b = Word(alphabet.symbols[1:2], alphabet)
    tail = complement(thue_morse(2 * n - 6, alphabet))
    return b + thue_morse(2 * n - 8, alphabet) + tail + drop_last(tail)


def w_tilde_seq(n: int, alphabet: Alphabet = AB, cap: int = DEFAULT_CAP) -> Word:
    """Same sequence through the tau^2 recurrence: strip baa, apply tau^2, re-append baa."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 4:
        return _literal(W_BASE[n - 1], alphabet)
    _check_cap(9 * 4 ** (n - 4), cap)
    b = Word(alphabet.symbols[1:2], alphabet)
    tm4_bar = complement(thue_morse(4, alphabet))
    w = b + thue_morse(2, alphabet) + tm4_bar + drop_last(tm4_bar)
    tau = thue_morse_morphism(alphabet)
    baa = _literal(b"baa", alphabet)
    for _ in range(n - 5):
        image = apply_morphism(tau, w, 2, cap)
        if not image.startswith(baa):
            raise PrefixStripFailed(f"tau^2 image does not start with {baa}")
        w = strip_prefix(image, baa) + baa
    return w


def _literal(text: bytes, alphabet: Alphabet) -> Word:
    """Map a literal over {a, b} onto the first two symbols of ``alphabet``."""
    if alphabet.symbols[:2] == b"ab":
        return Word(text, alphabet)
    return Word(text.translate(bytes.maketrans(b"ab", alphabet.symbols[:2])), alphabet)


@dataclass(frozen=True)
class Factorization:
    """A word cut into consecutive factors; ``boundaries`` are factor end offsets."""

    word: Word
    boundaries: tuple[int, ...]

    def __post_init__(self):
        bounds = tuple(self.boundaries)
        object.__setattr__(self, "boundaries", bounds)
        if bool(bounds) != bool(self.word):
            raise ValueError("boundaries must be non-empty iff the word is")
        prev = 0
        for end in bounds:
            if end <= prev:
                raise ValueError(f"boundaries {bounds} not strictly increasing")
            prev = end
        if bounds and bounds[-1] != len(self.word):
            raise ValueError("last boundary must equal the word length")

    @classmethod
    def from_factors(cls, factors: Sequence[Word], alphabet: Alphabet = AB):
        ends, pos = [], 0
        for f in factors:
            pos += len(f)
            ends.append(pos)
        data = b"".join(f.data for f in factors)
        return cls(Word(data, factors[0].alphabet if factors else alphabet), tuple(ends))

    def spans(self) -> list[tuple[int, int]]:
        """Half-open (start, end) offsets of every factor."""
        starts = (0,) + self.boundaries[:-1]
        return list(zip(starts, self.boundaries))

    @property
    def factors(self) -> list[Word]:
        data, alphabet = self.word.data, self.word.alphabet
        return [Word(data[s:e], alphabet) for s, e in self.spans()]

    def texts(self) -> list[str]:
        return [f.text for f in self.factors]

    def __len__(self):
        return len(self.boundaries)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]
