"""Nyldon words: recognition, longest Nyldon proper suffix, Nyldon factorization.

Three independent recognisers live here:

* :func:`build_table` flags every substring bottom-up with the lnps criterion
  (w = p s, s the longest Nyldon proper suffix: w is Nyldon iff p is and p > s);
* :func:`is_nyldon_oracle` searches the recursive definition directly;
* :func:`is_nyldon` runs the right-to-left prepend-merge factorization and
  checks for a single factor.

All of them work on :attr:`Word.key` so that ``bytes`` comparison is the
lexicographic order of the word's alphabet.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    BudgetExceeded,
    EmptyWord,
    EnumerationCapExceeded,
    OracleCapExceeded,
    TableCapExceeded,
    WordTooShort,
)
from .words import Alphabet, Factorization, Word

TABLE_CAP = 4096
ORACLE_CAP = 20
ENUMERATION_CAP = 1 << 22
LNPS_BUDGET = 10**9


@dataclass(frozen=True)
class NfResult:
    factorization: Factorization

    @property
    def factors(self) -> list[Word]:
        return self.factorization.factors

    def texts(self) -> list[str]:
        return self.factorization.texts()

    def __len__(self):
        return len(self.factorization)


# -- prepend-merge ---------------------------------------------------------

class _Meter:
    """Counts symbol comparisons and aborts past a budget."""

    __slots__ = ("used", "budget")

    def __init__(self, budget):
        self.used = 0
        self.budget = budget

    def charge(self, n):
        self.used += n
        if self.used > self.budget:
            raise BudgetExceeded(f"work budget of {self.budget} symbol comparisons exhausted")


def _nf_spans(key: bytes, start: int = 0, meter: _Meter | None = None) -> list[tuple[int, int]]:
    """Spans (half-open) of NF(key[start:]), leftmost first."""
    stack: list[tuple[int, int]] = []  # top of stack = leading factor
    for i in range(len(key) - 1, start - 1, -1):
        s, e = i, i + 1
        while stack:
            s2, e2 = stack[-1]
            if meter is not None:
                meter.charge(min(e - s, e2 - s2) + 1)
            if key[s:e] > key[s2:e2]:
                stack.pop()
                e = e2
            else:
                break
        stack.append((s, e))
    stack.reverse()
    return stack


def nyldon_factorization(w: Word) -> NfResult:
    """NF(w) by prepending symbols right to left and merging a leading factor
    into its successor while it is strictly greater."""
    spans = _nf_spans(w.key)
    return NfResult(Factorization(w, tuple(e for _, e in spans)))


def is_nyldon(w: Word) -> bool:
    if not w:
        raise EmptyWord("Nyldon-ness is defined for non-empty words only")
    return len(_nf_spans(w.key)) == 1


# -- table -----------------------------------------------------------------

class NyldonTable:
    """Nyldon flags for every substring of a word.

    ``flag(i, j)`` tells whether ``word[i:j]`` (0-based, half-open) is Nyldon.
    ``lnps_start(i, j)`` is the start of the longest Nyldon proper suffix of
    ``word[i:j]`` for ``j - i >= 2``.
    """

    def __init__(self, word: Word, flags: list[bytearray], lnps: list[list[int]]):
        self.word = word
        self._flags = flags
        self._lnps = lnps

    def flag(self, i: int, j: int) -> bool:
        if not 0 <= i < j <= len(self.word):
            raise IndexError(f"substring [{i}, {j}) out of range")
        return bool(self._flags[j][i])

    def lnps_start(self, i: int, j: int) -> int:
        if j - i < 2:
            raise WordTooShort("lnps needs at least two symbols")
        self.flag(i, j)
        return self._lnps[j][i]

    def nyldon_substrings(self) -> list[tuple[int, int]]:
        n = len(self.word)
        return [(i, j) for j in range(1, n + 1) for i in range(j) if self._flags[j][i]]

    @property
    def is_nyldon(self) -> bool:
        return self.flag(0, len(self.word))


def build_table(w: Word, cap: int = TABLE_CAP) -> NyldonTable:
    n = len(w)
    if n > cap:
        raise TableCapExceeded(f"word length {n} exceeds table cap {cap}")
    key = w.key
    flags: list[bytearray] = [bytearray()]
    lnps: list[list[int]] = [[]]
    for j in range(1, n + 1):
        col = bytearray(j)
        lcol = [0] * j
        col[j - 1] = 1
        nearest = j - 1
        for i in range(j - 2, -1, -1):
            # nearest: smallest start > i with key[nearest:j] Nyldon
            lcol[i] = nearest
            if flags[nearest][i] and key[i:nearest] > key[nearest:j]:
                col[i] = 1
                nearest = i
        flags.append(col)
        lnps.append(lcol)
    return NyldonTable(w, flags, lnps)


# -- definitional oracle ---------------------------------------------------

def _oracle(key: bytes):
    """Memoized searches over substrings of ``key`` (private to one call)."""

    @lru_cache(maxsize=None)
    def nyl(i: int, j: int) -> bool:
        if j - i == 1:
            return True
        for k in range(i + 1, j):
            if nyl(i, k) and chain(k, j, i):
                return False
        return True

    @lru_cache(maxsize=None)
    def chain(s: int, e: int, lb: int) -> tuple[int, ...] | None:
        # factor key[s:e] into non-decreasing Nyldon words, the first of which
        # is >= key[lb:s]; return factor end offsets or None
        if s == e:
            return ()
        low = key[lb:s]
        for k in range(s + 1, e + 1):
            if key[s:k] >= low and nyl(s, k):
                rest = chain(k, e, s)
                if rest is not None:
                    return (k,) + rest
        return None

    return nyl, chain


def _oracle_guard(w: Word, cap: int):
    if not w:
        raise EmptyWord("oracle needs a non-empty word")
    if len(w) > cap:
        raise OracleCapExceeded(f"word length {len(w)} exceeds oracle cap {cap}")


def is_nyldon_oracle(w: Word, cap: int = ORACLE_CAP) -> bool:
    """Recursive definition: no factorization into >= 2 non-decreasing Nyldon words."""
    _oracle_guard(w, cap)
    nyl, _ = _oracle(w.key)
    return nyl(0, len(w))


def nyldon_factorization_oracle(w: Word, cap: int = ORACLE_CAP) -> NfResult:
    """Exhaustive search for a non-decreasing product of Nyldon words."""
    _oracle_guard(w, cap)
    _, chain = _oracle(w.key)
    # empty lower bound on the first factor
    ends = chain(0, len(w), 0)
    assert ends is not None, "every word has a Nyldon factorization"
    return NfResult(Factorization(w, ends))


# -- lnps and enumeration --------------------------------------------------

def lnps(w: Word, method: str = "auto", table_cap: int = TABLE_CAP,
         budget: int = LNPS_BUDGET) -> Word:
    """Longest Nyldon proper suffix.

    ``method`` is ``"table"``, ``"scan"`` (longest suffix first, each tested with
    the prepend-merge factorization under a comparison budget) or ``"auto"``
    (table when the word fits under ``table_cap``).
    """
    n = len(w)
    if n < 2:
        raise WordTooShort(f"lnps needs |w| >= 2, got {n}")
    if method == "auto":
        method = "table" if n <= table_cap else "scan"
    if method == "table":
        start = build_table(w, table_cap).lnps_start(0, n)
    elif method == "scan":
        start = _lnps_scan(w.key, budget)
    else:
        raise ValueError(f"unknown lnps method {method!r}")
    return w[start:]


def _lnps_scan(key: bytes, budget: int) -> int:
    meter = _Meter(budget)
    for start in range(1, len(key)):
        if len(_nf_spans(key, start, meter)) == 1:
            return start
    raise AssertionError("the last symbol is always a Nyldon suffix")


def all_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """Every word of the given length, in lexicographic order."""
    for combo in itertools.product(alphabet.symbols, repeat=length):
        yield Word(bytes(combo), alphabet)


def enumerate_nyldon(alphabet: Alphabet, max_len: int,
                     cap: int = ENUMERATION_CAP) -> Iterator[Word]:
    """Nyldon words of length 1..max_len in (length, lexicographic) order."""
    total = sum(len(alphabet) ** n for n in range(1, max_len + 1))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} candidate words exceed cap {cap}")
    for n in range(1, max_len + 1):
        for w in all_words(alphabet, n):
            if is_nyldon(w):
                yield w
