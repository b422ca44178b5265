"""Lyndon words and the Lyndon factorization."""
from .errors import EmptyWord
from .words import Factorization, Word


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper suffixes."""
    if not w:
        raise EmptyWord("Lyndon-ness is defined for non-empty words only")
    key = w.key
    return all(key < key[i:] for i in range(1, len(key)))


def lyndon_factorization(w: Word) -> Factorization:
    """Duval's scan: non-increasing product of Lyndon words, linear time."""
    s = w.key
    n = len(s)
    ends = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        period = j - k
        while i <= k:
            i += period
            ends.append(i)
    return Factorization(w, tuple(ends))

