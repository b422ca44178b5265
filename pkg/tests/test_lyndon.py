import itertools

import pytest

from nyldon.errors import EmptyWord
from nyldon.lyndon import is_lyndon, lyndon_factorization
from nyldon.words import Alphabet, make_word as W


def binary_words(max_len):
    for n in range(1, max_len + 1):
        for t in itertools.product("ab", repeat=n):
            yield W("".join(t))


def lyndon_factorizations_brute(w):
    """Every factorization of w into Lyndon words with non-increasing factors."""
    n = len(w)
    out = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        ends = [i + 1 for i, c in enumerate(cuts) if c] + [n]
        starts = [0] + ends[:-1]
        parts = [w[s:e] for s, e in zip(starts, ends)]
        if all(is_lyndon(p) for p in parts) and all(
            parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
        ):
            out.append([p.text for p in parts])
    return out


def test_is_lyndon_examples():
    assert is_lyndon(W("aabb"))
    assert is_lyndon(W("a"))
    assert not is_lyndon(W("ba"))
    assert not is_lyndon(W("abab"))
    with pytest.raises(EmptyWord):
        is_lyndon(W(""))


def test_lyndon_factorization_examples():
    assert lyndon_factorization(W("abaabbaabbaab")).texts() == ["ab", "aabb", "aabb", "aab"]
    assert lyndon_factorization(W("")).texts() == []
    assert lyndon_factorization(W("bbba")).texts() == ["b", "b", "b", "a"]


def test_lyndon_factorization_definition_up_to_12():
    for w in binary_words(12):
        factors = lyndon_factorization(w).factors
        assert W("".join(f.text for f in factors)) == w
        assert all(is_lyndon(f) for f in factors)
        assert all(factors[i] >= factors[i + 1] for i in range(len(factors) - 1))
        assert (len(factors) == 1) == is_lyndon(w)


def test_lyndon_factorization_unique_up_to_10():
    for w in binary_words(10):
        assert lyndon_factorizations_brute(w) == [lyndon_factorization(w).texts()]


def test_lyndon_other_alphabet_order():
    ba = Alphabet("ba")
    assert is_lyndon(W("bba", ba))
    assert not is_lyndon(W("aab", ba))
    assert lyndon_factorization(W("abba", ba)).texts() == ["a", "bba"]
