import json

import pytest

from nyldon import theorems as th
from nyldon.errors import EnumerationCapExceeded
from nyldon.nf import nyldon_factorization
from nyldon.words import Ordering, compare, complement, family, fibonacci, make_word as W, thue_morse

pytestmark = pytest.mark.needs_gate


def flip_last(w):
    return w[:-1] + complement(w[-1:])


# -- Fibonacci -------------------------------------------------------------

def test_fib_nf():
    assert th.verify_fib_nf(2).passed
    r = th.verify_fib_nf(4)
    assert r.passed
    assert nyldon_factorization(fibonacci(4)).texts() == ["a", "baab"]
    assert nyldon_factorization(fibonacci(2)).texts() == ["a", "b"]


def test_fib_nf_catches_mutated_input():
    fib = lambda k: flip_last(fibonacci(k)) if k == 4 else fibonacci(k)  # noqa: E731
    r = th.verify_fib_nf(6, fib=fib)
    assert not r.passed
    assert r.counterexample.params == {"k": 4}
    assert r.range[0].max == 4


def test_fib_lnps():
    r = th.verify_fib_lnps(4)
    assert r.passed
    assert [x.name for x in r.range] == ["k", "k_lnps"]
    assert th.verify_fib_lnps(6).passed


def test_fib_lnps_agrees_with_scan():
    for k in (5, 6):
        h, h2 = th.fib_suffix(k), th.fib_suffix(k - 2)
        from nyldon.nf import lnps
        assert lnps(h, "scan") == h2
        assert lnps(h + W("a"), "scan") == h2 + W("a")


def test_fib_lnps_catches_bad_h3():
    h = lambda k: W("ab") if k == 3 else th.fib_suffix(k)  # noqa: E731
    r = th.verify_fib_lnps(6, h=h)
    assert not r.passed
    assert r.counterexample.params["k"] == 3


# -- Thue-Morse ------------------------------------------------------------

def test_expected_tm_nf_base_cases():
    assert th.expected_tm_nf(4).texts() == ["a", "b", "ba", "baabbaa", "babba"]
    assert th.expected_tm_nf(5).texts() == [
        "a", "b", "ba", "baabbaa", "babba" "baababbaabbabaab"]


def test_recursion_reproduces_base_cases():
    # reading the kept factors as "all but the last" gives the literal lists
    three = th.expected_tm_nf(3).factors
    assert th.tm_nf_step(three, 4) == th.expected_tm_nf(4).factors
    assert th.tm_nf_step(three, 5) == th.expected_tm_nf(5).factors


def test_expected_tm_nf_six():
    e = th.expected_tm_nf(6)
    assert len(e.factors) == 6
    x, y = e.factors[-2:]
    assert x == W("babba" "baababbaabbabaab") + complement(thue_morse(4))[:-1]
    assert y == W("b") + thue_morse(4)
    assert e.word() == thue_morse(6)


def test_expected_tm_nf_concatenates_to_tm():
    for n in range(3, 17):
        assert th.expected_tm_nf(n).word() == thue_morse(n)


def test_expected_tm_nf_prefix_consistency():
    for k in range(3, 8):
        odd = th.expected_tm_nf(2 * k - 1).factors
        even = th.expected_tm_nf(2 * k).factors
        c = len(odd)
        assert even[: c - 1] == odd[: c - 1]


def test_tm_nf_recursion():
    assert th.verify_tm_nf_recursion(5).passed
    assert th.verify_tm_nf_recursion(12).passed


def test_tm_nf_catches_swapped_tail():
    def swapped(n):
        e = th.expected_tm_nf(n)
        if n == 7:
            e.factors[-1] = W("b") + thue_morse(4)  # Y_3 where Z_3 belongs
        return e
    r = th.verify_tm_nf_recursion(9, expected=swapped)
    assert not r.passed and r.counterexample.params["n"] == 7


# -- the sequence (w_n) ----------------------------------------------------

def test_w_equivalence():
    assert th.verify_w_equivalence(5).passed
    assert th.verify_w_equivalence(12).passed


def test_w_equivalence_catches_alteration():
    from nyldon.words import w_tilde_seq
    wt = lambda n: W("baabba") if n == 4 else w_tilde_seq(n)  # noqa: E731
    r = th.verify_w_equivalence(6, w_tilde=wt)
    assert not r.passed and r.counterexample.params == {"n": 4}


def test_w_morphism_relations():
    r = th.verify_w_morphism_relations(10)
    assert r.passed
    assert [x.name for x in r.range] == ["item", "n", "n_tele"]


def test_factorization_prefix():
    from nyldon.words import tm_prefix, w_seq
    assert w_seq(1) + w_seq(2) + w_seq(3) == tm_prefix(4)
    assert W("a" "b" "ba" "baabbaa") == tm_prefix(11)
    assert th.verify_factorization_prefix(12).passed


def test_ordering():
    r = th.verify_ordering(12)
    assert r.passed
    from nyldon.words import w_seq
    assert w_seq(5).text.startswith("babbabaab" "a")
    assert w_seq(6).text.startswith("babbabaab" "b")


def test_ordering_catches_wrong_sequence():
    from nyldon.words import w_seq
    w = lambda n: W("bb") if n == 3 else w_seq(n)  # noqa: E731
    r = th.verify_ordering(6, w=w)
    assert not r.passed and r.counterexample.params == {"n": 3}


# -- families --------------------------------------------------------------

def test_family_order():
    assert th.verify_family_order(1).passed
    assert th.verify_family_order(10).passed


def test_family_order_catches_swap():
    chain = list(th.FAMILY_ORDER)
    i, j = chain.index(1), chain.index(2)
    chain[i], chain[j] = chain[j], chain[i]
    r = th.verify_family_order(3, chain=chain)
    assert not r.passed and r.counterexample.params["k"] == 1


def test_cross_level_order():
    assert compare(family(3, 1), family(4, 2)) == Ordering.LESS
    assert th.verify_cross_level_order(1).passed
    assert th.verify_cross_level_order(8).passed


def test_family_table_corrected_rows():
    # t12(2) = t1(2) . t11(2) and lnps(t12(2)) = t11(2)
    t = family(12, 2)
    assert t == family(1, 2) + family(11, 2)
    from nyldon.nf import lnps
    assert lnps(t) == family(11, 2)
    assert th.verify_family_table(6, "nyldon", table="corrected").passed
    assert th.verify_family_table(3, "full_lnps", table="corrected").passed


def test_printed_table_rows_9_10_are_one_letter_off():
    for k in range(2, 6):
        for ell, (lp, _), (ls, _) in ((9, (2, 0), (6, 0)), (10, (2, 0), (7, 0))):
            t = family(ell, k)
            printed = family(lp, k) + family(ls, k)
            assert len(printed) == len(t) + 1
            assert t == family(1, k) + family(ls, k)
    r = th.verify_family_table(4, "identities", table="printed")
    assert not r.passed
    assert r.counterexample.params == {"k": 2, "ell": 9}


def test_family_table_rejects_bad_args():
    with pytest.raises(ValueError):
        th.verify_family_table(1)
    with pytest.raises(ValueError):
        th.verify_family_table(3, mode="bogus")


# -- small words -----------------------------------------------------------

def test_nyldon_lemmas():
    assert th.verify_nyldon_lemmas(6).passed


def test_nyldon_lemmas_catch_inverted_compare():
    inverted = lambda u, v: compare(v, u)  # noqa: E731
    r = th.verify_nyldon_lemmas(6, compare_fn=inverted)
    assert not r.passed


def test_nyldon_lemmas_cap():
    with pytest.raises(EnumerationCapExceeded):
        th.verify_nyldon_lemmas(13)


def test_counts():
    assert th.verify_counts(5).passed
    with pytest.raises(EnumerationCapExceeded):
        th.verify_counts(15)


@pytest.mark.parametrize("n, q, expected", [(1, 2, 2), (2, 2, 1), (5, 2, 6), (6, 2, 9), (12, 2, 335), (4, 3, 18)])
def test_necklace_count(n, q, expected):
    assert th.necklace_count(n, q) == expected


# -- reports ---------------------------------------------------------------

def _strip_time(report):
    d = report.to_dict()
    d.pop("elapsed_ms")
    return d


@pytest.mark.parametrize("claim, value", [
    ("fib-nf", 8), ("tm-nf", 8), ("w-equiv", 8), ("w-order", 8), ("counts", 6)])
def test_verifiers_are_deterministic(claim, value):
    a, b = th.run_claim(claim, value), th.run_claim(claim, value)
    assert _strip_time(a) == _strip_time(b)


def test_fail_report_reproduces():
    fib = lambda k: flip_last(fibonacci(k)) if k == 5 else fibonacci(k)  # noqa: E731
    first = th.verify_fib_nf(9, fib=fib)
    k = first.counterexample.params["k"]
    again = th.verify_fib_nf(k, fib=fib)
    assert not again.passed
    assert _strip_time(again) == _strip_time(first)


def test_report_json_shape():
    r = th.verify_fib_nf(5)
    d = json.loads(r.to_json())
    assert set(d) == {"claim", "range", "outcome", "counterexample", "elapsed_ms"}
    assert d["range"] == [{"name": "k", "min": 2, "max": 5}]
    assert d["counterexample"] is None
    assert th.VerificationReport.from_dict(d) == r


def test_fail_implies_counterexample():
    r = th.verify_family_table(3, "identities")
    assert r.outcome == "fail" and r.counterexample is not None
    assert {"params", "expected", "actual"} <= set(r.to_dict()["counterexample"])


def test_run_claim_unknown():
    with pytest.raises(ValueError):
        th.run_claim("nope")


def test_fib_lnps_base_case():
    from nyldon.nf import lnps
    assert lnps(W("baab")) == W("b")
    assert lnps(W("baaba")) == W("ba")
