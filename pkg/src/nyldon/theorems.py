"""Finite-range verifiers for the Nyldon results on Fibonacci and Thue-Morse words.

Each ``verify_*`` function walks a parameter range, stops at the first
mismatch and returns a :class:`VerificationReport`.  Collaborators (word
generators, the factorizer, the comparison) are keyword arguments so that
tests can inject faults and watch the verifier catch them.
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from .lyndon import is_lyndon
from .nf import (
    all_words,
    build_table,
    enumerate_nyldon,
    is_nyldon,
    is_nyldon_oracle,
    lnps,
    nyldon_factorization,
    nyldon_factorization_oracle,
)
from .errors import EnumerationCapExceeded
from .words import (
    AB,
    FAMILY_ORDER,
    TAU,
    Ordering,
    Word,
    apply_morphism,
    compare,
    complement,
    drop_last,
    family,
    fibonacci,
    make_word,
    thue_morse,
    tm_prefix,
    w_seq,
    w_tilde_seq,
)

A = make_word("a")
B = make_word("b")
BAA = make_word("baa")


@dataclass
class ParamRange:
    name: str
    min: int
    max: int


@dataclass
class Counterexample:
    params: dict
    expected: str
    actual: str


@dataclass
class VerificationReport:
    claim: str
    range: list[ParamRange]
    outcome: str
    counterexample: Counterexample | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        cx = d.get("counterexample")
        return cls(
            claim=d["claim"],
            range=[ParamRange(**r) for r in d["range"]],
            outcome=d["outcome"],
            counterexample=Counterexample(**cx) if cx else None,
            elapsed_ms=d.get("elapsed_ms", 0.0),
        )

    def summary(self) -> str:
        ranges = ", ".join(f"{r.name}={r.min}..{r.max}" for r in self.range)
        line = f"{self.claim:<14} {self.outcome.upper():<4} [{ranges}] {self.elapsed_ms:.0f} ms"
        if self.counterexample is not None:
            cx = self.counterexample
            line += f"\n    at {cx.params}: expected {_clip(cx.expected)} got {_clip(cx.actual)}"
        return line


def _clip(text: str, width: int = 120) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def _show(value) -> str:
    if isinstance(value, Word):
        return value.text
    if isinstance(value, (list, tuple)):
        return ",".join(_show(v) for v in value)
    return str(value)


class _Run:
    """Collects exercised ranges and timing for one verifier call."""

    def __init__(self, claim: str):
        self.claim = claim
        self.ranges: list[ParamRange] = []
        self.t0 = time.perf_counter()

    def section(self, name: str, lo: int, hi: int) -> range:
        if lo <= hi:
            self.ranges.append(ParamRange(name, lo, hi))
        return range(lo, hi + 1)

    def _elapsed(self) -> float:
        return (time.perf_counter() - self.t0) * 1000.0

    def ok(self) -> VerificationReport:
        return VerificationReport(self.claim, self.ranges, "pass", None, self._elapsed())

    def fail(self, params: dict, expected, actual) -> VerificationReport:
        # the current section stopped at the failing parameter
        if self.ranges:
            last = self.ranges[-1]
            if last.name in params:
                last.max = params[last.name]
        cx = Counterexample(params, _show(expected), _show(actual))
        return VerificationReport(self.claim, self.ranges, "fail", cx, self._elapsed())


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


# -- oracle gate -----------------------------------------------------------

def verify_nf_oracle(len_max: int = 14, *, factorize=nyldon_factorization,
                     oracle=nyldon_factorization_oracle) -> VerificationReport:
    """Prepend-merge NF against the definitional search, plus three-way
    agreement of the Nyldon recognisers, on every binary word."""
    run = _Run("nf-oracle")
    for n in run.section("len", 1, len_max):
        for w in all_words(AB, n):
            fast = factorize(w).texts()
            slow = oracle(w).texts()
            if fast != slow:
                return run.fail({"len": n, "word": w.text}, slow, fast)
            flags = (is_nyldon(w), is_nyldon_oracle(w), build_table(w).is_nyldon)
            if len(set(flags)) != 1:
                return run.fail({"len": n, "word": w.text},
                                "nf,oracle,table agree", "%s,%s,%s" % flags)
    return run.ok()


# -- Fibonacci -------------------------------------------------------------

def fib_suffix(k: int) -> Word:
    """H_k: F_k without its first letter."""
    return fibonacci(k)[1:]


def verify_fib_nf(k_max: int = 20, *, fib: Callable[[int], Word] = fibonacci,
                  factorize=nyldon_factorization) -> VerificationReport:
    """NF(F_k) = a, F_k[2..] for every 2 <= k <= k_max."""
    _require(k_max >= 2, "k_max must be >= 2")
    run = _Run("fib-nf")
    for k in run.section("k", 2, k_max):
        f = fib(k)
        expected = [A, fibonacci(k)[1:]]
        actual = factorize(f).factors
        if actual != expected:
            return run.fail({"k": k}, expected, actual)
    return run.ok()


def verify_fib_lnps(k_max: int = 20, lnps_k_max: int = 13, *,
                    h: Callable[[int], Word] = fib_suffix,
                    lnps_fn=lnps) -> VerificationReport:
    """H_k and H_k a are Nyldon (k >= 2); lnps(H_k) = H_{k-2} and
    lnps(H_k a) = H_{k-2} a (k >= 4)."""
    _require(k_max >= 4, "k_max must be >= 4")
    run = _Run("fib-lnps")
    for k in run.section("k", 2, k_max):
        hk = h(k)
        for word in (hk, hk + A):
            if not is_nyldon(word):
                return run.fail({"k": k, "word": word.text}, "Nyldon", "not Nyldon")
    for k in run.section("k_lnps", 4, min(k_max, lnps_k_max)):
        hk, h2 = h(k), h(k - 2)
        for word, want in ((hk, h2), (hk + A, h2 + A)):
            got = lnps_fn(word)
            if got != want:
                return run.fail({"k_lnps": k, "word": word.text}, want, got)
    return run.ok()


# -- finite Thue-Morse -----------------------------------------------------

@dataclass
class ExpectedTmFactorization:
    n: int
    factors: list[Word] = field(default_factory=list)

    def texts(self) -> list[str]:
        return [f.text for f in self.factors]

    def word(self) -> Word:
        return Word(b"".join(f.data for f in self.factors))


TM_NF_BASE = {
    3: ("a", "b", "ba", "baab"),
    4: ("a", "b", "ba", "baabbaa", "babba"),
    5: ("a", "b", "ba", "baabbaa", "babbabaababbaabbabaab"),
}


def tm_nf_step(odd_factors: Sequence[Word], n: int) -> list[Word]:
    """NF(TM_n) from NF(TM_{2k-1}) where k = n // 2.

    Keeps every factor but the last, extends the last by the complement of
    TM'_{2k-2}, then appends b TM_{2k-2} (n even) or b TM_{2k-2} ~TM_{2k} (n odd).
    """
    k = n // 2
    tm = thue_morse(2 * k - 2)
    x = odd_factors[-1] + drop_last(complement(tm))
    y = B + tm
    last = y if n % 2 == 0 else y + complement(thue_morse(2 * k))
    return list(odd_factors[:-1]) + [x, last]


def expected_tm_nf(n: int) -> ExpectedTmFactorization:
    _require(n >= 3, "n must be >= 3")
    if n in TM_NF_BASE:
        return ExpectedTmFactorization(n, [make_word(t) for t in TM_NF_BASE[n]])
    k = n // 2
    odd = expected_tm_nf(2 * k - 1).factors
    return ExpectedTmFactorization(n, tm_nf_step(odd, n))


def verify_tm_nf_recursion(n_max: int = 14, *, expected=expected_tm_nf,
                           factorize=nyldon_factorization) -> VerificationReport:
    """NF(TM_n) equals the recursive characterisation; the two trailing factors
    are t12(k-2) (from k = 3) and t4(k-1) or t10(k-1)."""
    _require(n_max >= 3, "n_max must be >= 3")
    run = _Run("tm-nf")
    for n in run.section("n", 3, n_max):
        want = expected(n).factors
        tm = thue_morse(n)
        if Word(b"".join(f.data for f in want)) != tm:
            return run.fail({"n": n, "check": "concatenation"}, tm, want)
        got = factorize(tm).factors
        if got != want:
            return run.fail({"n": n}, want, got)
        if n < 4:
            continue
        k = n // 2
        checks = [(want[-1], family(4, k - 1) if n % 2 == 0 else family(10, k - 1),
                   "Y" if n % 2 == 0 else "Z")]
        if k >= 3:
            checks.append((want[-2], family(12, k - 2), "X"))
        for word, fam, name in checks:
            if word != fam:
                return run.fail({"n": n, "check": f"{name}_{k}"}, fam, word)
    return run.ok()


# -- the sequence (w_n) ----------------------------------------------------

def verify_w_equivalence(n_max: int = 12, *, w=w_seq, w_tilde=w_tilde_seq) -> VerificationReport:
    _require(n_max >= 1, "n_max must be >= 1")
    run = _Run("w-equiv")
    for n in run.section("n", 1, n_max):
        a, b = w(n), w_tilde(n)
        if a != b:
            return run.fail({"n": n}, a, b)
    return run.ok()


def _tau2(word: Word) -> Word:
    return apply_morphism(TAU, word, 2)


def verify_w_morphism_relations(n_max: int = 10, *, w=w_seq) -> VerificationReport:
    """The four tau^2 relations on w_1..w_5 and the finite telescoping of
    tau^2(w_1 ... w_n) = w_1 ... w_{n+1} minus its trailing baa."""
    _require(n_max >= 5, "n_max must be >= 5")
    run = _Run("w-morphism")
    ws = {i: w(i) for i in range(1, n_max + 2)}
    items = [
        (1, _tau2(ws[1]), ws[1] + ws[2] + ws[3]),
        (2, _tau2(ws[2]) + BAA, ws[4]),
        (3, BAA + ws[5], _tau2(ws[3]) + _tau2(ws[4]) + BAA),
    ]
    for item in run.section("item", 1, 3):
        _, lhs, rhs = items[item - 1]
        if lhs != rhs:
            return run.fail({"item": item}, rhs, lhs)
    for n in run.section("n", 5, n_max):
        if not ws[n].startswith(B) or not _tau2(ws[n]).startswith(BAA):
            return run.fail({"n": n, "item": 4}, "prefixes b and baa",
                            f"{ws[n][:1]} / {_tau2(ws[n])[:3]}")
    prefix = ws[1] + ws[2] + ws[3] + ws[4]
    for n in run.section("n_tele", 5, n_max):
        prefix = prefix + ws[n]
        lhs = _tau2(prefix) + BAA
        rhs = prefix + ws[n + 1]
        if lhs != rhs:
            return run.fail({"n_tele": n}, rhs, lhs)
    return run.ok()


def verify_factorization_prefix(n_max: int = 12, *, w=w_seq, prefix=tm_prefix) -> VerificationReport:
    """w_1 ... w_n is a prefix of the infinite Thue-Morse word."""
    _require(n_max >= 1, "n_max must be >= 1")
    run = _Run("tm-prefix")
    parts = []
    for n in run.section("n", 1, n_max):
        parts.append(w(n).data)
        got = Word(b"".join(parts))
        want = prefix(len(got))
        if got != want:
            return run.fail({"n": n}, want, got)
    return run.ok()


def _lcp(u: bytes, v: bytes) -> int:
    i, m = 0, min(len(u), len(v))
    # galloping on bytes slices keeps this in C for long common prefixes
    step = 1
    while i < m:
        j = min(m, i + step)
        if u[i:j] == v[i:j]:
            i = j
            step *= 2
        elif step == 1:
            break
        else:
            step = 1
    return i


W5_W6_COMMON_PREFIX = "babbabaab"


def verify_ordering(n_max: int = 12, *, w=w_seq) -> VerificationReport:
    """w_n <= w_{n+1}; from n = 5 on the words split as x a y / x b z."""
    _require(n_max >= 1, "n_max must be >= 1")
    run = _Run("w-order")
    ws = {i: w(i) for i in range(1, n_max + 1)}
    for n in run.section("n", 1, n_max - 1):
        if compare(ws[n], ws[n + 1]) == Ordering.GREATER:
            return run.fail({"n": n}, f"w_{n} <= w_{n + 1}", f"w_{n} > w_{n + 1}")
    for n in run.section("n_split", 5, n_max - 1):
        u, v = ws[n].data, ws[n + 1].data
        x = _lcp(u, v)
        got = (u[x:x + 1], v[x:x + 1])
        if got != (b"a", b"b"):
            return run.fail({"n_split": n}, "a/b after common prefix", got)
        if n == 5 and u[:x] != W5_W6_COMMON_PREFIX.encode():
            return run.fail({"n_split": n}, W5_W6_COMMON_PREFIX, u[:x].decode())
    return run.ok()


# -- the twelve families ---------------------------------------------------

def verify_family_order(k_max: int = 10, *, chain: Sequence[int] = FAMILY_ORDER,
                        fam=family) -> VerificationReport:
    _require(k_max >= 1, "k_max must be >= 1")
    run = _Run("family-order")
    for k in run.section("k", 1, k_max):
        words = [fam(ell, k) for ell in chain]
        for (l1, u), (l2, v) in zip(zip(chain, words), zip(chain[1:], words[1:])):
            if compare(u, v) != Ordering.LESS:
                return run.fail({"k": k, "pair": f"t{l1},t{l2}"},
                                f"t{l1}({k}) < t{l2}({k})", compare(u, v).name)
    return run.ok()


def verify_cross_level_order(k_max: int = 8, *, fam=family) -> VerificationReport:
    """Every family word at level k precedes every family word at level k+1."""
    _require(k_max >= 1, "k_max must be >= 1")
    run = _Run("cross-order")
    upper = [fam(ell, 1) for ell in range(1, 13)]
    for k in run.section("k", 1, k_max):
        lower, upper = upper, [fam(ell, k + 1) for ell in range(1, 13)]
        if compare(lower[2], upper[3]) != Ordering.LESS:
            return run.fail({"k": k, "pair": "t3,t4"}, f"t3({k}) < t4({k + 1})", "not less")
        for l1, u in enumerate(lower, 1):
            for l2, v in enumerate(upper, 1):
                if compare(u, v) != Ordering.LESS:
                    return run.fail({"k": k, "pair": f"t{l1},t{l2}"},
                                    f"t{l1}({k}) < t{l2}({k + 1})", compare(u, v).name)
    return run.ok()


# lnps decomposition of each family word, as printed:
# ell -> ((ell_p, dk_p), (ell_s, dk_s)) with t_ell(k) = t_{ell_p}(k + dk_p) . t_{ell_s}(k + dk_s)
LNPS_TABLE = {
    1: ((3, -1), (9, -1)),
    2: ((3, -1), (10, -1)),
    3: ((3, -1), (12, -1)),
    4: ((3, -1), (4, -1)),
    5: ((3, -1), (8, -1)),
    6: ((5, 0), (9, -1)),
    7: ((5, 0), (10, -1)),
    8: ((5, 0), (12, -1)),
    9: ((2, 0), (6, 0)),
    10: ((2, 0), (7, 0)),
    11: ((8, 0), (6, 0)),
    12: ((1, 0), (11, 0)),
}

# Rows 9 and 10 as printed name t2(k) for the prefix, one letter too long for
# the family definitions; the word equation holds with t1(k).  The lnps
# column is unchanged.
LNPS_TABLE_CORRECTED = {**LNPS_TABLE, 9: ((1, 0), (6, 0)), 10: ((1, 0), (7, 0))}
LNPS_TABLES = {"printed": LNPS_TABLE, "corrected": LNPS_TABLE_CORRECTED}

FAMILY_MODES = ("identities", "nyldon", "full_lnps")


def verify_family_table(k_max: int = 10, mode: str = "full_lnps", nyldon_k_max: int = 6,
                        lnps_k_max: int = 3, table: str | dict = "printed", *,
                        fam=family) -> VerificationReport:
    """Decompositions t = p s from the lnps table; optionally every t Nyldon and
    lnps(t) = s, the latter both through the substring table and a suffix scan."""
    _require(k_max >= 2, "k_max must be >= 2")
    _require(mode in FAMILY_MODES, f"mode must be one of {FAMILY_MODES}")
    if isinstance(table, str):
        _require(table in LNPS_TABLES, f"table must be one of {sorted(LNPS_TABLES)}")
        table = LNPS_TABLES[table]
    run = _Run("family-table")
    for k in run.section("k", 2, k_max):
        for ell in range(1, 13):
            (lp, dp), (ls, ds) = table[ell]
            t, p, s = fam(ell, k), fam(lp, k + dp), fam(ls, k + ds)
            ok = len(t) == len(p) + len(s) and t.startswith(p) and t.endswith(s)
            if not ok:
                return run.fail({"k": k, "ell": ell}, f"t{lp}({k + dp}).t{ls}({k + ds})", t)
    if mode == "identities":
        return run.ok()
    for k in run.section("k_nyldon", 1, min(k_max, nyldon_k_max)):
        for ell in range(1, 13):
            if not is_nyldon(fam(ell, k)):
                return run.fail({"k_nyldon": k, "ell": ell}, "Nyldon", "not Nyldon")
    if mode == "nyldon":
        return run.ok()
    for k in run.section("k_lnps", 2, min(k_max, lnps_k_max)):
        for ell in range(1, 13):
            ls, ds = table[ell][1]
            t, want = fam(ell, k), fam(ls, k + ds)
            for method in ("table", "scan"):
                got = lnps(t, method=method)
                if got != want:
                    return run.fail({"k_lnps": k, "ell": ell, "method": method}, want, got)
    return run.ok()


# -- small-word lemmas and counts -----------------------------------------

def verify_nyldon_lemmas(len_max: int = 12, *, compare_fn=compare,
                         len_cap: int = 12) -> VerificationReport:
    """lnps criterion on all binary words and 'Nyldon proper suffixes are smaller'
    on all Nyldon words, up to len_max."""
    if len_max > len_cap:
        raise EnumerationCapExceeded(f"len_max {len_max} above {len_cap}")
    run = _Run("nyldon-lemmas")
    for n in run.section("len", 2, len_max):
        for w in all_words(AB, n):
            tab = build_table(w)
            start = tab.lnps_start(0, n)
            p, s = w[:start], w[start:]
            rhs = is_nyldon(p) and compare_fn(p, s) == Ordering.GREATER
            if is_nyldon(w) != rhs:
                return run.fail({"len": n, "word": w.text, "lemma": "lnps"},
                                is_nyldon(w), rhs)
    for n in run.section("len_suffix", 1, len_max):
        for w in enumerate_nyldon(AB, n):
            if len(w) != n:
                continue
            for i in range(1, n):
                s = w[i:]
                if is_nyldon(s) and compare_fn(s, w) != Ordering.LESS:
                    return run.fail({"len_suffix": n, "word": w.text, "suffix": s.text},
                                    "suffix < word", "suffix >= word")
    return run.ok()


def _mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def necklace_count(n: int, q: int = 2) -> int:
    """Primitive necklaces (Lyndon words) of length n over q letters."""
    total = sum(_mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def verify_counts(len_max: int = 12, *, len_cap: int = 14) -> VerificationReport:
    """Per length, #Nyldon = #Lyndon = number of primitive binary necklaces."""
    if len_max > len_cap:
        raise EnumerationCapExceeded(f"len_max {len_max} above {len_cap}")
    run = _Run("counts")
    for n in run.section("n", 1, len_max):
        words = list(all_words(AB, n))
        nyl = sum(is_nyldon(w) for w in words)
        lyn = sum(is_lyndon(w) for w in words)
        neck = necklace_count(n)
        if not nyl == lyn == neck:
            return run.fail({"n": n}, f"{neck} (necklaces)", f"nyldon={nyl} lyndon={lyn}")
    return run.ok()


# -- registry --------------------------------------------------------------

CLAIMS: dict[str, Callable[..., VerificationReport]] = {
    "nf-oracle": verify_nf_oracle,
    "fib-nf": verify_fib_nf,
    "fib-lnps": verify_fib_lnps,
    "tm-nf": verify_tm_nf_recursion,
    "w-equiv": verify_w_equivalence,
    "w-morphism": verify_w_morphism_relations,
    "tm-prefix": verify_factorization_prefix,
    "w-order": verify_ordering,
    "family-order": verify_family_order,
    "cross-order": verify_cross_level_order,
    "family-table": verify_family_table,
    "nyldon-lemmas": verify_nyldon_lemmas,
    "counts": verify_counts,
}


def run_claim(claim: str, max_value: int | None = None, **kwargs) -> VerificationReport:
    """Run one claim; ``max_value`` overrides its main upper bound."""
    try:
        fn = CLAIMS[claim]
    except KeyError:
        raise ValueError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}") from None
    if max_value is not None:
        kwargs[_main_param(fn)] = max_value
    return fn(**kwargs)


def _main_param(fn) -> str:
    return fn.__code__.co_varnames[0]


def run_all() -> list[VerificationReport]:
    """Every claim at its default range; the oracle gate goes first and a
    failure there stops the run."""
    reports = [verify_nf_oracle()]
    if not reports[0].passed:
        return reports
    for claim, fn in CLAIMS.items():
        if claim != "nf-oracle":
            reports.append(fn())
    return reports
