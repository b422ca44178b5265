"""Nyldon words and factorizations, with machine checks of their combinatorics
on Fibonacci and Thue-Morse words."""
from .errors import *  # noqa: F401,F403
from .lyndon import is_lyndon, lyndon_factorization
from .nf import (
    NfResult,
    NyldonTable,
    build_table,
    enumerate_nyldon,
    is_nyldon,
    is_nyldon_oracle,
    lnps,
    nyldon_factorization,
    nyldon_factorization_oracle,
)
from .words import (
    AB,
    TAU,
    Alphabet,
    Factorization,
    FamilyId,
    Morphism,
    Ordering,
    Word,
    append,
    apply_morphism,
    compare,
    complement,
    drop_last,
    family,
    fibonacci,
    make_word,
    strip_prefix,
    thue_morse,
    thue_morse_morphism,
    tm_prefix,
    w_seq,
    w_tilde_seq,
)
