"""Exact counting of Lyndon factors and Lyndon subsequences.

Closed forms for the maximum-total, expected-total and expected-distinct
counts, extremal witness construction, Lyndon word enumeration, and an
exhaustive brute-force oracle that verifies every formula at small scale.
All arithmetic is exact (big integers and rationals); decimals appear only
at render time.
"""
from .budget import Budget, BudgetExceededError
from .exactnum import binomial, divisors, mobius, render_decimal
from .formulas import (
    BlockComposition,
    CountReport,
    Decomposition,
    block_total_factors,
    block_total_subsequences,
    edf,
    eds,
    etf,
    ets,
    mdf,
    mtf,
    mts,
    mts_maximizer_count,
    mts_witness,
    tds,
    ts,
)
from .lyndon_enum import (
    all_words,
    containment_count,
    containment_count_oracle,
    count_lyndon,
    lyndon_words,
)
from .oracle import (
    Lemma1Report,
    MaxCensus,
    VerificationResult,
    default_suite,
    lemma1_invariance_check,
    max_census,
    verify,
)
from .words import (
    Alphabet,
    PositionSet,
    Word,
    WordParseError,
    count_distinct_lyndon_factors,
    count_distinct_lyndon_subsequences,
    count_lyndon_factor_occurrences,
    count_lyndon_subsequence_occurrences,
    duval_factorization,
    is_lyndon,
    is_lyndon_by_conjugates,
    occ_count,
    parse_word,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BlockComposition",
    "Budget",
    "BudgetExceededError",
    "CountReport",
    "Decomposition",
    "Lemma1Report",
    "MaxCensus",
    "PositionSet",
    "VerificationResult",
    "Word",
    "WordParseError",
    "all_words",
    "binomial",
    "block_total_factors",
    "block_total_subsequences",
    "containment_count",
    "containment_count_oracle",
    "count_distinct_lyndon_factors",
    "count_distinct_lyndon_subsequences",
    "count_lyndon",
    "count_lyndon_factor_occurrences",
    "count_lyndon_subsequence_occurrences",
    "default_suite",
    "divisors",
    "duval_factorization",
    "edf",
    "eds",
    "etf",
    "ets",
    "is_lyndon",
    "is_lyndon_by_conjugates",
    "lemma1_invariance_check",
    "lyndon_words",
    "max_census",
    "mdf",
    "mobius",
    "mtf",
    "mts",
    "mts_maximizer_count",
    "mts_witness",
    "occ_count",
    "parse_word",
    "render_decimal",
    "tds",
    "ts",
    "verify",
    "word",
]
