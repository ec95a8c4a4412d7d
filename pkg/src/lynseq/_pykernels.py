"""Pure-Python enumeration kernels (reference backend).

Same function set as `_kernels_numba`, built on the transparent tuple-level
counters from `words`.  Exact for any sigma and n; slower by orders of
magnitude on large grids.  Selected via LYNSEQ_BACKEND=python or used as the
automatic fallback when numba is unavailable.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from .lyndon_enum import _contains_subsequence
from .words import (
    _factor_distinct_symbols,
    _factor_total_symbols,
    _is_lyndon_symbols,
    _subseq_distinct_symbols,
    _subseq_total_symbols,
)

BACKEND_NAME = "python"


def _as_tuple(symbols) -> tuple[int, ...]:
    return tuple(int(s) for s in symbols)


# -- per-word counters -------------------------------------------------------


def word_subseq_total(symbols, sigma: int) -> int:
    return _subseq_total_symbols(_as_tuple(symbols))


def word_subseq_distinct(symbols, sigma: int) -> int:
    return _subseq_distinct_symbols(_as_tuple(symbols))


def word_factor_total(symbols, sigma: int) -> int:
    return _factor_total_symbols(_as_tuple(symbols))


def word_factor_distinct(symbols, sigma: int) -> int:
    return _factor_distinct_symbols(_as_tuple(symbols))


# -- whole-space reductions over all sigma**n words ---------------------------


def _words(sigma: int, n: int):
    return product(range(1, sigma + 1), repeat=n)


def sum_subseq_total(sigma: int, n: int) -> int:
    return sum(_subseq_total_symbols(w) for w in _words(sigma, n))


def sum_subseq_distinct(sigma: int, n: int) -> int:
    return sum(_subseq_distinct_symbols(w) for w in _words(sigma, n))


def sum_factor_total(sigma: int, n: int) -> int:
    return sum(_factor_total_symbols(w) for w in _words(sigma, n))


def sum_factor_distinct(sigma: int, n: int) -> int:
    return sum(_factor_distinct_symbols(w) for w in _words(sigma, n))


def _max_over_words(per_word, sigma: int, n: int, cap: int):
    best = -1
    count = 0
    witnesses: list[tuple[int, ...]] = []
    for w in _words(sigma, n):
        v = per_word(w)
        if v > best:
            best = v
            count = 1
            witnesses = [w] if cap > 0 else []
        elif v == best:
            count += 1
            if len(witnesses) < cap:
                witnesses.append(w)
    wit = np.array(witnesses, dtype=np.int64).reshape(len(witnesses), n)
    return best, count, wit, len(witnesses)


def max_subseq_total(sigma: int, n: int, cap: int):
    return _max_over_words(_subseq_total_symbols, sigma, n, cap)


def max_factor_total(sigma: int, n: int, cap: int):
    return _max_over_words(_factor_total_symbols, sigma, n, cap)


def max_factor_distinct(sigma: int, n: int, cap: int):
    return _max_over_words(_factor_distinct_symbols, sigma, n, cap)


def count_lyndon_words(sigma: int, n: int) -> int:
    return sum(1 for w in _words(sigma, n) if _is_lyndon_symbols(w))


def containment_counts(sigma: int, n: int, m: int) -> np.ndarray:
    """For every length-m pattern (lex order), the number of length-n words
    containing it as a subsequence."""
    out = np.empty(sigma**m, dtype=np.int64)
    for idx, pat in enumerate(_words(sigma, m)):
        out[idx] = sum(1 for w in _words(sigma, n) if _contains_subsequence(w, pat))
    return out
