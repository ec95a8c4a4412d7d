"""Numba-jitted enumeration kernels (accelerated backend).

Mirrors `_pykernels` function for function.  Everything runs in int64:
exact as long as counts stay below 2**63, which the oracle budgets guarantee
(sigma**n <= 10**7 words and 2**n <= 2**25 subsets bound every count by
sigma**n * 2**n < 2**47).  Distinct counters encode subsequences in base
sigma+1; callers must check `(sigma+1)**n < 2**63` before dispatching here
(see `backend.encoding_fits`).

Words are int64 arrays of symbols 1..sigma, enumerated in lexicographic
order by an odometer so reductions visit the same order as the reference
backend.
"""
from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def _is_lyndon(buf, k):
    # Linear-time check via the Duval comparison loop.
    if k == 0:
        return False
    i = 0
    j = 1
    while j < k:
        if buf[j] > buf[i]:
            i = 0
            j += 1
        elif buf[j] == buf[i]:
            i += 1
            j += 1
        else:
            return False
    return i == 0


@njit(cache=True)
def _next_word(word, sigma):
    # In-place lexicographic successor; False once the space is exhausted.
    i = word.shape[0] - 1
    while i >= 0 and word[i] == sigma:
        word[i] = 1
        i -= 1
    if i < 0:
        return False
    word[i] += 1
    return True


@njit(cache=True)
def _subseq_total(word, scratch):
    n = word.shape[0]
    total = 0
    for mask in range(1, 1 << n):
        k = 0
        for i in range(n):
            if (mask >> i) & 1:
                scratch[k] = word[i]
                k += 1
        if _is_lyndon(scratch, k):
            total += 1
    return total


@njit(cache=True)
def _subseq_distinct(word, scratch, codes, base):
    n = word.shape[0]
    cnt = 0
    for mask in range(1, 1 << n):
        k = 0
        for i in range(n):
            if (mask >> i) & 1:
                scratch[k] = word[i]
                k += 1
        if _is_lyndon(scratch, k):
            code = np.int64(0)
            for t in range(k):
                code = code * base + scratch[t]
            codes[cnt] = code
            cnt += 1
    if cnt == 0:
        return 0
    s = np.sort(codes[:cnt])
    distinct = 1
    for t in range(1, cnt):
        if s[t] != s[t - 1]:
            distinct += 1
    return distinct


@njit(cache=True)
def _factor_total(word):
    n = word.shape[0]
    total = 0
    for i in range(n):
        for j in range(i + 1, n + 1):
            if _is_lyndon(word[i:j], j - i):
                total += 1
    return total


@njit(cache=True)
def _factor_distinct(word, codes, base):
    n = word.shape[0]
    cnt = 0
    for i in range(n):
        code = np.int64(0)
        for j in range(i, n):
            code = code * base + word[j]
            if _is_lyndon(word[i : j + 1], j - i + 1):
                codes[cnt] = code
                cnt += 1
    if cnt == 0:
        return 0
    s = np.sort(codes[:cnt])
    distinct = 1
    for t in range(1, cnt):
        if s[t] != s[t - 1]:
            distinct += 1
    return distinct


# -- per-word counters -------------------------------------------------------


def _word_array(symbols) -> np.ndarray:
    return np.asarray(symbols, dtype=np.int64).reshape(-1)


def word_subseq_total(symbols, sigma: int) -> int:
    word = _word_array(symbols)
    return int(_subseq_total(word, np.empty(word.size, np.int64)))


def word_subseq_distinct(symbols, sigma: int) -> int:
    word = _word_array(symbols)
    n = word.size
    return int(
        _subseq_distinct(
            word, np.empty(n, np.int64), np.empty(1 << n, np.int64), np.int64(sigma + 1)
        )
    )


def word_factor_total(symbols, sigma: int) -> int:
    return int(_factor_total(_word_array(symbols)))


def word_factor_distinct(symbols, sigma: int) -> int:
    word = _word_array(symbols)
    n = word.size
    codes = np.empty(n * (n + 1) // 2, np.int64)
    return int(_factor_distinct(word, codes, np.int64(sigma + 1)))


# -- whole-space reductions over all sigma**n words ---------------------------


@njit(cache=True)
def _sum_subseq_total(sigma, n):
    word = np.ones(n, np.int64)
    scratch = np.empty(n, np.int64)
    total = 0
    while True:
        total += _subseq_total(word, scratch)
        if not _next_word(word, sigma):
            return total


@njit(cache=True)
def _sum_subseq_distinct(sigma, n):
    word = np.ones(n, np.int64)
    scratch = np.empty(n, np.int64)
    codes = np.empty(1 << n, np.int64)
    base = np.int64(sigma + 1)
    total = 0
    while True:
        total += _subseq_distinct(word, scratch, codes, base)
        if not _next_word(word, sigma):
            return total


@njit(cache=True)
def _sum_factor_total(sigma, n):
    word = np.ones(n, np.int64)
    total = 0
    while True:
        total += _factor_total(word)
        if not _next_word(word, sigma):
            return total


@njit(cache=True)
def _sum_factor_distinct(sigma, n):
    word = np.ones(n, np.int64)
    codes = np.empty(n * (n + 1) // 2, np.int64)
    base = np.int64(sigma + 1)
    total = 0
    while True:
        total += _factor_distinct(word, codes, base)
        if not _next_word(word, sigma):
            return total


def sum_subseq_total(sigma: int, n: int) -> int:
    return int(_sum_subseq_total(sigma, n))


def sum_subseq_distinct(sigma: int, n: int) -> int:
    return int(_sum_subseq_distinct(sigma, n))


def sum_factor_total(sigma: int, n: int) -> int:
    return int(_sum_factor_total(sigma, n))


def sum_factor_distinct(sigma: int, n: int) -> int:
    return int(_sum_factor_distinct(sigma, n))


@njit(cache=True)
def _max_subseq_total(sigma, n, cap):
    word = np.ones(n, np.int64)
    scratch = np.empty(n, np.int64)
    wit = np.zeros((cap, n), np.int64)
    best = np.int64(-1)
    count = 0
    stored = 0
    while True:
        v = _subseq_total(word, scratch)
        if v > best:
            best = v
            count = 1
            stored = 0
            if cap > 0:
                wit[0, :] = word
                stored = 1
        elif v == best:
            count += 1
            if stored < cap:
                wit[stored, :] = word
                stored += 1
        if not _next_word(word, sigma):
            return best, count, wit, stored


@njit(cache=True)
def _max_factor_total(sigma, n, cap):
    word = np.ones(n, np.int64)
    wit = np.zeros((cap, n), np.int64)
    best = np.int64(-1)
    count = 0
    stored = 0
    while True:
        v = _factor_total(word)
        if v > best:
            best = v
            count = 1
            stored = 0
            if cap > 0:
                wit[0, :] = word
                stored = 1
        elif v == best:
            count += 1
            if stored < cap:
                wit[stored, :] = word
                stored += 1
        if not _next_word(word, sigma):
            return best, count, wit, stored


@njit(cache=True)
def _max_factor_distinct(sigma, n, cap):
    word = np.ones(n, np.int64)
    codes = np.empty(n * (n + 1) // 2, np.int64)
    base = np.int64(sigma + 1)
    wit = np.zeros((cap, n), np.int64)
    best = np.int64(-1)
    count = 0
    stored = 0
    while True:
        v = _factor_distinct(word, codes, base)
        if v > best:
            best = v
            count = 1
            stored = 0
            if cap > 0:
                wit[0, :] = word
                stored = 1
        elif v == best:
            count += 1
            if stored < cap:
                wit[stored, :] = word
                stored += 1
        if not _next_word(word, sigma):
            return best, count, wit, stored


def max_subseq_total(sigma: int, n: int, cap: int):
    best, count, wit, stored = _max_subseq_total(sigma, n, cap)
    return int(best), int(count), wit, int(stored)


def max_factor_total(sigma: int, n: int, cap: int):
    best, count, wit, stored = _max_factor_total(sigma, n, cap)
    return int(best), int(count), wit, int(stored)


def max_factor_distinct(sigma: int, n: int, cap: int):
    best, count, wit, stored = _max_factor_distinct(sigma, n, cap)
    return int(best), int(count), wit, int(stored)


@njit(cache=True)
def _count_lyndon_words(sigma, n):
    word = np.ones(n, np.int64)
    total = 0
    while True:
        if _is_lyndon(word, n):
            total += 1
        if not _next_word(word, sigma):
            return total


def count_lyndon_words(sigma: int, n: int) -> int:
    return int(_count_lyndon_words(sigma, n))


@njit(cache=True)
def _containment_counts(sigma, n, m, out):
    pat = np.ones(m, np.int64)
    idx = 0
    while True:
        cnt = 0
        word = np.ones(n, np.int64)
        while True:
            pos = 0
            for i in range(n):
                if pos < m and word[i] == pat[pos]:
                    pos += 1
            if pos == m:
                cnt += 1
            if not _next_word(word, sigma):
                break
        out[idx] = cnt
        idx += 1
        if not _next_word(pat, sigma):
            return out


def containment_counts(sigma: int, n: int, m: int) -> np.ndarray:
    out = np.empty(sigma**m, dtype=np.int64)
    return _containment_counts(sigma, n, m, out)
