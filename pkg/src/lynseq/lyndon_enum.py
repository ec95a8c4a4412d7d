"""Lyndon word enumeration and subsequence-containment counting.

`lyndon_words` streams Lyndon words of a fixed length in lexicographic order
using Duval's successor algorithm.  `count_lyndon` is the Moebius/necklace
closed form; the two are cross-checked in the test suite.

`containment_count` is the closed form for the number of length-n words
containing a fixed length-m pattern as a subsequence.  The count does not
depend on which pattern is chosen, only on its length; that invariance is
what `containment_count_oracle` verifies exhaustively.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator

from .budget import DEFAULT_MAX_WORDS, BudgetExceededError
from .exactnum import binomial, divisors, mobius
from .words import Alphabet, Word, _unchecked_word

__all__ = [
    "lyndon_words",
    "count_lyndon",
    "containment_count",
    "containment_count_oracle",
    "all_words",
]


def _lyndon_symbol_stream(sigma: int, length: int) -> Iterator[tuple[int, ...]]:
    # Duval's successor algorithm; amortized O(1) per word generated.
    w = [0]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            yield tuple(w)
        elif m < length:
            # extend periodically: w[i] = w[i mod m] up to the target length
            w = (w * (length // m + 1))[:length]
        while w and w[-1] == sigma:
            w.pop()


def lyndon_words(sigma: int, length: int) -> Iterator[Word]:
    """Yield every Lyndon word of the given length over 1..sigma, in
    strictly increasing lexicographic order."""
    if sigma < 1 or length < 1:
        raise ValueError("lyndon_words: sigma and length must be >= 1")
    alphabet = Alphabet(sigma)
    for symbols in _lyndon_symbol_stream(sigma, length):
        yield _unchecked_word(symbols, alphabet)


def count_lyndon(sigma: int, length: int) -> int:
    """Number of Lyndon words of the given length: (1/n) sum_{d|n} mu(n/d) sigma^d."""
    if sigma < 1 or length < 1:
        raise ValueError("count_lyndon: sigma and length must be >= 1")
    total = sum(mobius(length // d) * sigma**d for d in divisors(length))
    if total % length:
        raise AssertionError(f"necklace sum not divisible by {length}")
    return total // length


def containment_count(n: int, sigma: int, m: int) -> int:
    """Number of length-n words over sigma symbols containing a fixed
    length-m pattern as a subsequence: sum_{k=m}^{n} C(n,k) (sigma-1)^(n-k).

    With sigma = 1 only the k = n term contributes (0**0 == 1).
    """
    if sigma < 1:
        raise ValueError("containment_count: sigma must be >= 1")
    if m < 1 or m > n:
        raise ValueError(f"containment_count: need 1 <= m <= n, got m={m}, n={n}")
    return sum(binomial(n, k) * (sigma - 1) ** (n - k) for k in range(m, n + 1))


def _contains_subsequence(s: tuple[int, ...], x: tuple[int, ...]) -> bool:
    pos = 0
    for c in s:
        if pos < len(x) and c == x[pos]:
            pos += 1
            if pos == len(x):
                return True
    return pos == len(x)


def containment_count_oracle(
    n: int, alphabet: Alphabet, x: Word, max_words: int = DEFAULT_MAX_WORDS
) -> int:
    """Exhaustively count the length-n words containing x as a subsequence."""
    if len(x) < 1 or len(x) > n:
        raise ValueError("containment_count_oracle: need 1 <= |x| <= n")
    total = 0
    target = x.symbols
    for symbols in _raw_words(alphabet.size, n, max_words):
        if _contains_subsequence(symbols, target):
            total += 1
    return total


def _raw_words(sigma: int, n: int, max_words: int) -> Iterator[tuple[int, ...]]:
    count = sigma**n
    if count > max_words:
        raise BudgetExceededError("word enumeration", count, max_words)
    return product(range(1, sigma + 1), repeat=n)


def all_words(sigma: int, n: int, max_words: int = DEFAULT_MAX_WORDS) -> Iterator[Word]:
    """Yield all sigma**n words of length n in lexicographic order."""
    if sigma < 1 or n < 0:
        raise ValueError("all_words: sigma must be >= 1 and n >= 0")
    alphabet = Alphabet(sigma)
    for symbols in _raw_words(sigma, n, max_words):
        yield Word(symbols, alphabet)
