"""Words over an ordered alphabet and exact per-string Lyndon counters.

Symbols are the integers 1..sigma with the natural order.  Lexicographic
comparison uses the standard prefix rule (a proper prefix is smaller), which
is exactly Python's tuple ordering.  A word renders as letters 'a'..'z' when
the alphabet fits, otherwise as comma-separated integers.

The subset-enumeration counters here are deliberately transparent,
oracle-grade implementations: they enumerate position sets and apply the
definition.  Accelerated equivalents live in the kernel backends and are
tested against these.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .budget import DEFAULT_MAX_SUBSETS, BudgetExceededError

__all__ = [
    "Alphabet",
    "Word",
    "PositionSet",
    "WordParseError",
    "word",
    "parse_word",
    "is_lyndon",
    "is_lyndon_by_conjugates",
    "duval_factorization",
    "occ_count",
    "occ_count_bruteforce",
    "count_lyndon_factor_occurrences",
    "count_distinct_lyndon_factors",
    "count_lyndon_subsequence_occurrences",
    "count_distinct_lyndon_subsequences",
]


class WordParseError(ValueError):
    """Raised when a word's text form cannot be parsed."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet of symbols 1..size."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")

    def symbols(self) -> range:
        return range(1, self.size + 1)


@dataclass(frozen=True)
class Word:
    """A finite sequence of symbols drawn from an alphabet (may be empty)."""

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        if self.symbols and not (
            min(self.symbols) >= 1 and max(self.symbols) <= self.alphabet.size
        ):
            bad = next(s for s in self.symbols if not 1 <= s <= self.alphabet.size)
            raise ValueError(f"symbol {bad} out of range 1..{self.alphabet.size}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __lt__(self, other: "Word") -> bool:
        return self.symbols < other.symbols

    def __str__(self) -> str:
        if self.alphabet.size <= 26:
            return "".join(chr(ord("a") + s - 1) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def text(self) -> str:
        return str(self)


@dataclass(frozen=True)
class PositionSet:
    """Strictly increasing 1-based positions selecting a subsequence."""

    positions: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for p in self.positions:
            if p <= prev:
                raise ValueError(
                    f"positions must be strictly increasing, got {self.positions}"
                )
            prev = p

    def extract(self, w: Word) -> Word:
        if self.positions and self.positions[-1] > len(w):
            raise ValueError("position exceeds word length")
        return Word(tuple(w.symbols[p - 1] for p in self.positions), w.alphabet)


def _unchecked_word(symbols: tuple[int, ...], alphabet: Alphabet) -> Word:
    # Construction fast path for enumeration streams whose symbols are valid
    # by construction; skips dataclass validation (matters at ~10^7 words).
    w = object.__new__(Word)
    object.__setattr__(w, "symbols", symbols)
    object.__setattr__(w, "alphabet", alphabet)
    return w


_LETTERS_RE = re.compile(r"^[a-z]+$")
_INTS_RE = re.compile(r"^\d+(,\d+)*$")


def word(text: str, sigma: int | None = None) -> Word:
    """Shorthand for :func:`parse_word`."""
    return parse_word(text, sigma)


def parse_word(text: str, sigma: int | None = None) -> Word:
    """Parse a word from letters ('aabb') or comma-separated integers ('1,1,2,2').

    When sigma is omitted the alphabet size is inferred as the largest symbol
    (at least 1, so the empty word gets a unary alphabet).
    """
    text = text.strip()
    if text == "":
        symbols: tuple[int, ...] = ()
    elif _LETTERS_RE.match(text):
        symbols = tuple(ord(c) - ord("a") + 1 for c in text)
    elif _INTS_RE.match(text):
        symbols = tuple(int(part) for part in text.split(","))
        if any(s < 1 for s in symbols):
            raise WordParseError(f"symbols must be >= 1: {text!r}")
    else:
        raise WordParseError(
            f"cannot parse word {text!r}: expected lowercase letters or comma-separated integers"
        )
    if sigma is None:
        sigma = max(symbols, default=1)
    if any(s > sigma for s in symbols):
        raise WordParseError(f"word {text!r} uses symbols beyond alphabet size {sigma}")
    return Word(symbols, Alphabet(sigma))


# ---------------------------------------------------------------------------
# Tuple-level internals.  The public API wraps these; the pure-Python kernel
# backend reuses them directly so both share one definition of the semantics.
# ---------------------------------------------------------------------------


def _is_lyndon_symbols(s: tuple[int, ...]) -> bool:
    # Definitional check: strictly smaller than every non-empty proper suffix.
    n = len(s)
    if n == 0:
        return False
    return all(s < s[i:] for i in range(1, n))


def _factor_total_symbols(s: tuple[int, ...]) -> int:
    n = len(s)
    return sum(
        1 for i in range(n) for j in range(i + 1, n + 1) if _is_lyndon_symbols(s[i:j])
    )


def _factor_distinct_symbols(s: tuple[int, ...]) -> int:
    n = len(s)
    seen = {s[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    return sum(1 for t in seen if _is_lyndon_symbols(t))


def _subseq_total_symbols(s: tuple[int, ...]) -> int:
    n = len(s)
    total = 0
    for mask in range(1, 1 << n):
        sub = tuple(s[i] for i in range(n) if (mask >> i) & 1)
        if _is_lyndon_symbols(sub):
            total += 1
    return total


def _subseq_distinct_symbols(s: tuple[int, ...]) -> int:
    n = len(s)
    seen = set()
    for mask in range(1, 1 << n):
        seen.add(tuple(s[i] for i in range(n) if (mask >> i) & 1))
    return sum(1 for sub in seen if _is_lyndon_symbols(sub))


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def is_lyndon(w: Word) -> bool:
    """True iff w is non-empty and smaller than all its non-empty proper suffixes."""
    return _is_lyndon_symbols(w.symbols)


def is_lyndon_by_conjugates(w: Word) -> bool:
    """True iff w strictly precedes every one of its |w|-1 rotations.

    Strict minimality among conjugates is equivalent to being the smallest
    conjugate *and* primitive, and agrees with :func:`is_lyndon` everywhere.
    """
    s = w.symbols
    n = len(s)
    if n == 0:
        raise ValueError("is_lyndon_by_conjugates: empty word has no conjugates")
    return all(s < s[i:] + s[:i] for i in range(1, n))


def duval_factorization(w: Word) -> list[Word]:
    """Unique factorization w = f1 f2 ... fk into non-increasing Lyndon words."""
    s = w.symbols
    n = len(s)
    if n == 0:
        raise ValueError("duval_factorization: empty word")
    factors = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        step = j - k
        while i <= k:
            factors.append(Word(s[i : i + step], w.alphabet))
            i += step
    return factors


def occ_count(w: Word, x: Word) -> int:
    """Number of position sets at which x occurs in w as a subsequence.

    Standard embedding-count dynamic program, O(|w|*|x|) exact-integer steps.
    """
    if len(x) == 0:
        raise ValueError("occ_count: pattern must be non-empty")
    t = x.symbols
    m = len(t)
    # dp[j] = embeddings of t[:j] into the prefix of w seen so far
    dp = [0] * (m + 1)
    dp[0] = 1
    for c in w.symbols:
        for j in range(m, 0, -1):
            if t[j - 1] == c:
                dp[j] += dp[j - 1]
    return dp[m]


def occ_count_bruteforce(w: Word, x: Word) -> int:
    """Independent occurrence counter: scan all position sets of size |x|.

    Exponentially slower than :func:`occ_count`; exists to cross-check it.
    """
    if len(x) == 0:
        raise ValueError("occ_count_bruteforce: pattern must be non-empty")
    s = w.symbols
    t = x.symbols
    return sum(1 for idx in combinations(range(len(s)), len(t)) if tuple(s[i] for i in idx) == t)


def count_lyndon_factor_occurrences(w: Word) -> int:
    """Number of pairs (i, j) with w[i..j] a Lyndon word."""
    if len(w) == 0:
        raise ValueError("count_lyndon_factor_occurrences: empty word")
    return _factor_total_symbols(w.symbols)


def count_distinct_lyndon_factors(w: Word) -> int:
    """Number of distinct substrings of w that are Lyndon words."""
    if len(w) == 0:
        raise ValueError("count_distinct_lyndon_factors: empty word")
    return _factor_distinct_symbols(w.symbols)


def _check_subset_budget(n: int, max_subsets: int) -> None:
    if 2**n > max_subsets:
        raise BudgetExceededError("subset enumeration", 2**n, max_subsets)


def count_lyndon_subsequence_occurrences(
    w: Word, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> int:
    """Number of non-empty position sets inducing a Lyndon subsequence.

    Subset enumeration: exponential in |w| and guarded by `max_subsets`.
    """
    _check_subset_budget(len(w), max_subsets)
    return _subseq_total_symbols(w.symbols)


def count_distinct_lyndon_subsequences(
    w: Word, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> int:
    """Number of distinct non-empty subsequence strings of w that are Lyndon."""
    _check_subset_budget(len(w), max_subsets)
    return _subseq_distinct_symbols(w.symbols)
