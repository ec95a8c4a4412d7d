"""Compute budgets for the exhaustive enumeration paths.

Every brute-force operation estimates its work (number of words sigma**n,
number of subsets 2**n) *before* enumerating and refuses when the estimate
exceeds the cap.  Refusal is a typed error, never silent truncation.
"""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_WORDS = 10**7
DEFAULT_MAX_SUBSETS = 2**25


class BudgetExceededError(Exception):
    """Raised when an enumeration would exceed its compute budget."""

    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(
            f"budget exceeded: {what} requires {required} > limit {limit}"
        )


@dataclass(frozen=True)
class Budget:
    """Caps on exhaustive work: words enumerated and subsets per word."""

    max_enumerated_words: int = DEFAULT_MAX_WORDS
    max_subsets_per_word: int = DEFAULT_MAX_SUBSETS

    def __post_init__(self):
        if self.max_enumerated_words < 1 or self.max_subsets_per_word < 1:
            raise ValueError("budget caps must be positive")

    def check_words(self, sigma: int, n: int) -> int:
        """Validate sigma**n against the word cap; returns the word count."""
        count = sigma**n
        if count > self.max_enumerated_words:
            raise BudgetExceededError("word enumeration", count, self.max_enumerated_words)
        return count

    def check_subsets(self, n: int) -> int:
        """Validate 2**n against the per-word subset cap; returns 2**n."""
        count = 2**n
        if count > self.max_subsets_per_word:
            raise BudgetExceededError("subset enumeration", count, self.max_subsets_per_word)
        return count
