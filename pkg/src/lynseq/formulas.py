"""Closed-form counting formulas and extremal witness construction.

All extremal formulas share the decomposition n = m*sigma + p with
0 <= p < sigma.  Totals are exact integers; expected values are exact
rationals (value / sigma**n).

Note on `mtf`: two variants of the maximum-total-factors formula circulate,
differing in the leading term (C(n+1,2) vs C(n,2)).  Exhaustive search
settles it: at sigma=2, n=4 the true maximum is 8, which only the C(n+1,2)
variant produces (the C(n,2) variant gives 4).  `mtf` therefore uses
C(n+1,2); the rejected variant is kept as `mtf_alternate_variant` so the
verification suite can document the refutation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import binomial
from .lyndon_enum import containment_count, count_lyndon
from .words import Alphabet, Word

__all__ = [
    "Decomposition",
    "BlockComposition",
    "CountReport",
    "mts",
    "mts_witness",
    "mts_maximizer_count",
    "mtf",
    "mtf_alternate_variant",
    "mdf",
    "ts",
    "ets",
    "tds",
    "eds",
    "etf",
    "edf",
    "block_total_subsequences",
    "block_total_factors",
    "QUANTITIES",
    "compute",
    "compute_report",
]


@dataclass(frozen=True)
class Decomposition:
    """n = m*sigma + p with 0 <= p < sigma."""

    sigma: int
    n: int
    m: int
    p: int

    @classmethod
    def of(cls, sigma: int, n: int) -> "Decomposition":
        if sigma < 1 or n < 1:
            raise ValueError("need sigma >= 1 and n >= 1")
        return cls(sigma=sigma, n=n, m=n // sigma, p=n % sigma)


@dataclass(frozen=True)
class BlockComposition:
    """Block lengths (k_1, ..., k_sigma) of a word a_1^k1 a_2^k2 ... a_sigma^k_sigma."""

    k: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) < 1:
            raise ValueError("block composition needs at least one block")
        if any(ki < 0 for ki in self.k):
            raise ValueError("block lengths must be non-negative")

    @property
    def n(self) -> int:
        return sum(self.k)

    @property
    def sigma(self) -> int:
        return len(self.k)

    def word(self) -> Word:
        symbols = []
        for i, ki in enumerate(self.k, start=1):
            symbols.extend([i] * ki)
        return Word(tuple(symbols), Alphabet(self.sigma))


@dataclass(frozen=True)
class CountReport:
    """A named quantity with its parameters, exact value, and provenance."""

    quantity: str
    sigma: int
    n: int
    value: int | Fraction
    provenance: str  # "formula" | "oracle"

    def __post_init__(self):
        if self.provenance not in ("formula", "oracle"):
            raise ValueError(f"unknown provenance {self.provenance!r}")


def mts(sigma: int, n: int) -> int:
    """Maximum total number of Lyndon subsequences over all length-n words:
    2^n - (p + sigma) 2^m + n + sigma - 1."""
    d = Decomposition.of(sigma, n)
    return 2**n - (d.p + sigma) * 2**d.m + n + sigma - 1


def mts_witness(sigma: int, n: int) -> Word:
    """The canonical maximizer: sigma-p blocks of length m, then p blocks of
    length m+1, letters in increasing order."""
    d = Decomposition.of(sigma, n)
    lengths = [d.m] * (sigma - d.p) + [d.m + 1] * d.p
    symbols = []
    for letter, length in enumerate(lengths, start=1):
        symbols.extend([letter] * length)
    return Word(tuple(symbols), Alphabet(sigma))


def mts_maximizer_count(sigma: int, n: int) -> int:
    """Number of length-n words attaining the maximum: C(sigma, p)."""
    d = Decomposition.of(sigma, n)
    return binomial(sigma, d.p)


def mtf(sigma: int, n: int) -> int:
    """Maximum total number of Lyndon factors over all length-n words:
    C(n+1,2) - (sigma-p) C(m+1,2) - p C(m+2,2) + n."""
    d = Decomposition.of(sigma, n)
    return (
        binomial(n + 1, 2)
        - (sigma - d.p) * binomial(d.m + 1, 2)
        - d.p * binomial(d.m + 2, 2)
        + n
    )


def mtf_alternate_variant(sigma: int, n: int) -> int:
    """The rejected C(n,2)-leading variant of `mtf`; refuted by exhaustive
    search (sigma=2, n=4: gives 4, true maximum 8).  Kept for reporting."""
    d = Decomposition.of(sigma, n)
    return (
        binomial(n, 2)
        - (sigma - d.p) * binomial(d.m + 1, 2)
        - d.p * binomial(d.m + 2, 2)
        + n
    )


def mdf(sigma: int, n: int) -> int:
    """Maximum number of distinct Lyndon factors, valid for n >= sigma:
    C(n+1,2) - (sigma-p) C(m+1,2) - p C(m+2,2) + sigma.

    Below n = sigma the formula provably overshoots the true maximum
    (e.g. sigma=3, n=1: formula 3, true value 1), so that regime is rejected.
    """
    if n < sigma:
        raise ValueError(f"mdf: formula requires n >= sigma, got sigma={sigma}, n={n}")
    d = Decomposition.of(sigma, n)
    return (
        binomial(n + 1, 2)
        - (sigma - d.p) * binomial(d.m + 1, 2)
        - d.p * binomial(d.m + 2, 2)
        + sigma
    )


def ts(sigma: int, n: int) -> int:
    """Total number of Lyndon subsequence occurrences over all length-n words:
    sum_m L(sigma,m) C(n,m) sigma^(n-m)."""
    if sigma < 1 or n < 1:
        raise ValueError("need sigma >= 1 and n >= 1")
    return sum(
        count_lyndon(sigma, m) * binomial(n, m) * sigma ** (n - m)
        for m in range(1, n + 1)
    )


def ets(sigma: int, n: int) -> Fraction:
    """Expected total number of Lyndon subsequences: TS / sigma^n."""
    return Fraction(ts(sigma, n), sigma**n)


def tds(sigma: int, n: int) -> int:
    """Total number of distinct Lyndon subsequences over all length-n words:
    sum_m L(sigma,m) * containment_count(n, sigma, m)."""
    if sigma < 1 or n < 1:
        raise ValueError("need sigma >= 1 and n >= 1")
    return sum(
        count_lyndon(sigma, m) * containment_count(n, sigma, m)
        for m in range(1, n + 1)
    )


def eds(sigma: int, n: int) -> Fraction:
    """Expected number of distinct Lyndon subsequences: TDS / sigma^n."""
    return Fraction(tds(sigma, n), sigma**n)


def etf(sigma: int, n: int) -> Fraction:
    """Expected total number of Lyndon factors:
    sum_m L(sigma,m) (n-m+1) sigma^(-m)."""
    if sigma < 1 or n < 1:
        raise ValueError("need sigma >= 1 and n >= 1")
    return sum(
        Fraction(count_lyndon(sigma, m) * (n - m + 1), sigma**m)
        for m in range(1, n + 1)
    )


def edf(sigma: int, n: int) -> Fraction:
    """Expected number of distinct Lyndon factors:
    sum_m L(sigma,m) sum_s (-1)^(s+1) C(n-s*m+s, s) sigma^(-s*m)."""
    if sigma < 1 or n < 1:
        raise ValueError("need sigma >= 1 and n >= 1")
    total = Fraction(0)
    for m in range(1, n + 1):
        inner = Fraction(0)
        for s in range(1, n // m + 1):
            term = Fraction(binomial(n - s * m + s, s), sigma ** (s * m))
            inner += term if s % 2 else -term
        total += count_lyndon(sigma, m) * inner
    return total


def block_total_subsequences(comp: BlockComposition) -> int:
    """Lyndon subsequence occurrences of the block word a_1^k1 ... a_sigma^k_sigma:
    2^n - 1 - sum_i 2^(k_i) + n + sigma."""
    n = comp.n
    if n < 1:
        raise ValueError("block word must be non-empty")
    return 2**n - 1 - sum(2**ki for ki in comp.k) + n + comp.sigma


def block_total_factors(comp: BlockComposition) -> int:
    """Lyndon factor occurrences of the block word:
    C(n+1,2) - sum_i C(k_i+1, 2) + n."""
    n = comp.n
    if n < 1:
        raise ValueError("block word must be non-empty")
    return binomial(n + 1, 2) - sum(binomial(ki + 1, 2) for ki in comp.k) + n


# Quantity registry: canonical name -> (callable, result kind).
QUANTITIES: dict[str, tuple] = {
    "MTS": (mts, "natural"),
    "MTF": (mtf, "natural"),
    "MDF": (mdf, "natural"),
    "TS": (ts, "natural"),
    "ETS": (ets, "rational"),
    "TDS": (tds, "natural"),
    "EDS": (eds, "rational"),
    "ETF": (etf, "rational"),
    "EDF": (edf, "rational"),
    "L": (count_lyndon, "natural"),
}


def compute(quantity: str, sigma: int, n: int) -> int | Fraction:
    """Evaluate a named quantity's closed form."""
    key = quantity.upper()
    if key not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {sorted(QUANTITIES)}")
    fn, _ = QUANTITIES[key]
    return fn(sigma, n)


def compute_report(quantity: str, sigma: int, n: int) -> CountReport:
    """Evaluate a named quantity and wrap it with provenance metadata."""
    return CountReport(
        quantity=quantity.upper(),
        sigma=sigma,
        n=n,
        value=compute(quantity, sigma, n),
        provenance="formula",
    )
