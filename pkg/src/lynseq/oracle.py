"""Exhaustive brute-force verification of every closed form.

Each quantity is recomputed from first principles over all sigma**n words
(max, sum, or average of per-string counts; L by filtering; CONTAIN by
per-pattern counting) and compared exactly with the formula value.  Work is
estimated and checked against the budget *before* enumerating; the harness
refuses rather than degrades.  A mismatch is data, not an exception.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import backend, formulas
from .budget import Budget, BudgetExceededError
from .lyndon_enum import containment_count, count_lyndon
from .words import Alphabet, Word

__all__ = [
    "Budget",
    "BudgetExceededError",
    "VerificationResult",
    "MaxCensus",
    "Lemma1Report",
    "verify",
    "estimate_work",
    "max_census",
    "lemma1_invariance_check",
    "default_suite",
    "suite_cells",
    "run_cells",
    "SUM_QUANTITIES",
    "MAX_QUANTITIES",
    "VERIFIABLE_QUANTITIES",
    "DEFAULT_GRID",
]

SUM_QUANTITIES = ("TS", "ETS", "TDS", "EDS", "ETF", "EDF")
MAX_QUANTITIES = ("MTS", "MTF", "MDF", "L")
VERIFIABLE_QUANTITIES = SUM_QUANTITIES + MAX_QUANTITIES + ("CONTAIN",)

# (sigma, n cap for sum-type quantities, n cap for max-type quantities)
DEFAULT_GRID = ((2, 8, 10), (3, 5, 7), (5, 4, 4))

CENSUS_KINDS = ("subsequence-total", "factor-total", "factor-distinct")


@dataclass(frozen=True)
class VerificationResult:
    """Formula value vs exhaustive value for one (quantity, sigma, n) cell."""

    quantity: str
    sigma: int
    n: int
    formula_value: object
    oracle_value: object
    status: str  # "match" | "mismatch"
    work_done: int  # words enumerated

    @property
    def matched(self) -> bool:
        return self.status == "match"


@dataclass(frozen=True)
class MaxCensus:
    """Exhaustive maximum with the full count of attaining words."""

    kind: str
    sigma: int
    n: int
    max_value: int
    total_count: int
    attaining_words: tuple[Word, ...]  # capped sample, lexicographic order


@dataclass(frozen=True)
class Lemma1Report:
    """Containment-count invariance across all patterns of one length."""

    sigma: int
    m: int
    n: int
    ok: bool
    common_value: int | None
    formula_value: int
    patterns_checked: int


def _result(quantity, sigma, n, formula_value, oracle_value, work) -> VerificationResult:
    status = "match" if formula_value == oracle_value else "mismatch"
    return VerificationResult(quantity, sigma, n, formula_value, oracle_value, status, work)


def estimate_work(quantity: str, sigma: int, n: int, budget: Budget | None = None) -> int:
    """Estimate one cell's enumeration work and enforce the budget.

    Raises BudgetExceededError without enumerating anything; callers running
    several cells estimate them all up front so a refusal costs no work.
    """
    if budget is None:
        budget = Budget()
    if sigma < 1 or n < 1:
        raise ValueError("need sigma >= 1 and n >= 1")
    q = quantity.upper()
    if q not in VERIFIABLE_QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {sorted(VERIFIABLE_QUANTITIES)}")
    if q == "CONTAIN":
        work = sum(sigma**m * sigma**n for m in range(1, n + 1))
        if work > budget.max_enumerated_words:
            raise BudgetExceededError("containment enumeration", work, budget.max_enumerated_words)
        return work
    words = budget.check_words(sigma, n)
    if q in ("MTS", "TS", "ETS", "TDS", "EDS"):
        budget.check_subsets(n)
    return words


def verify(quantity: str, sigma: int, n: int, budget: Budget | None = None) -> VerificationResult:
    """Recompute one quantity exhaustively and compare with its closed form."""
    if budget is None:
        budget = Budget()
    q = quantity.upper()
    words = estimate_work(q, sigma, n, budget)

    if q == "CONTAIN":
        return _verify_contain(sigma, n, budget)

    K = backend.kernels()
    KD = backend.distinct_kernels(sigma, n)

    if q == "MTS":
        oracle_value, _, _, _ = K.max_subseq_total(sigma, n, 0)
        formula_value = formulas.mts(sigma, n)
    elif q == "MTF":
        oracle_value, _, _, _ = K.max_factor_total(sigma, n, 0)
        formula_value = formulas.mtf(sigma, n)
    elif q == "MDF":
        oracle_value, _, _, _ = KD.max_factor_distinct(sigma, n, 0)
        formula_value = formulas.mdf(sigma, n)
    elif q == "TS":
        oracle_value = K.sum_subseq_total(sigma, n)
        formula_value = formulas.ts(sigma, n)
    elif q == "ETS":
        oracle_value = Fraction(K.sum_subseq_total(sigma, n), sigma**n)
        formula_value = formulas.ets(sigma, n)
    elif q == "TDS":
        oracle_value = KD.sum_subseq_distinct(sigma, n)
        formula_value = formulas.tds(sigma, n)
    elif q == "EDS":
        oracle_value = Fraction(KD.sum_subseq_distinct(sigma, n), sigma**n)
        formula_value = formulas.eds(sigma, n)
    elif q == "ETF":
        oracle_value = Fraction(K.sum_factor_total(sigma, n), sigma**n)
        formula_value = formulas.etf(sigma, n)
    elif q == "EDF":
        oracle_value = Fraction(KD.sum_factor_distinct(sigma, n), sigma**n)
        formula_value = formulas.edf(sigma, n)
    else:  # L
        oracle_value = K.count_lyndon_words(sigma, n)
        formula_value = count_lyndon(sigma, n)

    return _result(q, sigma, n, formula_value, oracle_value, words)


def _verify_contain(sigma: int, n: int, budget: Budget) -> VerificationResult:
    work = sum(sigma**m * sigma**n for m in range(1, n + 1))
    K = backend.kernels()
    formula_values = []
    oracle_values = []
    for m in range(1, n + 1):
        counts = K.containment_counts(sigma, n, m)
        distinct = sorted({int(c) for c in counts})
        oracle_values.append(distinct[0] if len(distinct) == 1 else tuple(distinct))
        formula_values.append(containment_count(n, sigma, m))
    return _result("CONTAIN", sigma, n, tuple(formula_values), tuple(oracle_values), work)


def max_census(
    kind: str,
    sigma: int,
    n: int,
    budget: Budget | None = None,
    witness_cap: int = 64,
) -> MaxCensus:
    """Exhaustive maximum of a per-string count, with the number of words
    attaining it and up to `witness_cap` witnesses in lexicographic order."""
    if budget is None:
        budget = Budget()
    if kind not in CENSUS_KINDS:
        raise ValueError(f"unknown census kind {kind!r}; expected one of {CENSUS_KINDS}")
    if sigma < 1 or n < 1:
        raise ValueError("max_census: need sigma >= 1 and n >= 1")
    if witness_cap < 0:
        raise ValueError("max_census: witness_cap must be >= 0")
    budget.check_words(sigma, n)
    if kind == "subsequence-total":
        budget.check_subsets(n)
        best, count, wit, stored = backend.kernels().max_subseq_total(sigma, n, witness_cap)
    elif kind == "factor-total":
        best, count, wit, stored = backend.kernels().max_factor_total(sigma, n, witness_cap)
    else:
        best, count, wit, stored = backend.distinct_kernels(sigma, n).max_factor_distinct(
            sigma, n, witness_cap
        )
    alphabet = Alphabet(sigma)
    witnesses = tuple(
        Word(tuple(int(v) for v in wit[row]), alphabet) for row in range(stored)
    )
    return MaxCensus(
        kind=kind,
        sigma=sigma,
        n=n,
        max_value=int(best),
        total_count=int(count),
        attaining_words=witnesses,
    )


def lemma1_invariance_check(
    sigma: int, m: int, n: int, budget: Budget | None = None
) -> Lemma1Report:
    """Check that the containment count is the same for every length-m
    pattern and equals the closed form."""
    if budget is None:
        budget = Budget()
    if sigma < 1 or not 1 <= m <= n:
        raise ValueError("lemma1_invariance_check: need sigma >= 1 and 1 <= m <= n")
    work = sigma**m * sigma**n
    if work > budget.max_enumerated_words:
        raise BudgetExceededError("containment enumeration", work, budget.max_enumerated_words)
    counts = backend.kernels().containment_counts(sigma, n, m)
    distinct = {int(c) for c in counts}
    formula_value = containment_count(n, sigma, m)
    invariant = len(distinct) == 1
    common = distinct.pop() if invariant else None
    return Lemma1Report(
        sigma=sigma,
        m=m,
        n=n,
        ok=invariant and common == formula_value,
        common_value=common,
        formula_value=formula_value,
        patterns_checked=sigma**m,
    )


def suite_cells(
    quantity: str,
    sigma: int | None = None,
    n_max: int | None = None,
) -> list[tuple[str, int, int]]:
    """The (quantity, sigma, n) cells the verification suite will run.

    With quantity='all' this is the default exhaustive grid, optionally
    filtered by sigma / n_max.  For a single quantity, sigma defaults to the
    grid's alphabet sizes and n_max to the grid cap for that quantity kind.
    MDF cells with n < sigma are skipped (outside the formula's regime).
    """
    q = quantity.upper()
    cells: list[tuple[str, int, int]] = []

    def cap_for(qname: str, s: int) -> int:
        for gs, nsum, nmax in DEFAULT_GRID:
            if gs == s:
                return nsum if qname in SUM_QUANTITIES else nmax
        return 4  # conservative cap for alphabets outside the default grid

    if q == "ALL":
        quantities = SUM_QUANTITIES + MAX_QUANTITIES
        sigmas = [s for s, _, _ in DEFAULT_GRID] if sigma is None else [sigma]
    else:
        if q not in VERIFIABLE_QUANTITIES:
            raise ValueError(f"unknown quantity {quantity!r}")
        quantities = (q,)
        sigmas = [s for s, _, _ in DEFAULT_GRID] if sigma is None else [sigma]

    for s in sigmas:
        for qname in quantities:
            top = n_max if n_max is not None else cap_for(qname, s)
            start = 1
            if qname == "MDF":
                start = max(1, s)  # formula regime: n >= sigma
            if qname == "CONTAIN":
                top = min(top, 5) if n_max is None else top
            for n in range(start, top + 1):
                cells.append((qname, s, n))
    return cells


def run_cells(
    cells: list[tuple[str, int, int]], budget: Budget | None = None
) -> list[VerificationResult]:
    """Verify a list of cells, estimating every cell's budget before any
    enumeration starts so an over-budget request refuses at zero cost."""
    if budget is None:
        budget = Budget()
    for q, s, n in cells:
        estimate_work(q, s, n, budget)
    return [verify(q, s, n, budget) for q, s, n in cells]


def default_suite(budget: Budget | None = None) -> list[VerificationResult]:
    """Run the built-in exhaustive grid; bounded runtime by construction."""
    return run_cells(suite_cells("all"), budget)
