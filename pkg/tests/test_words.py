from itertools import product

import pytest

from lynseq.budget import BudgetExceededError
from lynseq.words import (
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
    occ_count_bruteforce,
    parse_word,
)


def wtuple(symbols, sigma):
    return Word(tuple(symbols), Alphabet(sigma))


def all_word_tuples(sigma, n):
    return product(range(1, sigma + 1), repeat=n)


class TestTypes:
    def test_alphabet_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Alphabet(0)

    def test_word_validates_symbols(self):
        with pytest.raises(ValueError):
            wtuple([1, 3], 2)
        with pytest.raises(ValueError):
            wtuple([0], 2)

    def test_empty_word_allowed(self):
        assert len(wtuple([], 2)) == 0

    def test_prefix_is_smaller(self):
        assert wtuple([1], 2) < wtuple([1, 2], 2)
        assert wtuple([1, 1], 2) < wtuple([1, 2], 2)

    def test_position_set_strictly_increasing(self):
        with pytest.raises(ValueError):
            PositionSet((2, 2))
        with pytest.raises(ValueError):
            PositionSet((0, 1))

    def test_position_set_extract(self):
        w = parse_word("aabab")
        assert str(PositionSet((1, 3, 5)).extract(w)) == "abb"
        with pytest.raises(ValueError):
            PositionSet((6,)).extract(w)


class TestParsing:
    def test_letters(self):
        w = parse_word("aabb")
        assert w.symbols == (1, 1, 2, 2)
        assert w.alphabet.size == 2
        assert str(w) == "aabb"

    def test_integers(self):
        w = parse_word("1,2,11")
        assert w.symbols == (1, 2, 11)
        assert w.alphabet.size == 11

    def test_explicit_sigma(self):
        assert parse_word("ab", 5).alphabet.size == 5
        with pytest.raises(WordParseError):
            parse_word("abc", 2)

    def test_empty(self):
        assert parse_word("").symbols == ()

    def test_rejects_garbage(self):
        with pytest.raises(WordParseError):
            parse_word("a b")
        with pytest.raises(WordParseError):
            parse_word("0,1")

    def test_large_alphabet_renders_integers(self):
        w = Word((1, 27), Alphabet(27))
        assert str(w) == "1,27"

    def test_roundtrip_small_alphabet(self):
        for n in range(0, 6):
            for symbols in all_word_tuples(3, n):
                w = wtuple(symbols, 3)
                assert parse_word(str(w), 3) == w


class TestLyndonPredicates:
    def test_is_lyndon_examples(self):
        assert is_lyndon(parse_word("a", 2))
        assert is_lyndon(parse_word("ab"))
        assert not is_lyndon(parse_word("aa"))
        assert not is_lyndon(parse_word(""))

    def test_conjugate_examples(self):
        assert is_lyndon_by_conjugates(parse_word("aab"))
        assert not is_lyndon_by_conjugates(parse_word("aa"))
        assert not is_lyndon_by_conjugates(parse_word("ba"))

    def test_conjugate_rejects_empty(self):
        with pytest.raises(ValueError):
            is_lyndon_by_conjugates(parse_word(""))

    @pytest.mark.parametrize("sigma,nmax", [(2, 12), (3, 7)])
    def test_characterizations_agree(self, sigma, nmax):
        for n in range(1, nmax + 1):
            for symbols in all_word_tuples(sigma, n):
                w = wtuple(symbols, sigma)
                assert is_lyndon(w) == is_lyndon_by_conjugates(w), w


class TestDuval:
    def test_examples(self):
        assert [str(f) for f in duval_factorization(parse_word("ab"))] == ["ab"]
        assert [str(f) for f in duval_factorization(parse_word("ba"))] == ["b", "a"]
        assert [str(f) for f in duval_factorization(parse_word("aabab"))] == ["aabab"]

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            duval_factorization(parse_word(""))

    def test_factorization_properties(self):
        for n in range(1, 11):
            for symbols in all_word_tuples(2, n):
                w = wtuple(symbols, 2)
                factors = duval_factorization(w)
                assert sum((f.symbols for f in factors), ()) == symbols
                assert all(is_lyndon(f) for f in factors)
                assert all(
                    a.symbols >= b.symbols for a, b in zip(factors, factors[1:])
                )


class TestOccCount:
    def test_examples(self):
        assert occ_count(parse_word("aaa"), parse_word("aa")) == 3
        assert occ_count(parse_word("ab"), parse_word("ab")) == 1
        assert occ_count(parse_word("aabab"), parse_word("ab")) == 5

    def test_longer_pattern_gives_zero(self):
        assert occ_count(parse_word("a", 2), parse_word("ab")) == 0

    def test_rejects_empty_pattern(self):
        with pytest.raises(ValueError):
            occ_count(parse_word("ab"), parse_word(""))

    def test_against_bruteforce_exhaustive(self):
        patterns = [
            wtuple(p, 2) for m in range(1, 5) for p in all_word_tuples(2, m)
        ]
        for n in range(0, 9):
            for symbols in all_word_tuples(2, n):
                w = wtuple(symbols, 2)
                for x in patterns:
                    assert occ_count(w, x) == occ_count_bruteforce(w, x)

    def test_against_bruteforce_sampled_long(self):
        patterns = [
            wtuple(p, 2) for m in range(1, 5) for p in all_word_tuples(2, m)
        ]
        for n in (9, 10):
            for i, symbols in enumerate(all_word_tuples(2, n)):
                if i % 17:
                    continue
                w = wtuple(symbols, 2)
                for x in patterns:
                    assert occ_count(w, x) == occ_count_bruteforce(w, x)


class TestCounters:
    def test_factor_total_examples(self):
        assert count_lyndon_factor_occurrences(parse_word("aabb")) == 8
        assert count_lyndon_factor_occurrences(parse_word("aa")) == 2
        assert count_lyndon_factor_occurrences(parse_word("ab")) == 3

    def test_factor_distinct_examples(self):
        assert count_distinct_lyndon_factors(parse_word("aabb")) == 6
        assert count_distinct_lyndon_factors(parse_word("aaaa")) == 1
        assert count_distinct_lyndon_factors(parse_word("ab")) == 3

    def test_subseq_total_examples(self):
        assert count_lyndon_subsequence_occurrences(parse_word("ab")) == 3
        assert count_lyndon_subsequence_occurrences(parse_word("aa")) == 2
        assert count_lyndon_subsequence_occurrences(parse_word("aabb")) == 13
        # block word a b^3: 4 singletons + 3 ab + 3 abb + abbb
        assert count_lyndon_subsequence_occurrences(parse_word("abbb")) == 11

    def test_subseq_distinct_examples(self):
        assert count_distinct_lyndon_subsequences(parse_word("ab")) == 3
        assert count_distinct_lyndon_subsequences(parse_word("ba")) == 2

    def test_counters_reject_empty(self):
        for counter in (count_lyndon_factor_occurrences, count_distinct_lyndon_factors):
            with pytest.raises(ValueError):
                counter(parse_word(""))

    def test_empty_word_has_no_subsequences(self):
        assert count_lyndon_subsequence_occurrences(parse_word("")) == 0
        assert count_distinct_lyndon_subsequences(parse_word("")) == 0

    @pytest.mark.parametrize("sigma,nmax", [(2, 8), (3, 5)])
    def test_distinct_never_exceeds_total(self, sigma, nmax):
        for n in range(1, nmax + 1):
            for symbols in all_word_tuples(sigma, n):
                w = wtuple(symbols, sigma)
                assert count_distinct_lyndon_factors(w) <= count_lyndon_factor_occurrences(w)
                assert count_distinct_lyndon_subsequences(w) <= count_lyndon_subsequence_occurrences(w)

    def test_budget_cap(self):
        long_word = wtuple([1] * 26, 2)
        with pytest.raises(BudgetExceededError):
            count_lyndon_subsequence_occurrences(long_word)
        with pytest.raises(BudgetExceededError):
            count_distinct_lyndon_subsequences(long_word)

    def test_budget_override(self):
        w = parse_word("aabab")
        with pytest.raises(BudgetExceededError):
            count_lyndon_subsequence_occurrences(w, max_subsets=16)
        # 5 singletons + 5 ab pairs + {aab x3, abb x2} + {aabb, aaab} + aabab
        assert count_lyndon_subsequence_occurrences(w, max_subsets=32) == 19

    def test_average_distinct_subsequences_length_two(self):
        # words aa, ab, ba, bb have 1 + 3 + 2 + 1 = 7 distinct Lyndon subsequences
        total = sum(
            count_distinct_lyndon_subsequences(wtuple(s, 2))
            for s in all_word_tuples(2, 2)
        )
        assert total == 7
