from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lynseq.exactnum import binomial, divisors, mobius, render_decimal


class TestBinomial:
    def test_examples(self):
        assert binomial(5, 2) == 10
        assert binomial(4, 0) == 1
        assert binomial(3, 5) == 0

    def test_negative_k_is_zero(self):
        assert binomial(7, -1) == 0
        assert binomial(0, -3) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_pascal_identity(self):
        for n in range(1, 65):
            for k in range(1, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestMobius:
    def test_examples(self):
        assert mobius(1) == 1
        assert mobius(4) == 0
        assert mobius(30) == -1

    def test_small_values(self):
        # 1, -1, -1, 0, -1, 1, -1, 0, 0, 1
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            mobius(0)

    def test_divisor_sum_identity(self):
        assert sum(mobius(d) for d in divisors(1)) == 1
        for n in range(2, 10_001):
            assert sum(mobius(d) for d in divisors(n)) == 0, n


class TestDivisors:
    def test_examples(self):
        assert divisors(1) == [1]
        assert divisors(6) == [1, 2, 3, 6]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            divisors(0)

    def test_ascending_and_exact(self):
        for n in range(1, 500):
            ds = divisors(n)
            assert ds == sorted(set(ds))
            assert ds == [d for d in range(1, n + 1) if n % d == 0]


class TestRenderDecimal:
    def test_reference_values(self):
        assert render_decimal(Fraction(107, 16), 2) == "6.69"
        assert render_decimal(Fraction(9, 4), 2) == "2.25"
        assert render_decimal(Fraction(4), 2) == "4.00"

    def test_tie_rounds_away_from_zero(self):
        # 89/8 = 11.125 exactly; half-to-even would give "11.12"
        assert render_decimal(Fraction(89, 8), 2) == "11.13"
        assert render_decimal(Fraction(1, 8), 2) == "0.13"
        assert render_decimal(Fraction(5, 100), 1) == "0.1"

    def test_zero_places(self):
        assert render_decimal(Fraction(7, 2), 0) == "4"
        assert render_decimal(Fraction(5, 2), 0) == "3"
        assert render_decimal(Fraction(0), 0) == "0"

    def test_negative_values(self):
        assert render_decimal(Fraction(-89, 8), 2) == "-11.13"
        assert render_decimal(Fraction(-1, 1000), 2) == "0.00"

    def test_places_bounds(self):
        with pytest.raises(ValueError):
            render_decimal(Fraction(1, 2), -1)
        with pytest.raises(ValueError):
            render_decimal(Fraction(1, 2), 51)

    @given(
        num=st.integers(min_value=0, max_value=10**9),
        places=st.integers(min_value=0, max_value=9),
    )
    def test_roundtrip_terminating_fractions(self, num, places):
        # values k/10^places render exactly and parse back to themselves
        value = Fraction(num, 10**places)
        rendered = render_decimal(value, places)
        assert Fraction(rendered) == value


@given(
    a=st.integers(-1000, 1000),
    b=st.integers(1, 1000),
    c=st.integers(-1000, 1000),
    d=st.integers(1, 1000),
)
def test_rational_arithmetic_is_exact(a, b, c, d):
    x = Fraction(a, b)
    y = Fraction(c, d)
    assert (x + y) - y == x
    assert x.denominator > 0
    assert (x + y).denominator > 0
