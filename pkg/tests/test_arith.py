import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from hecke import arith


def test_multinomial_examples():
    assert arith.multinomial(4, [2, 2]) == 6
    assert arith.multinomial(7, [7]) == 1
    assert arith.multinomial(5, [1, 1, 3]) == 20


def test_multinomial_rejects_bad_parts():
    with pytest.raises(ValueError):
        arith.multinomial(5, [2, 2])


def test_digit_sum_and_valuations():
    assert [arith.digit_sum_2(x) for x in (0, 6, 15)] == [0, 2, 4]
    assert arith.v2_binomial(7, 2) == 0
    assert arith.v2_binomial(9, 0) == 0
    assert arith.v2_binomial(4, 2) == 1
    assert arith.binom_mod2(7, 2) == 1
    assert arith.binom_mod2(4, 2) == 0
    assert arith.binom_mod2(11, 11) == 1
    assert [arith.v2_factorial(n) for n in (0, 4, 10)] == [0, 3, 8]


def test_binomial_arguments_validated():
    with pytest.raises(ValueError):
        arith.v2_binomial(2, 3)
    with pytest.raises(ValueError):
        arith.binom_mod2(2, 3)


def test_involutions_examples():
    assert arith.involutions(0) == 1
    assert arith.involutions(4) == 10
    assert arith.involutions(-3) == 0
    assert arith.v2_involutions(4) == 1
    assert arith.v2_involutions(1) == 0
    assert arith.v2_involutions(6) == 2
    with pytest.raises(ValueError):
        arith.v2_involutions(0)


def test_involutions_by_enumeration():
    for n in range(1, 8):
        count = sum(1 for p in permutations(range(n)) if all(p[p[i]] == i for i in range(n)))
        assert arith.involutions(n) == count


def test_involution_recurrence():
    for n in range(1, 300):
        assert arith.involutions(n + 1) == arith.involutions(n) + n * arith.involutions(n - 1)


def test_ochiai_valuation():
    for n in range(1, 201):
        assert arith.v2_involutions(n) == arith.v2(arith.involutions(n))


@given(st.integers(0, 600), st.data())
def test_kummer_and_lucas(a, data):
    b = data.draw(st.integers(0, a))
    c = math.comb(a, b)
    assert arith.v2_binomial(a, b) == arith.v2(c)
    assert arith.binom_mod2(a, b) == c % 2


@given(st.integers(0, 500))
def test_legendre(n):
    assert arith.v2_factorial(n) == arith.v2(math.factorial(n)) == n - arith.digit_sum_2(n)


def test_exact_div():
    assert arith.exact_div(12, 4) == 3
    with pytest.raises(arith.InexactDivisionError):
        arith.exact_div(7, 2)


def test_divisors_and_primes():
    assert arith.divisors(625) == [1, 5, 25, 125, 625]
    assert [p for p in range(20) if arith.is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
