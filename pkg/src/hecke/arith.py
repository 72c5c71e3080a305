"""Exact combinatorial primitives and 2-adic utilities.

Everything here works on Python ints, so there is no rounding anywhere.
A 2-adic valuation of zero is reported as ``math.inf``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "InexactDivisionError",
    "exact_div",
    "falling",
    "factorial_ratio",
    "multinomial",
    "digit_sum_2",
    "v2",
    "v2_binomial",
    "binom_mod2",
    "v2_factorial",
    "involutions",
    "v2_involutions",
    "divisors",
    "is_prime",
    "compositions",
]


class InexactDivisionError(ArithmeticError):
    """A division that the mathematics says is exact left a remainder."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


def falling(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1); the empty product for k <= 0 is 1."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


def factorial_ratio(a: int, b: int) -> int:
    """a!/b! under the convention 1/n! = 0 for n < 0.

    A negative ``b`` makes the whole term vanish. ``a`` must then be at
    least ``b``; anything else is not an integer and is refused.
    """
    if b < 0:
        return 0
    if a < b:
        raise ValueError(f"{a}!/{b}! is not an integer")
    return falling(a, a - b)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = 1
    left = n
    for p in parts:
        out *= math.comb(left, p)
        left -= p
    return out


def digit_sum_2(x: int) -> int:
    if x < 0:
        raise ValueError("binary digit sum of a negative number")
    return bin(x).count("1")


def v2(x: int) -> int | float:
    """2-adic valuation; ``math.inf`` for zero."""
    if x == 0:
        return math.inf
    x = abs(x)
    return (x & -x).bit_length() - 1


def v2_binomial(a: int, b: int) -> int:
    """v2(C(a, b)) by Kummer: the number of carries when adding b and a-b."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return digit_sum_2(b) + digit_sum_2(a - b) - digit_sum_2(a)


def binom_mod2(a: int, b: int) -> int:
    """C(a, b) mod 2 by Lucas: odd iff the bits of b are a subset of those of a."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return int(b & a == b)


def v2_factorial(n: int) -> int:
    """Legendre: v2(n!) = n - s2(n)."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    return n - digit_sum_2(n)


@lru_cache(maxsize=None)
def involutions(n: int) -> int:
    """Number of x in S_n with x^2 = 1 (zero for negative n)."""
    if n < 0:
        return 0
    return sum(
        exact_div(math.factorial(n), 2**a * math.factorial(a) * math.factorial(n - 2 * a))
        for a in range(n // 2 + 1)
    )


def v2_involutions(n: int) -> int:
    """Closed form for v2(I_n), n >= 1, by residue of n mod 4."""
    if n < 1:
        raise ValueError("the closed form is stated for n >= 1")
    r = n % 4
    shift = (0, -1, 2, 5)[r]
    return (n + shift) // 4


def divisors(m: int) -> list[int]:
    if m < 1:
        raise ValueError("divisors of a non-positive integer")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def compositions(total: int, parts: int, minimum: int = 1) -> Iterable[tuple[int, ...]]:
    """All ordered tuples of ``parts`` integers >= ``minimum`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            yield (first,) + rest
