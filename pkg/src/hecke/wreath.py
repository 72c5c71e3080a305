"""Wreath-product homomorphism counts and generalized subgroup numbers.

For a finite group H with h = |H|, a = |Hom(C2, H)| and b = |Hom(Cq, H)|,
alpha_n and beta_n count homomorphisms from C2 and Cq into H wr S_n.
Their product counts homomorphisms of C2 * Cq, and the exponential
formula turns those into the numbers s^H(n) = sum over index-n subgroups
D of |Hom(D, H)|.

Series conventions: S(z) = sum_{i >= 0} s^H(i + 1) z^i. The shift between
a power of z and a subgroup index lives only in ``index_of_power`` and
``power_of_index``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import InexactDivisionError, exact_div, factorial_ratio
from .series import SeriesQ

__all__ = [
    "HParams",
    "WreathContext",
    "alpha",
    "beta",
    "h_coeff",
    "s_general",
    "s3H_initial",
    "s3H_rec",
    "coeff_c",
    "coeff_d",
    "coeff_c_mod2",
    "coeff_d_mod2",
    "F_series",
    "H_series",
    "S_series",
    "logderiv",
    "faa_di_bruno",
    "index_of_power",
    "power_of_index",
    "fuss_catalan",
    "shat_mod2_coeff",
    "shat_mod2_series",
]


@dataclass(frozen=True)
class HParams:
    h: int
    a: int
    b: int

    def __post_init__(self):
        if min(self.h, self.a, self.b) < 1:
            raise ValueError(f"h, a, b must be positive, got {self}")

    @classmethod
    def trivial(cls) -> "HParams":
        return cls(1, 1, 1)

    @classmethod
    def cyclic(cls, r: int, q: int) -> "HParams":
        """H = C_r: x^2 = 1 has gcd(2, r) solutions, x^q = 1 has gcd(q, r)."""
        return cls(r, math.gcd(2, r), math.gcd(q, r))

    @property
    def h_even(self) -> bool:
        return self.h % 2 == 0

    def check_realizable(self) -> None:
        """Parity constraints every actual finite group satisfies.

        In a group of even order x^2 = 1 has an even number of solutions; in
        odd order only x = 1 does. Non-identity solutions of x^q = 1 come in
        blocks of q - 1, so b is odd.
        """
        if (self.a % 2 == 0) != (self.h % 2 == 0):
            raise ValueError(f"a={self.a} and h={self.h} must have the same parity")
        if self.h % 2 == 1 and self.a != 1:
            raise ValueError("a group of odd order has a = 1")
        if self.b % 2 == 0:
            raise ValueError(f"b={self.b} must be odd")


def index_of_power(i: int) -> int:
    """The subgroup index whose count sits at z^i in S(z)."""
    return i + 1


def power_of_index(n: int) -> int:
    return n - 1


class WreathContext:
    """Memo tables for one (q, H)."""

    def __init__(self, q: int, H: HParams):
        self.q = q
        self.H = H
        self._alpha = [1]
        self._beta = [1]
        self._s: list[int] = [0]  # s[0] is a placeholder; indices start at 1

    def alpha(self, n: int) -> int:
        if n < 0:
            return 0
        H = self.H
        while len(self._alpha) <= n:
            m = len(self._alpha) - 1
            prev = self._alpha[m - 1] if m >= 1 else 0
            self._alpha.append(H.a * self._alpha[m] + H.h * m * prev)
        return self._alpha[n]

    def beta(self, n: int) -> int:
        if n < 0:
            return 0
        H, q = self.H, self.q
        while len(self._beta) <= n:
            m = len(self._beta) - 1
            j = m - q + 1
            tail = H.h ** (q - 1) * factorial_ratio(m, j) * self._beta[j] if j >= 0 else 0
            self._beta.append(H.b * self._beta[m] + tail)
        return self._beta[n]

    def h_coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        return Fraction(self.alpha(n) * self.beta(n), self.H.h**n * math.factorial(n))

    def A(self, k: int, n: int) -> Fraction:
        m = n - k
        if n < 0 or m < 0:
            return Fraction(0)
        return Fraction(self.alpha(n) * self.beta(m), self.H.h**m * math.factorial(m))

    def s_general(self, n: int) -> int:
        if n < 1:
            raise ValueError("index must be positive")
        h = self.H.h
        while len(self._s) <= n:
            m = len(self._s)
            val = m * h * self.h_coeff(m) - sum(
                (self._s[k] * self.h_coeff(m - k) for k in range(1, m)), Fraction(0)
            )
            if val.denominator != 1:
                raise InexactDivisionError(f"s^H({m}) came out as {val} for {self.H}")
            if val < 0:
                raise ArithmeticError(f"s^H({m}) came out negative for {self.H}")
            self._s.append(int(val))
        return self._s[n]


def alpha(n: int, H: HParams) -> int:
    # alpha does not depend on q; any odd q will do for the context
    return WreathContext(3, H).alpha(n)


def beta(n: int, q: int, H: HParams) -> int:
    return WreathContext(q, H).beta(n)


def h_coeff(n: int, q: int, H: HParams) -> Fraction:
    return WreathContext(q, H).h_coeff(n)


def s_general(q: int, H: HParams, n: int, ctx: WreathContext | None = None) -> int:
    ctx = ctx or WreathContext(q, H)
    return ctx.s_general(n)


def s3H_initial(H: HParams) -> list[int]:
    """s_3^H(1), ..., s_3^H(9) as polynomials in h, a, b."""
    h, a, b = H.h, H.a, H.b
    return [
        a * b,
        b**2,
        a * (a**2 + 3 * h),
        4 * b * (a**2 + h),
        5 * a * b**2,
        3 * a**4 + 2 * b**3 + 5 * h**2 + 12 * a**2 * h,
        14 * a * b * (a**2 + 2 * h),
        8 * b**2 * (3 * a**2 + 2 * h),
        3 * a * (3 * a**4 + 6 * b**3 + 15 * h**2 + 16 * a**2 * h),
    ]


def s3H_rec_list(H: HParams, n_max: int) -> list[int]:
    """[s_3^H(1), ..., s_3^H(n_max)] from the nonlinear recurrence."""
    h, a, b = H.h, H.a, H.b
    s = [0] + s3H_initial(H)
    for n in range(10, n_max + 1):
        val = (
            4 * a * s[n - 3]
            + 2 * b * s[n - 4]
            + (h * n - 3 * a**2) * s[n - 6]
            - 2 * a * b * s[n - 7]
            - a * h * (n - 6) * s[n - 9]
            + sum(s[m] * s[n - m - 6] for m in range(1, n - 6))
            - a * sum(s[m] * s[n - m - 9] for m in range(1, n - 9))
        )
        s.append(val)
    return s[1 : n_max + 1]


def s3H_rec(H: HParams, n: int) -> int:
    if n < 1:
        raise ValueError("index must be positive")
    return s3H_rec_list(H, max(n, 9))[n - 1]


@lru_cache(maxsize=None)
def coeff_c(k: int, mu: int, H: HParams) -> int:
    if k < 0 or not 0 <= mu <= k // 2:
        raise ValueError(f"c_{k}^({mu}) is out of range")
    h, a = H.h, H.a
    if k <= 2:
        return {(0, 0): 1, (1, 0): 0, (2, 0): h, (2, 1): 1}[(k, mu)]
    j = k - 1  # the table expresses c_{j+1} through c_j and c_{j-1}
    if mu == 0:
        return a * coeff_c(j, 0, H) + h * j * coeff_c(j - 1, 0, H)
    if mu <= (j - 1) // 2:
        return a * coeff_c(j, mu, H) + h * (j + mu) * coeff_c(j - 1, mu, H) + coeff_c(j - 1, mu - 1, H)
    # mu == floor((j+1)/2)
    if j % 2:
        return coeff_c(j - 1, (j - 1) // 2, H)
    return a * coeff_c(j, j // 2, H) + coeff_c(j - 1, (j - 2) // 2, H)


@lru_cache(maxsize=None)
def coeff_d(k: int, nu: int, H: HParams) -> int:
    if k < 1 or not 0 <= nu <= (k - 1) // 2:
        raise ValueError(f"d_{k}^({nu}) is out of range")
    h, a = H.h, H.a
    if k <= 2:
        return {(1, 0): 1, (2, 0): a}[(k, nu)]
    j = k - 1
    if nu == 0:
        return a * coeff_d(j, 0, H) + h * (j - 1) * coeff_d(j - 1, 0, H)
    if nu <= (j - 2) // 2:
        return a * coeff_d(j, nu, H) + h * (j + nu - 1) * coeff_d(j - 1, nu, H) + coeff_d(j - 1, nu - 1, H)
    # nu == floor(j/2)
    if j % 2:
        return a * coeff_d(j, (j - 1) // 2, H) + coeff_d(j - 1, (j - 3) // 2, H)
    return coeff_d(j - 1, (j - 2) // 2, H)


def coeff_c_mod2(k: int, mu: int, h_even: bool) -> int:
    """Closed form of c_k^(mu) mod 2, valid for realizable H."""
    if h_even:
        return int(k == 2 * mu)
    if mu % 2:
        return int(k in (2 * mu, 2 * mu + 1))
    return int(k in (2 * mu, 2 * mu + 2, 2 * mu + 3))


def coeff_d_mod2(k: int, nu: int, h_even: bool) -> int:
    if h_even:
        return int(k == 2 * nu + 1)
    if nu % 2:
        return int(k == 2 * nu + 1)
    return int(k in (2 * nu + 1, 2 * nu + 2))


def F_series(k: int, q: int, H: HParams, order: int, ctx: WreathContext | None = None) -> SeriesQ:
    """F_k(z) = sum_n A_k(n) z^n; k may be negative."""
    ctx = ctx or WreathContext(q, H)
    return SeriesQ(tuple(ctx.A(k, n) for n in range(order + 1)))


def H_series(q: int, H: HParams, order: int, ctx: WreathContext | None = None) -> SeriesQ:
    ctx = ctx or WreathContext(q, H)
    return SeriesQ(tuple(ctx.h_coeff(n) for n in range(order + 1)))


def S_series(q: int, H: HParams, order: int, ctx: WreathContext | None = None) -> SeriesQ:
    ctx = ctx or WreathContext(q, H)
    return SeriesQ.of(ctx.s_general(index_of_power(i)) for i in range(order + 1))


def logderiv(f: SeriesQ, nu: int, h: int) -> SeriesQ:
    """h^nu f^(nu) / f."""
    if f.order < 0 or f[0] == 0:
        raise ValueError("logderiv needs a non-zero constant term")
    if nu == 0:
        return SeriesQ.one(f.order)
    d = f.derivative(nu)
    return (d * f.truncate(d.order).reciprocal()).scale(h**nu)


def _partitions_by_multiplicity(nu: int):
    """Tuples (pi_1, ..., pi_nu) with sum j * pi_j = nu."""

    def rec(j: int, left: int):
        if j > nu:
            if left == 0:
                yield ()
            return
        for p in range(left // j + 1):
            for rest in rec(j + 1, left - j * p):
                yield (p,) + rest

    yield from rec(1, nu)


def faa_di_bruno(S: SeriesQ, nu: int, h: int) -> SeriesQ:
    """The Bell-polynomial expansion of h^nu H^(nu)/H in terms of S = h H'/H."""
    if nu == 0:
        return SeriesQ.one(S.order)
    order = S.order - (nu - 1)
    derivs = [S.derivative(j).truncate(order) for j in range(nu)]
    total = SeriesQ.zero(order)
    for pis in _partitions_by_multiplicity(nu):
        weight = math.factorial(nu)
        term = SeriesQ.one(order)
        for j, p in enumerate(pis, start=1):
            weight = exact_div(weight, math.factorial(j) ** p * math.factorial(p)) if p else weight
            term = term * derivs[j - 1] ** p
        total = total + term.scale(weight * h ** (nu - sum(pis)))
    return total


def fuss_catalan(q: int, eta: int) -> int:
    m = (q - 1) * eta + 1
    return exact_div(math.comb(m, eta), m)


def shat_mod2_coeff(q: int, n: int) -> int:
    """Parity of s_q^H(n) for every H of even order."""
    if n < 1:
        raise ValueError("index must be positive")
    step = 4 * (q - 1)
    if (n - 2) % step:
        return 0
    return fuss_catalan(q, (n - 2) // step) & 1


def shat_mod2_series(q: int, order: int) -> int:
    """Bitmask of the solution of T = z + z^(3q-2) T^(q-1) over GF(2), to ``order``."""
    from .gf2 import poly_pow, poly_trunc

    t = 0b10
    while True:
        nxt = poly_trunc(0b10 ^ (poly_pow(t, q - 1) << (3 * q - 2)), order)
        if nxt == t:
            return t
        t = nxt
