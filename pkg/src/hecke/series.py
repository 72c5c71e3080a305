"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = ["SeriesQ"]


@dataclass(frozen=True)
class SeriesQ:
    """sum_{i <= order} coeffs[i] z^i, known exactly up to and including z^order.

    ``order`` is -1 for a series about which nothing is known.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable, order: int | None = None) -> "SeriesQ":
        vals = [Fraction(v) for v in values]
        if order is not None:
            vals = (vals + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(vals))

    @classmethod
    def zero(cls, order: int) -> "SeriesQ":
        return cls.of([], order)

    @classmethod
    def one(cls, order: int) -> "SeriesQ":
        return cls.of([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "SeriesQ":
        vals = [0] * (order + 1)
        if 0 <= power <= order:
            vals[power] = coeff
        return cls.of(vals)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            return Fraction(0)
        if i > self.order:
            raise IndexError(f"coefficient z^{i} is beyond the truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> "SeriesQ":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return SeriesQ(self.coeffs[: order + 1])

    def _coerce(self, other) -> "SeriesQ":
        if isinstance(other, SeriesQ):
            return other
        return SeriesQ.of([other], self.order)

    def __add__(self, other) -> "SeriesQ":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return SeriesQ(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "SeriesQ":
        return SeriesQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "SeriesQ":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SeriesQ":
        return self._coerce(other) - self

    def scale(self, c) -> "SeriesQ":
        c = Fraction(c)
        return SeriesQ(tuple(c * x for x in self.coeffs))

    def __mul__(self, other) -> "SeriesQ":
        if not isinstance(other, SeriesQ):
            return self.scale(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(self.coeffs[: n + 1]):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * other.coeffs[j]
        return SeriesQ(tuple(out))

    def __rmul__(self, other) -> "SeriesQ":
        return self.scale(other)

    def __pow__(self, k: int) -> "SeriesQ":
        if k < 0:
            return self.reciprocal() ** (-k)
        out = SeriesQ.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "SeriesQ":
        """Multiply by z^k. A negative k divides, and needs the low terms to vanish."""
        if k >= 0:
            return SeriesQ((Fraction(0),) * k + self.coeffs)
        if any(self.coeffs[: -k]):
            raise ValueError(f"series is not divisible by z^{-k}")
        return SeriesQ(self.coeffs[-k:])

    def derivative(self, times: int = 1) -> "SeriesQ":
        out = self
        for _ in range(times):
            out = SeriesQ(tuple(i * out.coeffs[i] for i in range(1, len(out.coeffs))))
        return out

    def integral(self) -> "SeriesQ":
        """Antiderivative with constant term 0."""
        return SeriesQ((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    def reciprocal(self) -> "SeriesQ":
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("reciprocal needs a non-zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out.append(-acc * inv0)
        return SeriesQ(tuple(out))

    def exp(self) -> "SeriesQ":
        """exp(f) for f with zero constant term, via n g_n = sum_k k f_k g_{n-k}."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term")
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = sum((k * self.coeffs[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
            g.append(acc / n)
        return SeriesQ(tuple(g[: self.order + 1]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def mod2(self) -> int:
        """Reduction mod 2 as a bitmask (bit i is the coefficient of z^i)."""
        mask = 0
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of z^{i} is not an integer: {c}")
            if c.numerator & 1:
                mask |= 1 << i
        return mask

    def agrees(self, other: "SeriesQ", order: int | None = None) -> bool:
        n = min(self.order, other.order) if order is None else order
        if n > self.order or n > other.order:
            raise ValueError(f"comparison to order {n} needs both series known that far")
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"SeriesQ({' + '.join(terms) or '0'} + O(z^{self.order + 1}))"
