"""Closed-form subgroup counts for C2 * Cq.

The basic quantity is M_core(q, k, e): the number of connected graphs made
of k labelled, oriented q-gons (vertex set {0..qk-1}) and e pairwise
disjoint extra edges. It is computed by inclusion-exclusion over set
partitions of the q-gons, grouped by the number gamma of blocks. Every
other count here is a rational multiple of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import InexactDivisionError, exact_div, factorial_ratio

__all__ = [
    "CensusContext",
    "CountTable",
    "matching_poly",
    "M_core",
    "M_core_by_e",
    "M_tree",
    "M_general",
    "s_type",
    "M_total",
    "s_total",
    "N_count",
    "f_count",
    "M_count",
]


def matching_poly(points: int) -> list[int]:
    """Coefficient list in t of sum_alpha #{alpha disjoint edges on `points` vertices} t^alpha."""
    return [
        exact_div(math.factorial(points), 2**a * math.factorial(a) * math.factorial(points - 2 * a))
        for a in range(points // 2 + 1)
    ]


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def _poly_add_into(acc: list[int], f: list[int], scale: int) -> None:
    if len(acc) < len(f):
        acc.extend([0] * (len(f) - len(acc)))
    for i, x in enumerate(f):
        acc[i] += scale * x


@dataclass
class CountTable:
    q: int
    rows: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        for n, c in self.rows:
            if c < 0:
                raise ValueError(f"negative count at n={n}")


class CensusContext:
    """Holds the memo tables for one q. Not thread-safe; make one per worker."""

    def __init__(self, q: int):
        if q < 3 or q % 2 == 0:
            raise ValueError(f"q must be an odd prime, got {q}")
        self.q = q
        self._core: dict[int, list[int]] = {}

    def M_core_by_e(self, k: int) -> list[int]:
        """[M_core(q, k, e) for e = 0 .. qk//2].

        For a fixed number gamma of blocks, the sum over ordered block sizes
        rho and edge splits alpha is the coefficient of t^e in
            sum_rho multinomial(k; rho) prod_i P_{q rho_i}(t),
        where P_m(t) is the matching polynomial on m points. That sum obeys
            T_gamma(j) = sum_r C(j, r) P_{qr} T_{gamma-1}(j - r),
        which replaces the nested composition loops by polynomial
        convolutions and yields every e at once.
        """
        if k < 1:
            raise ValueError("k must be at least 1")
        if k in self._core:
            return self._core[k]
        q = self.q
        P = [None] + [matching_poly(q * r) for r in range(1, k + 1)]
        # T[j] for the current gamma; start with gamma = 1
        T = [None] + [P[j][:] for j in range(1, k + 1)]
        total = [Fraction(0)] * (q * k // 2 + 1)
        for gamma in range(1, k + 1):
            if gamma > 1:
                nxt = [None] * (k + 1)
                for j in range(gamma, k + 1):
                    acc: list[int] = []
                    for r in range(1, j - gamma + 2):
                        _poly_add_into(acc, _poly_mul(P[r], T[j - r]), math.comb(j, r))
                    nxt[j] = acc
                T = nxt
            sign = 1 if gamma % 2 else -1
            for e, c in enumerate(T[k]):
                total[e] += Fraction(sign * c, gamma)
        out = []
        for e, v in enumerate(total):
            if v.denominator != 1:
                raise InexactDivisionError(f"M_core({q},{k},{e}) came out as {v}")
            out.append(int(v))
        self._core[k] = out
        return out

    def M_core(self, k: int, e: int) -> int:
        if e < 0:
            raise ValueError("e must be non-negative")
        if 2 * e > self.q * k:
            raise ValueError(f"e={e} exceeds qk/2 for q={self.q}, k={k}")
        return self.M_core_by_e(k)[e]

    def M_general(self, n: int, m1: int, m2: int) -> int:
        """Connected diagrams on n labelled points with m1 red edges and m2 fixed q-gons."""
        q = self.q
        if n < 1:
            raise ValueError("n must be positive")
        if m2 == 0:
            return 1 if (n, m1) in ((1, 0), (2, 1)) else 0
        e = m1 + q * m2 - n
        if m1 < 0 or m2 < 0 or 2 * m1 > n or q * m2 > n or e < 0 or 2 * e > q * m2:
            return 0
        return factorial_ratio(2 * n - 2 * m1 - q * m2, n - 2 * m1) * self.M_core(m2, e)

    def s_type(self, n: int, m1: int, m2: int) -> int:
        """Index-n subgroups whose coset action has m1 transpositions and m2 q-cycles."""
        q = self.q
        M = self.M_general(n, m1, m2)
        if M == 0:
            return 0
        return exact_div(n * M, q**m2 * math.factorial(m2) * math.factorial(n - q * m2))

    def M_tree(self, k: int) -> int:
        if k < 1:
            raise ValueError("k must be at least 1")
        if k == 1:
            return 1
        q = self.q
        out = q**k
        for j in range((q - 2) * k + 3, (q - 1) * k + 1):
            out *= j
        return out

    def M_total(self, k: int) -> int:
        """Index-qk subgroups with no free factor Cq."""
        return exact_div(sum(self.M_core_by_e(k)), self.q ** (k - 1) * math.factorial(k - 1))

    def M_count(self, n: int) -> int:
        """Same count as M_total, but summed type by type at any index n."""
        if n % self.q:
            return 0
        return sum(self.s_type(n, m1, n // self.q) for m1 in range(n // 2 + 1))

    def s_total(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be positive")
        if n <= 2:
            return 1
        q = self.q
        acc = Fraction(0)
        for k in range(1, n // q + 1):
            core = self.M_core_by_e(k)
            for e in range(min(n // 2, len(core) - 1) + 1):
                top = q * k - 2 * e
                if top < n - q * k:
                    continue
                acc += Fraction(n * math.comb(top, n - q * k) * core[e], q**k * math.factorial(k))
        if acc.denominator != 1:
            raise InexactDivisionError(f"s_{q}({n}) came out as {acc}")
        return int(acc)

    def N_count(self, n: int) -> int:
        """Index-n subgroups that are free products of copies of Cq."""
        q = self.q
        if n % 2 or (n - 2) % (2 * (q - 1)):
            return 0
        return self.s_type(n, n // 2, (n - 2) // (2 * (q - 1)))

    def f_count(self, n: int) -> int:
        """Free subgroups of index n."""
        q = self.q
        if n % (2 * q):
            return 0
        return self.s_type(n, n // 2, n // q)

    def table(self, kind: str, n_max: int) -> CountTable:
        fn = {"sq": self.s_total, "mq": self.M_count, "nq": self.N_count, "fq": self.f_count}[kind]
        return CountTable(self.q, [(n, fn(n)) for n in range(1, n_max + 1)])


def _ctx(q: int, ctx: CensusContext | None) -> CensusContext:
    if ctx is None:
        return CensusContext(q)
    if ctx.q != q:
        raise ValueError(f"context is for q={ctx.q}, not q={q}")
    return ctx


def M_core(q: int, k: int, e: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).M_core(k, e)


def M_core_by_e(q: int, k: int, ctx: CensusContext | None = None) -> list[int]:
    return _ctx(q, ctx).M_core_by_e(k)


def M_tree(q: int, k: int) -> int:
    return CensusContext(q).M_tree(k)


def M_general(q: int, n: int, m1: int, m2: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).M_general(n, m1, m2)


def s_type(q: int, n: int, m1: int, m2: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).s_type(n, m1, m2)


def M_total(q: int, k: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).M_total(k)


def M_count(q: int, n: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).M_count(n)


def s_total(q: int, n: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).s_total(n)


def N_count(q: int, n: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).N_count(n)


def f_count(q: int, n: int, ctx: CensusContext | None = None) -> int:
    return _ctx(q, ctx).f_count(n)
