"""Brute-force ground truth for subgroup counts of the Hecke group C2 * Cq.

Index-n subgroups correspond to transitive actions of <x, y | x^2 = y^q = 1>
on {0, ..., n-1}, counted up to relabelling of the points other than 0;
every such class has exactly (n-1)! members. We fix y as one canonical
permutation per cycle type (m2 disjoint q-cycles on the first q*m2 points),
run over every involution x, keep the pairs generating a transitive group,
and weight each hit by the size of y's conjugacy class.

The isomorphism type of the stabiliser is read off the fixed points:
x has lambda fixed points, y has mu, and the free rank follows from the
Euler characteristic.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .arith import exact_div, involutions

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the allowed search size."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"estimated search size {estimate} exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget


class SubgroupType(NamedTuple):
    """Kurosh type: free factors C2, free factors Cq, and free rank."""

    lam: int
    mu: int
    nu: int

    def index_relation_holds(self, q: int, n: int) -> bool:
        return q * self.lam + 2 * (q - 1) * self.mu + 2 * q * (self.nu - 1) == (q - 2) * n


class RepType(NamedTuple):
    """Cycle data of the coset action: m1 transpositions of x, m2 q-cycles of y."""

    m1: int
    m2: int
    n: int

    def subgroup_type(self, q: int) -> SubgroupType:
        n, m1, m2 = self.n, self.m1, self.m2
        return SubgroupType(n - 2 * m1, n - q * m2, m1 + (q - 1) * m2 - n + 1)


@dataclass
class TypeCensus:
    q: int
    index: int
    counts: dict[SubgroupType, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def filtered(self, pred) -> int:
        return sum(c for t, c in self.counts.items() if pred(t))


def budget_from_env() -> int:
    raw = os.environ.get("HECKE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def estimated_search_size(q: int, n: int) -> int:
    return (n // q + 1) * involutions(n)


def canonical_y(q: int, n: int, m2: int) -> list[int]:
    y = list(range(n))
    for c in range(m2):
        base = q * c
        for j in range(q):
            y[base + j] = base + (j + 1) % q
    return y


def involution_pairings(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every involution of {0..n-1}, as its list of 2-cycles."""
    free = list(range(n))
    pairs: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[list[tuple[int, int]]]:
        while i < n and free[i] < 0:
            i += 1
        if i == n:
            yield pairs
            return
        free[i] = -1
        yield from rec(i + 1)  # i is a fixed point
        for j in range(i + 1, n):
            if free[j] >= 0:
                free[j] = -1
                pairs.append((i, j))
                yield from rec(i + 1)
                pairs.pop()
                free[j] = j
        free[i] = i

    yield from rec(0)


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _transitive(base_parent: list[int], components: int, pairs) -> bool:
    parent = base_parent[:]
    for i, j in pairs:
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
            components -= 1
            if components == 1:
                return True
    return components == 1


def transitive_tally(q: int, n: int, m2: int) -> Counter:
    """Number of involutions x making <x, canonical y> transitive, by m1."""
    y = canonical_y(q, n, m2)
    parent = list(range(n))
    components = n
    for i in range(n):
        ri, rj = _find(parent, i), _find(parent, y[i])
        if ri != rj:
            parent[ri] = rj
            components -= 1
    tally: Counter = Counter()
    for pairs in involution_pairings(n):
        if components == 1 or _transitive(parent, components, pairs):
            tally[len(pairs)] += 1
    return tally


def y_class_size(q: int, n: int, m2: int) -> int:
    return exact_div(math.factorial(n), q**m2 * math.factorial(m2) * math.factorial(n - q * m2))


def _class_job(args: tuple[int, int, int]) -> tuple[int, Counter]:
    q, n, m2 = args
    return m2, transitive_tally(q, n, m2)


def raw_pair_counts(q: int, n: int, budget: int | None = None, workers: int = 1) -> dict[RepType, int]:
    """Number of transitive pairs (x, y) on n points, keyed by representation type."""
    if n < 1:
        raise ValueError("index must be positive")
    budget = budget_from_env() if budget is None else budget
    estimate = estimated_search_size(q, n)
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)
    jobs = [(q, n, m2) for m2 in range(n // q + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_class_job, jobs))
    else:
        results = [_class_job(j) for j in jobs]
    raw: dict[RepType, int] = {}
    for m2, tally in sorted(results):
        weight = y_class_size(q, n, m2)
        for m1, c in tally.items():
            raw[RepType(m1, m2, n)] = c * weight
    return raw


def enumerate_types(q: int, n: int, budget: int | None = None, workers: int = 1) -> TypeCensus:
    raw = raw_pair_counts(q, n, budget, workers)
    orbit = math.factorial(n - 1)
    census = TypeCensus(q, n)
    for rep, c in sorted(raw.items()):
        t = rep.subgroup_type(q)
        assert t.index_relation_holds(q, n), (rep, t)
        census.counts[t] = census.counts.get(t, 0) + exact_div(c, orbit)
    return census


def oracle_s(q: int, n: int, budget: int | None = None) -> int:
    return enumerate_types(q, n, budget).total()


def oracle_M(q: int, n: int, budget: int | None = None) -> int:
    return enumerate_types(q, n, budget).filtered(lambda t: t.mu == 0)


def oracle_N(q: int, n: int, budget: int | None = None) -> int:
    return enumerate_types(q, n, budget).filtered(lambda t: t.lam == 0 and t.nu == 0)


def oracle_f(q: int, n: int, budget: int | None = None) -> int:
    return enumerate_types(q, n, budget).filtered(lambda t: t.lam == 0 and t.mu == 0)


def oracle_sH(q: int, n: int, H, budget: int | None = None) -> int:
    census = enumerate_types(q, n, budget)
    return sum(c * H.a**t.lam * H.b**t.mu * H.h**t.nu for t, c in census.counts.items())


def brute_force_census(q: int, n: int) -> TypeCensus:
    """Slow path over all pairs (x, y) with x^2 = y^q = 1; only for tiny n."""
    if math.factorial(n) > 10**4:
        raise BudgetExceeded(math.factorial(n) ** 2, 10**8)
    perms = list(itertools.permutations(range(n)))

    def power(p, k):
        out = tuple(range(n))
        for _ in range(k):
            out = tuple(p[i] for i in out)
        return out

    ident = tuple(range(n))
    xs = [p for p in perms if power(p, 2) == ident]
    ys = [p for p in perms if power(p, q) == ident]
    raw: Counter = Counter()
    for x in xs:
        for y in ys:
            parent = list(range(n))
            comps = n
            for p in (x, y):
                for i in range(n):
                    ri, rj = _find(parent, i), _find(parent, p[i])
                    if ri != rj:
                        parent[ri] = rj
                        comps -= 1
            if comps == 1:
                m1 = sum(1 for i in range(n) if x[i] > i)
                m2 = sum(1 for i in range(n) if y[i] != i) // q
                raw[RepType(m1, m2, n)] += 1
    census = TypeCensus(q, n)
    orbit = math.factorial(n - 1)
    for rep, c in raw.items():
        census.counts[rep.subgroup_type(q)] = exact_div(c, orbit)
    return census
