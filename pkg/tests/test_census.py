import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke import arith, census, oracle, verify
from hecke.census import CensusContext


def _connected_matchings(q, k, e):
    """Partial matchings with e edges on k labelled q-gons whose diagram is connected."""
    n = q * k
    total = 0
    for pairs in oracle.involution_pairings(n):
        if len(pairs) != e:
            continue
        parent = list(range(k))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        for i, j in pairs:
            parent[find(i // q)] = find(j // q)
        if len({find(i) for i in range(k)}) == 1:
            total += 1
    return total


def test_M_core_examples():
    assert census.M_core(3, 1, 0) == 1
    assert census.M_core(3, 1, 1) == 3
    assert census.M_core(3, 2, 1) == 9
    with pytest.raises(ValueError):
        census.M_core(3, 1, 2)


@pytest.mark.parametrize("q,k", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_M_core_by_connected_matchings(q, k):
    assert census.M_core_by_e(q, k) == [_connected_matchings(q, k, e) for e in range(q * k // 2 + 1)]


def test_M_core_vanishes_below_tree():
    for q in (3, 5):
        for k in range(2, 6):
            assert all(census.M_core(q, k, e) == 0 for e in range(k - 1))


def test_M_tree():
    assert census.M_tree(3, 1) == census.M_tree(7, 1) == 1
    assert census.M_tree(3, 2) == 9
    assert census.M_tree(3, 3) == 162
    assert census.M_tree(3, 3) == census.M_core(3, 3, 2)


def test_M_general_and_s_type():
    assert census.M_general(3, 3, 0, 1) == 1
    assert census.M_general(3, 2, 1, 0) == 1
    assert census.M_general(3, 6, 2, 1) == 0
    assert census.M_general(3, 5, 2, 1) == 6
    assert census.M_general(3, 6, 3, 1) == 6
    assert census.s_type(3, 2, 1, 0) == 1
    assert census.s_type(3, 3, 0, 1) == 1
    assert census.s_type(3, 6, 3, 2) == 5


def test_M_general_against_oracle_raw_counts():
    ctx = CensusContext(3)
    for n in range(1, 8):
        raw = oracle.raw_pair_counts(3, n)
        for rep, c in raw.items():
            assert ctx.s_type(n, rep.m1, rep.m2) * math.factorial(n - 1) == c


def test_totals():
    assert census.M_total(3, 1) == 4
    assert census.M_total(5, 1) == 26
    assert census.M_total(3, 2) % 2 == 0
    assert census.s_total(3, 1) == 1
    assert census.s_total(5, 3) == 0
    assert census.s_total(3, 3) == 4
    assert census.N_count(3, 2) == 1
    assert census.f_count(3, 6) == 5
    assert census.N_count(3, 3) == 0


def test_table_kinds():
    t = CensusContext(3).table("sq", 10)
    assert t.rows == [(n, c) for n, c in enumerate([1, 1, 4, 8, 5, 22, 42, 40, 120, 265], 1)]
    with pytest.raises(KeyError):
        CensusContext(3).table("xx", 3)


def test_context_mismatch():
    with pytest.raises(ValueError):
        census.s_total(5, 4, ctx=CensusContext(3))


def test_stothers_formulas():
    assert verify.stothers_failures(6) == []


def test_free_product_identity():
    # holds at the free type m1 = n/2, m2 = n/q
    assert verify.free_identity_failures(18) == []


def test_two_part_bound():
    assert verify.v2_bound_failures(5) == []


def test_f3_parity_at_multiples_of_six():
    ctx = CensusContext(3)
    for lam in range(1, 7):
        odd = ctx.f_count(6 * lam) % 2 == 1
        assert odd == ((lam + 1) & lam == 0)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 6))
def test_M_core_sum_is_matching_count(q, k):
    # summing over e and over all diagrams (connected or not) gives I_{qk}
    by_e = census.M_core_by_e(q, k)
    assert all(x >= 0 for x in by_e)
    assert sum(by_e) <= arith.involutions(q * k)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(1, 24))
def test_s_total_is_sum_of_types(q, n):
    ctx = CensusContext(q)
    parts = sum(ctx.s_type(n, m1, m2) for m2 in range(n // q + 1) for m1 in range(n // 2 + 1))
    assert parts == ctx.s_total(n)


def test_exponential_formula_for_all_pairs():
    # every pair (x, y) with x^2 = y^q = 1 splits into transitive blocks
    q = 3
    ctx = CensusContext(q)
    for n in range(1, 9):
        lhs = Fraction(arith.involutions(n) * _y_count(q, n), math.factorial(n))
        assert lhs == _exp_coeff(ctx, n)


def _y_count(q, n):
    return sum(
        math.factorial(n) // (q**j * math.factorial(j) * math.factorial(n - q * j)) for j in range(n // q + 1)
    )


def _exp_coeff(ctx, n):
    g = [Fraction(1)]
    for m in range(1, n + 1):
        g.append(sum(Fraction(ctx.s_total(j)) * g[m - j] for j in range(1, m + 1)) / m)
    return g[n]
