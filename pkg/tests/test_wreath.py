from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from hecke import census, gf2, oracle, verify, wreath
from hecke.wreath import HParams, WreathContext

SAMPLE = [HParams(1, 1, 1), HParams(2, 2, 1), HParams(6, 4, 3)]


def _wreath_power_count(r, n, k):
    """Elements g of C_r wr S_n with g^k = 1, by brute force."""

    def mul(x, y):
        (s, f), (t, g) = x, y
        return tuple(s[t[i]] for i in range(n)), tuple((f[t[i]] + g[i]) % r for i in range(n))

    ident = (tuple(range(n)), (0,) * n)
    count = 0
    for perm in permutations(range(n)):
        for labels in product(range(r), repeat=n):
            x = (perm, labels)
            p = ident
            for _ in range(k):
                p = mul(p, x)
            count += p == ident
    return count


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_alpha_beta_against_wreath_brute_force(r):
    q = 3
    H = HParams.cyclic(r, q)
    ctx = WreathContext(q, H)
    for n in range(0, 4):
        assert ctx.alpha(n) == _wreath_power_count(r, n, 2)
        assert ctx.beta(n) == _wreath_power_count(r, n, q)


def test_cyclic_constructor():
    assert HParams.cyclic(6, 3) == HParams(6, 2, 3)
    assert HParams.cyclic(5, 3) == HParams(5, 1, 1)
    with pytest.raises(ValueError):
        HParams(0, 1, 1)
    with pytest.raises(ValueError):
        HParams(2, 1, 1).check_realizable()
    HParams(6, 4, 3).check_realizable()


def test_alpha_h_coeff_examples():
    H = HParams(6, 4, 3)
    assert wreath.alpha(0, H) == 1
    assert wreath.alpha(1, H) == 4
    assert wreath.alpha(2, H) == 16 + 6
    assert wreath.h_coeff(0, 3, HParams(1, 1, 1)) == 1
    assert wreath.h_coeff(1, 3, HParams(1, 1, 1)) == 1
    assert wreath.h_coeff(2, 3, HParams(2, 2, 1)) == Fraction(3, 4)


def test_s_general_examples():
    assert wreath.s_general(3, HParams(1, 1, 1), 3) == 4
    assert wreath.s_general(3, HParams(2, 2, 1), 1) == 2
    assert wreath.s_general(3, HParams(6, 4, 3), 2) == 9


@pytest.mark.parametrize("H", SAMPLE + [HParams(3, 1, 3), HParams(4, 2, 1)])
def test_s_general_against_oracle(H):
    ctx = WreathContext(3, H)
    for n in range(1, 8):
        assert ctx.s_general(n) == oracle.oracle_sH(3, n, H)


def test_s3_recurrence_examples():
    h, a, b = 6, 4, 3
    H = HParams(h, a, b)
    assert wreath.s3H_rec(H, 3) == a * (a * a + 3 * h)
    assert wreath.s3H_rec(HParams(1, 1, 1), 6) == 22
    assert wreath.s3H_rec(HParams(2, 2, 1), 10) == wreath.s_general(3, HParams(2, 2, 1), 10)


def test_initial_values_match_general_route():
    for H in SAMPLE:
        init = wreath.s3H_initial(H)
        assert init == [wreath.s_general(3, H, n) for n in range(1, 10)]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 8))
def test_s3_recurrence_on_arbitrary_triples(h, a, b):
    H = HParams(h, a, b)
    assert wreath.s3H_rec_list(H, 16) == [wreath.s_general(3, H, n) for n in range(1, 17)]


def test_trivial_H_recovers_subgroup_counts():
    for q in (3, 5):
        assert [wreath.s_general(q, HParams.trivial(), n) for n in range(1, 21)] == [
            census.s_total(q, n) for n in range(1, 21)
        ]


def test_coefficient_examples():
    H = HParams(6, 4, 3)
    assert wreath.coeff_c(3, 0, H) == H.a * H.h
    assert wreath.coeff_d(3, 0, H) == H.a**2 + H.h
    assert wreath.coeff_c(2, 1, H) == 1
    with pytest.raises(ValueError):
        wreath.coeff_c(3, 5, H)


def test_coefficients_mod2():
    assert verify.coeff_mod2_failures(20) == []


def test_F_series_examples():
    H = HParams(6, 4, 3)
    assert wreath.F_series(0, 3, HParams(1, 1, 1), 0).coeffs == (1,)
    assert wreath.F_series(1, 5, H, 4)[1] == H.a
    ctx = WreathContext(3, H)
    F0, F1, F2 = (wreath.F_series(k, 3, H, 12, ctx) for k in range(3))
    rhs = (F0.shift(2) * H.h + F0.derivative().shift(3) * H.h + F1.shift(1) * H.a).truncate(10)
    assert F2.agrees(rhs, 10)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("H", SAMPLE)
def test_reduction_and_relations(q, H):
    ctx = WreathContext(q, H)
    for k in range(q + 1):
        assert verify.reduction_holds(q, H, k, 14, ctx)
    assert verify.relation_failures(q, H, 14, ctx) == []


def test_logderiv_low_orders():
    H = HParams(2, 2, 1)
    S = wreath.S_series(3, H, 14)
    Hs = wreath.H_series(3, H, 15)
    assert wreath.logderiv(Hs, 0, 2).coeffs == (1,) + (0,) * 15
    assert wreath.logderiv(Hs, 1, 2).agrees(S)
    two = wreath.logderiv(Hs, 2, 2)
    assert two.agrees(S.derivative().scale(2) + S * S)
    with pytest.raises(ValueError):
        wreath.logderiv(S.shift(1), 1, 2)


def test_faa_di_bruno_matches_logderiv():
    for H in SAMPLE:
        S = wreath.S_series(5, H, 12)
        Hs = wreath.H_series(5, H, 13)
        for nu in range(6):
            assert wreath.logderiv(Hs, nu, H.h).agrees(wreath.faa_di_bruno(S, nu, H.h))


def test_mod2_functional_equation():
    assert verify.mod2_equation_failures(30) == []
    for q in (3, 5, 7):
        S = wreath.S_series(q, HParams(2, 2, 1), 30).mod2()
        assert S == wreath.shat_mod2_series(q, 30)


def test_shat_examples():
    assert wreath.shat_mod2_coeff(3, 2) == 1
    assert wreath.shat_mod2_coeff(3, 4) == 0
    assert wreath.shat_mod2_coeff(3, 10) == 1


def test_mod2_collapse_of_higher_derivatives():
    H = HParams(6, 4, 3)
    S = wreath.S_series(3, H, 20)
    Hs = wreath.H_series(3, H, 21)
    for nu in range(1, 6):
        lg = wreath.logderiv(Hs, nu, H.h)
        assert lg.mod2() == gf2.poly_trunc(gf2.poly_pow(S.mod2(), nu), lg.order)


def test_fuss_catalan():
    assert [wreath.fuss_catalan(3, e) for e in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [wreath.fuss_catalan(5, e) for e in range(5)] == [1, 1, 4, 22, 140]
