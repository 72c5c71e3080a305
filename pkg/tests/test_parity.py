import math

import pytest
from hypothesis import given, settings, strategies as st

from hecke import arith, parity, verify
from hecke.census import CensusContext


def test_cond_eta_examples():
    assert parity.cond_eta(3, 0)
    assert parity.cond_eta(3, 3)
    assert not parity.cond_eta(3, 2)


def test_sq_and_nq_examples():
    assert parity.sq_parity(3, 5).odd
    assert parity.sq_parity(3, 2).odd
    assert not parity.sq_parity(3, 6).odd
    assert parity.Nq_parity(3, 2).odd
    assert parity.Nq_parity(3, 10).odd
    assert not parity.Nq_parity(3, 4).odd
    assert not parity.Mq_parity(3, 3).odd
    assert not parity.Mq_parity(5, 5).odd
    assert not parity.Mq_parity(3, 4)


def test_bad_q():
    with pytest.raises(ValueError):
        parity.sq_parity(9, 3)
    with pytest.raises(ValueError):
        parity.sq_parity_fermat(7, 3)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_parity_against_census(q):
    ctx = CensusContext(q)
    for n in range(1, 31):
        assert parity.sq_parity(q, n).odd == (ctx.s_total(n) % 2 == 1)
        assert parity.Nq_parity(q, n).odd == (ctx.N_count(n) % 2 == 1)


def test_fermat_forms():
    for q in (3, 5, 17):
        for n in range(1, 3000):
            assert parity.sq_parity(q, n).odd == parity.sq_parity_fermat(q, n).odd
            assert parity.Nq_parity(q, n).odd == parity.Nq_parity_fermat(q, n).odd


def test_binom_shift_examples():
    assert parity.binom_shift_parity(1, 3)
    assert not parity.binom_shift_parity(1, 4)
    assert parity.binom_shift_parity(2, 5)


@settings(max_examples=200)
@given(st.integers(1, 5), st.integers(1, 2000))
def test_binom_shift_characterization(lam, k):
    assert parity.binom_shift_parity(lam, k) == bool(arith.binom_mod2(2**lam * k + 1, k - 1))


def test_tree_case_parity():
    assert parity.tree_case_parity(3, 1)
    assert parity.tree_case_parity(3, 3)
    assert not parity.tree_case_parity(3, 4)
    for q in (3, 5):
        ctx = CensusContext(q)
        for k in range(1, 9):
            val = arith.exact_div(ctx.M_tree(k), math.factorial(k - 1))
            assert parity.tree_case_parity(q, k) == (val % 2 == 1)


def test_lift_examples():
    assert parity.lift_component_parity(3, 1, 2, True).odd
    assert parity.lift_component_parity(3, 5, 10, True).odd
    assert parity.lift_component_parity(3, 1, 13, False).odd
    assert parity.lift_parity(3, 625, 29, False).odd
    assert not parity.lift_parity(3, 625, 10, True).odd
    assert parity.lift_parity(3, 625, 2, True).odd
    with pytest.raises(ValueError):
        parity.lift_parity(3, 4, 8, True)


def test_lift_with_m_one_is_plain_parity():
    for q in (3, 5):
        for n in range(1, 200):
            assert parity.lift_parity(q, 1, n, True).odd == parity.Nq_parity(q, n).odd
            assert parity.lift_parity(q, 1, n, False).odd == parity.sq_parity(q, n).odd


def test_cond_Cq():
    assert parity.cond_Cq(3, 7)
    assert parity.cond_Cq(3, 17)
    assert not parity.cond_Cq(3, 5)
    with pytest.raises(ValueError):
        parity.cond_Cq(3, 9)
    with pytest.raises(ValueError):
        parity.cond_Cq(7, 11)


def test_residue_lists_for_q3_and_q5():
    assert [b for b in verify.residue_failures(10**4) if b[0] != 17] == []


def test_q17_residue_125_has_counterexamples():
    # quadratic reciprocity gives 101 rather than 125 in the q = 17 list
    bad = verify.residue_failures(10**4)
    assert {r for _, _, r in bad} == {125}
    assert [p for _, p, _ in bad] == [3253, 3797, 7877]
    for p in (3253, 3797, 7877):
        assert parity.cond_Cq(17, p) is False
    hits = [p for p in range(3, 10**4) if p % 136 == 101 and arith.is_prime(p)]
    assert hits and all(parity.cond_Cq(17, p) for p in hits)


def test_fermat_bed_examples():
    assert parity.fermat_bed(3, 1, 5, False).odd
    assert not parity.fermat_bed(3, 1, 4, False).odd
    assert parity.fermat_bed(3, 625, 12250, True).odd == parity.lift_parity(3, 625, 12250, True).odd
    assert parity.fermat_threshold(3, 625) == 1562500
    assert parity.fermat_threshold(5, 3) == 12


def test_fermat_bed_beyond_threshold():
    for q in (3, 5):
        for m in range(1, 12):
            for h_even in (False, True):
                if h_even and m % 2 == 0:
                    continue
                start = parity.fermat_threshold(q, m)
                for n in range(start, start + 1500):
                    assert parity.fermat_bed(q, m, n, h_even).odd == parity.lift_parity(q, m, n, h_even).odd


def test_components_are_recorded():
    v = parity.lift_parity(3, 625, 13, False)
    assert v.odd and v.components == ((1, 3),)
