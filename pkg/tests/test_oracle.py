import pytest

from hecke import oracle
from hecke.oracle import SubgroupType
from hecke.wreath import HParams


def test_small_type_censuses():
    assert oracle.enumerate_types(3, 1).counts == {SubgroupType(1, 1, 0): 1}
    assert oracle.enumerate_types(3, 2).counts == {SubgroupType(0, 2, 0): 1}
    assert oracle.enumerate_types(3, 3).total() == 4


def test_filters():
    assert oracle.oracle_M(3, 3) == 4
    assert oracle.oracle_N(3, 2) == 1
    assert oracle.oracle_M(3, 4) == 0


def test_weighted_counts():
    assert oracle.oracle_sH(3, 1, HParams(1, 1, 1)) == 1
    assert oracle.oracle_sH(3, 1, HParams(6, 4, 3)) == 12
    assert oracle.oracle_sH(3, 2, HParams(6, 4, 3)) == 9


def test_first_counts_q3():
    assert [oracle.oracle_s(3, n) for n in range(1, 9)] == [1, 1, 4, 8, 5, 22, 42, 40]


@pytest.mark.parametrize("q,n", [(3, 3), (3, 4), (3, 5), (3, 6), (5, 5), (5, 6)])
def test_canonical_y_matches_full_pair_search(q, n):
    assert oracle.brute_force_census(q, n).counts == oracle.enumerate_types(q, n).counts


def test_every_type_satisfies_index_relation():
    for q in (3, 5, 7):
        for n in range(1, 9):
            for t in oracle.enumerate_types(q, n).counts:
                assert t.index_relation_holds(q, n)


def test_budget():
    with pytest.raises(oracle.BudgetExceeded) as err:
        oracle.enumerate_types(3, 8, budget=100)
    assert err.value.estimate > 100
    assert "exceeds budget" in str(err.value)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("HECKE_BUDGET", "50")
    with pytest.raises(oracle.BudgetExceeded):
        oracle.oracle_s(3, 7)


def test_workers_give_same_result():
    assert oracle.enumerate_types(3, 7, workers=2).counts == oracle.enumerate_types(3, 7).counts


def test_involution_pairings_count():
    assert sum(1 for _ in oracle.involution_pairings(6)) == 76
