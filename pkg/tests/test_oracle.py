from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from crossint.bounds import RegimeError
from crossint.oracle import (
    BudgetExceeded,
    classify_extremal,
    cross_intersecting,
    exact_M,
    f_profile,
    families_cross_intersecting,
    kernel_ids,
    kk_compress_check,
    members,
    pair_table,
    random_cross_intersecting_pair,
    star_ids,
    system_is_cross_intersecting,
)
from crossint.subsets import Params, ksubsets
from crossint.verify import check_fast_path, check_gold_path


def test_cross_examples():
    assert families_cross_intersecting((1, 4, 5), 3, (1, 5), 2, 5)
    assert not families_cross_intersecting((2, 3, 4), 3, (1, 5), 2, 5)
    assert families_cross_intersecting((2, 3, 4), 3, (1, 4), 2, 5)
    assert len(members((2, 3, 4), 3, 5)) == 7 and len(members((1, 4), 2, 5)) == 3
    for fast in (False, True):
        assert families_cross_intersecting((2, 3, 4), 3, (1, 4), 2, 5, fast=fast)


def test_exact_examples():
    res = exact_M(Params(5, (3, 3, 2)))
    assert res.value == 19
    assert {classify_extremal(t, res.params).label for t in res.tuples} == {"kernel"}
    assert exact_M(Params(4, (2, 2))).value == 6
    res = exact_M(Params(5, (3, 3, 2, 2)))
    assert res.value == 20 and len(res.tuples) >= 4
    assert ((2, 3, 5), (2, 3, 5), (1, 3), (1, 3)) in res.tuples
    assert exact_M(Params(6, (4, 3, 2))).value == 31


def test_exact_tuples_are_valid_systems():
    P = Params(5, (3, 3, 2, 2))
    res = exact_M(P)
    for ids in res.tuples:
        assert system_is_cross_intersecting(ids, P)
        assert sum(len(members(I, k, P.n)) for I, k in zip(ids, P.ks)) == res.value


def test_exact_is_schedule_independent():
    P = Params(6, (4, 3, 2, 2))
    a = exact_M(P)
    b = exact_M(P, workers=2)
    assert (a.value, a.rank_tuples) == (b.value, b.rank_tuples)


def test_budgets_are_reported():
    P = Params(7, (4, 4, 3, 3))
    with pytest.raises(BudgetExceeded):
        exact_M(P, max_space=1000)
    with pytest.raises(BudgetExceeded):
        exact_M(P, budget_nodes=5)


def test_classify_examples():
    P = Params(5, (3, 3, 2))
    assert classify_extremal(((1, 4, 5), (1, 4, 5), (1, 5)), P).label == "star"
    assert classify_extremal(((2, 4, 5), (2, 4, 5), (1, 2)), P).label == "kernel"
    Q = Params(5, (3, 3, 2, 2))
    assert classify_extremal(((2, 3, 5), (2, 3, 5), (1, 3), (1, 3)), Q).label == "exceptional"
    assert classify_extremal(((2, 3, 5), (2, 3, 5), (1, 3)), P).label == "other"
    assert star_ids(P) == ((1, 4, 5), (1, 4, 5), (1, 5))
    assert kernel_ids(P) == ((2, 4, 5), (2, 4, 5), (1, 2))


def test_profile_examples():
    assert f_profile(Params(5, (3, 3, 2))) == [16, 17, 18, 19]
    assert f_profile(Params(5, (3, 3, 2, 2))) == [20, 20, 20, 20]
    prof = f_profile(Params(6, (4, 3, 2)))
    assert prof[0] == 25 and prof[-1] == 31
    with pytest.raises(RegimeError):
        f_profile(Params(6, (3, 3, 2)))


def test_kk_examples():
    assert kk_compress_check([(1, 2)], [(1, 3), (1, 4), (1, 2)], 4)
    star = [F for F in ksubsets(6, 3) if 1 in F]
    assert kk_compress_check(star, star, 6)
    with pytest.raises(ValueError):
        kk_compress_check([(1, 2)], [(3, 4)], 4)
    with pytest.raises(ValueError):
        kk_compress_check([(1, 2), (1, 2, 3)], [(1, 3)], 4)


@settings(max_examples=200)
@given(st.integers(4, 7), st.integers(0, 2**32))
def test_kk_random(n, seed):
    fa, fb = random_cross_intersecting_pair(random.Random(seed), n)
    assert cross_intersecting(fa, fb)
    assert kk_compress_check(fa, fb, n)


def test_pair_table_matrices():
    T = pair_table(6, 3, 2)
    M = T.maximal_matrix()
    for ra in range(1, T.Na + 1):
        for rb in range(1, T.Nb + 1):
            assert bool(M[ra - 1, rb - 1]) == T.maximal(ra, rb)


def test_fast_path_exhaustive():
    assert check_fast_path(9).failures == 0


def test_gold_path_exhaustive():
    assert check_gold_path(6).failures == 0
