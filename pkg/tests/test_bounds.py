from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crossint.bounds import (
    RegimeError,
    alpha_closed_form,
    beta_closed_form,
    equal_size_bound,
    f_i_of_s,
    f_value,
    family_sizes,
    increments,
    lambda_values,
    mixed_bound,
    nonmixed_bound,
    system_ids,
    two_family_bound,
    weighted_bound,
)
from crossint.subsets import Params, binom
from crossint.verify import (
    check_dominance,
    check_endpoint_maximality,
    check_increments,
    check_weighted_unit,
    mixed_params,
    regime_params,
)

P332 = Params(5, (3, 3, 2))


def test_lambda_examples():
    assert lambda_values(P332) == (16, 19)
    assert lambda_values(Params(5, (3, 3, 2, 2))) == (20, 20)
    assert lambda_values(Params(6, (4, 3, 2))) == (25, 31)
    assert mixed_bound(P332) == 19
    assert mixed_bound(Params(5, (3, 3, 2, 2))) == 20
    assert mixed_bound(Params(6, (4, 3, 2))) == 31


def test_mixed_formulas_reject_other_ranges():
    for P in (Params(6, (3, 3, 2)), Params(4, (3, 3, 2)), Params(5, (3, 3))):
        with pytest.raises(RegimeError):
            lambda_values(P)


def test_nonmixed_examples():
    assert nonmixed_bound(Params(6, (3, 3, 2))) == 25
    assert nonmixed_bound(Params(4, (2, 2))) == 6
    assert nonmixed_bound(Params(6, (3, 3))) == 20
    with pytest.raises(RegimeError):
        nonmixed_bound(P332)


def test_two_family_examples():
    assert two_family_bound(4, 2, 2) == 6
    assert two_family_bound(5, 3, 2) == 10 == binom(5, 2)
    assert two_family_bound(6, 3, 2) == 17
    with pytest.raises(RegimeError):
        two_family_bound(4, 3, 2)
    with pytest.raises(RegimeError):
        two_family_bound(6, 2, 3)


def test_equal_size_bound():
    assert equal_size_bound(4, 2, 2) == 6
    assert equal_size_bound(6, 3, 2) == 20
    with pytest.raises(RegimeError):
        equal_size_bound(5, 3, 2)


def test_weighted_examples():
    assert weighted_bound(Params(6, (3, 3, 2)), [1, 1, 1], 1) == 25
    assert weighted_bound(Params(4, (2, 2)), [1, 1], 1) == 6
    w = weighted_bound(Params(5, (3, 2)), [2, 1], 1)
    assert w == 19 and isinstance(w, Fraction)
    half = Fraction(1, 2)
    kernel = half * (binom(6, 3) - binom(4, 3)) + binom(4, 1) + binom(4, 0)
    star = half * binom(5, 2) + binom(5, 2) + binom(5, 1)
    assert weighted_bound(Params(6, (3, 3, 2)), [half, 1, 1], 1) == max(kernel, star) == 20
    with pytest.raises(RegimeError):
        weighted_bound(P332, [1, 1, 1], 1)
    with pytest.raises(ValueError):
        weighted_bound(Params(6, (3, 3, 2)), [1, 1], 1)
    with pytest.raises(ValueError):
        weighted_bound(Params(6, (3, 3, 2)), [1, 0, 1], 1)


def test_f_i_of_s_examples():
    P = Params(6, (3, 3, 2))
    assert f_i_of_s(P, 1, 2) == 21
    assert f_i_of_s(P, 1, 1) == 25
    with pytest.raises(ValueError):
        f_i_of_s(P, 1, 3)
    with pytest.raises(RegimeError):
        f_i_of_s(P332, 1, 1)


def test_f_value_examples():
    assert f_value((1, 4, 5), P332) == 16
    assert family_sizes((1, 4, 5), P332) == (6, 6, 4)
    assert f_value((2, 4, 5), P332) == 19
    assert family_sizes((2, 4, 5), P332) == (9, 9, 1)
    assert f_value((2, 3, 4), P332) == 17
    assert system_ids((2, 3, 4), P332) == ((2, 3, 4), (2, 3, 4), (1, 4))
    with pytest.raises(ValueError):
        f_value((1, 2, 3), P332)
    with pytest.raises(ValueError):
        f_value((3, 4, 5), P332)


def test_increment_examples():
    rep = increments((1, 4, 5), (2, 3, 4), P332)
    assert rep.alpha_per_index == (1, 1) and rep.gamma == 2 and rep.delta == 1
    assert increments((1, 4, 5), (2, 4, 5), P332).net == 3
    same = increments((2, 3, 5), (2, 3, 5), P332)
    assert same.gamma == same.delta == 0 and same.alpha_per_index == (0, 0)
    with pytest.raises(ValueError):
        increments((2, 4, 5), (1, 4, 5), P332)


def test_alpha_closed_form_examples():
    assert alpha_closed_form((2, 4, 5), 1, P332) == 1
    assert alpha_closed_form((2, 4, 5), 2, P332) == 1
    P = Params(6, (4, 3, 2))
    # l(R1p) = 0 with k_2 < k_1 gives no gain for family 2
    assert alpha_closed_form((2, 3, 4, 5), 2, P) == 0
    with pytest.raises(ValueError):
        alpha_closed_form((1, 4, 5), 1, P332)
    with pytest.raises(ValueError):
        alpha_closed_form((2, 4, 5), 3, P332)


def test_beta_closed_form_examples():
    assert beta_closed_form(4, P332) == 1
    # k_3 - (q - k_1) < 0 empties the binomial
    assert beta_closed_form(7, Params(7, (4, 4, 2))) == 0
    # n = k1 + k_t for every non-free family: the loss is constant t - s
    assert {beta_closed_form(q, P332) for q in (4, 5)} == {1}
    P = Params(5, (3, 3, 2, 2))
    assert {beta_closed_form(q, P) for q in (4, 5)} == {2}


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n), min_size=2, max_size=5))))
def test_unit_weights_reduce_to_nonmixed(case):
    n, ks = case
    P = Params(n, tuple(sorted(ks, reverse=True)))
    if not P.is_nonmixed:
        return
    assert weighted_bound(P, [1] * P.t, 1) == nonmixed_bound(P)


def test_unit_weight_sweep():
    assert check_weighted_unit(9).failures == 0


def test_dominance_sweep():
    r = check_dominance(12)
    assert r.checks > 1000 and r.failures == 0


def test_endpoint_sweep():
    assert check_endpoint_maximality(mixed_params(9, kt_min=1)).failures == 0


@pytest.mark.parametrize("check", check_increments(regime_params(8)), ids=lambda c: c.name)
def test_increment_identities(check):
    assert check.checks > 0
    assert check.failures == 0, check.samples
