from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from crossint.oracle import maximality_bruteforce
from crossint.partners import (
    corresponding_k_set,
    is_maximal_pair,
    k_parity,
    k_partner,
    k_partner_count,
    k_partner_via_rank,
    maximal_counterpart,
    maximal_pair_witness,
    partner,
)
from crossint.verify import suite_partners, check_k_partner_scan


def test_partner_examples():
    assert partner((2, 4, 7)) == (1, 3, 5, 6, 7)
    assert partner((1,)) == (1,)
    assert partner((1, 3, 5, 6, 7)) == (2, 4, 7)
    with pytest.raises(ValueError):
        partner(())


def test_k_partner_examples():
    assert k_partner((2, 4, 7), 4, 9) == (1, 3, 4, 9)
    assert k_partner((2, 4, 7), 5, 9) == (1, 3, 5, 6, 7)
    assert k_partner((2, 4, 7), 6, 9) == (1, 3, 5, 6, 7, 9)
    with pytest.raises(ValueError):
        k_partner((2, 4, 7), 7, 9)
    with pytest.raises(ValueError):
        k_partner((2, 4, 7), 0, 9)


def test_k_partner_may_be_empty():
    # partner({4}) = {1,2,3,4}; no 2-set precedes it, so nothing is compatible
    assert k_partner((4,), 2, 5) is None
    assert k_partner_count((4,), 2, 5) == 0
    assert k_partner_via_rank((4,), 2, 5) is None


def test_k_parity_examples():
    assert k_parity((2, 4, 9), 2, 9) == (2, 4)
    assert k_parity((2, 4, 7), 2, 9) is None
    assert k_parity((2, 4), 3, 9) == (2, 4, 9)
    # the run may not touch the head
    assert k_parity((2, 8), 3, 9) is None


def test_corresponding_set_examples():
    assert corresponding_k_set((2, 4, 9), 2, 9) == (2, 4)
    assert corresponding_k_set((2, 4, 7), 2, 9) == (2, 3)
    assert corresponding_k_set((2, 4, 7), 3, 9) == (2, 4, 7)
    with pytest.raises(ValueError):
        corresponding_k_set((1, 2, 3), 2, 9)
    with pytest.raises(ValueError):
        corresponding_k_set((2, 4), 3, 9)


def test_maximal_pair_examples():
    assert is_maximal_pair((2, 4, 7), (1, 3, 5, 6, 7), 9)
    assert not is_maximal_pair((2, 4, 7), (1, 3, 4, 9), 9)
    assert is_maximal_pair((2, 4, 9), (1, 3, 4, 9), 9)
    w = maximal_pair_witness((2, 4, 9), (1, 3, 4, 9), 9)
    assert w.a_head == (2, 4) and w.b_head == (1, 3, 4) and w.strongly_intersect_at == 4
    with pytest.raises(ValueError):
        is_maximal_pair((1, 2, 3, 4, 5), (1, 2, 3, 4, 5), 9)


def test_maximal_counterpart_examples():
    assert maximal_counterpart((1, 4, 5), 2, 5) == (1, 5)
    assert maximal_counterpart((2, 4, 7), 5, 9) == (1, 3, 5, 6, 7)
    assert maximal_counterpart((2, 4, 7), 4, 9) is None


def test_bruteforce_maximality_examples():
    assert maximality_bruteforce((2, 4, 7), 3, (1, 3, 5, 6, 7), 5, 9)
    assert not maximality_bruteforce((2, 4, 7), 3, (1, 3, 4, 9), 4, 9)
    assert maximality_bruteforce((1, 4, 5), 3, (1, 5), 2, 5)


@st.composite
def id_pairs(draw):
    n = draw(st.integers(2, 9))
    a = draw(st.integers(1, n - 1))
    b = draw(st.integers(1, n - a))
    A = tuple(sorted(draw(st.lists(st.integers(1, n), min_size=a, max_size=a, unique=True))))
    B = tuple(sorted(draw(st.lists(st.integers(1, n), min_size=b, max_size=b, unique=True))))
    return n, A, B


@given(id_pairs())
def test_head_rule_agrees_with_enumeration(case):
    n, A, B = case
    assert is_maximal_pair(A, B, n) == maximality_bruteforce(A, len(A), B, len(B), n)


@given(id_pairs())
def test_rank_route_agrees(case):
    n, A, B = case
    k = len(B)
    assert k_partner(A, k, n) == k_partner_via_rank(A, k, n)


def test_k_partner_matches_scan():
    assert check_k_partner_scan(9).failures == 0


@pytest.mark.parametrize("check", suite_partners(9), ids=lambda c: c.name)
def test_partner_suite(check):
    assert check.checks > 0
    assert check.failures == 0, check.samples
