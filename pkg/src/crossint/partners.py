"""Partner, k-partner, parity and the ID-level maximality test.

Two sets strongly intersect at their last element ``q`` when they meet only
in ``q`` and together cover ``[q]``; each is then the partner of the other.
For L-initial families the partner of an ID describes the largest family
that can be cross-intersecting with it, and the heads of two IDs decide
whether a pair of L-initial families is maximal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .subsets import (
    KSet,
    count_L,
    interval,
    last_preceding,
    tail_decompose,
    unrank,
)


def partner(F: Sequence[int]) -> KSet:
    """``([q] - F) | {q}`` where ``q = max F``."""
    if not F:
        raise ValueError("the empty set has no partner")
    q = F[-1]
    members = set(F)
    return tuple(x for x in range(1, q) if x not in members) + (q,)


def k_partner(F: Sequence[int], k: int, n: int) -> Optional[KSet]:
    """Size-k adjustment of ``partner(F)``.

    Padded with a top run when ``k`` exceeds the partner's size, otherwise the
    lex-last k-set preceding the partner.  Returns None in the degenerate case
    where no k-set precedes the partner (then no non-empty k-uniform family is
    cross-intersecting with ``L(F, |F|)``).
    """
    if k < 1 or k > n - len(F):
        raise ValueError(f"k={k} must lie in [1, n - |F|] = [1, {n - len(F)}]")
    H = partner(F)
    h = len(H)
    if k == h:
        return H
    if k > h:
        return H + interval(n - k + h + 1, n)
    return _last_kset_before(H, k, n)


def _last_kset_before(H: Sequence[int], k: int, n: int) -> Optional[KSet]:
    # k < |H|.  Keep the longest prefix of H that still leaves room to branch
    # strictly below H, branch as high as possible, then fill from the top.
    for i in range(k - 1, -1, -1):
        lo = (H[i - 1] if i else 0) + 1
        hi = min(H[i] - 1, n - k + i + 1)
        if lo <= hi:
            return tuple(H[:i]) + (hi,) + interval(n - k + i + 2, n)
    return None


def k_parity(F: Sequence[int], k: int, n: int) -> Optional[KSet]:
    """The k-set with the same head as ``F`` and a top run adjusted to fit.

    None when the required run would be negative or would touch the head.
    """
    if not F:
        raise ValueError("F must be non-empty")
    hd, _ = tail_decompose(F, n)
    ell = k - len(hd)
    if ell < 0 or k < 1:
        return None
    if hd and hd[-1] >= n - ell:
        return None
    return hd + interval(n - ell + 1, n)


def corresponding_k_set(A: Sequence[int], k: int, n: int) -> KSet:
    """The k-parity of ``A`` if there is one, else the last k-set before ``A``."""
    if k > len(A):
        raise ValueError(f"k={k} exceeds |A|={len(A)}")
    P = k_parity(A, k, n)
    if P is not None:
        return P
    B = last_preceding(A, k, n)
    if B is None:
        raise ValueError(f"no {k}-set precedes {A}")
    return B


@dataclass(frozen=True)
class MaximalPairWitness:
    a_head: KSet
    b_head: KSet
    strongly_intersect_at: Optional[int]


def maximal_pair_witness(A: Sequence[int], B: Sequence[int], n: int) -> MaximalPairWitness:
    ha, _ = tail_decompose(A, n)
    hb, _ = tail_decompose(B, n)
    q = None
    if ha and hb and ha[-1] == hb[-1]:
        sa, sb = set(ha), set(hb)
        if sa & sb == {ha[-1]} and sa | sb == set(range(1, ha[-1] + 1)):
            q = ha[-1]
    return MaximalPairWitness(ha, hb, q)


def is_maximal_pair(A: Sequence[int], B: Sequence[int], n: int) -> bool:
    """Whether ``L(A, |A|)`` and ``L(B, |B|)`` are maximal cross-intersecting."""
    if not A or not B:
        raise ValueError("IDs must be non-empty")
    if len(A) + len(B) > n:
        raise ValueError(f"|A| + |B| = {len(A) + len(B)} exceeds n = {n}")
    return maximal_pair_witness(A, B, n).strongly_intersect_at is not None


def maximal_counterpart(A: Sequence[int], b: int, n: int) -> Optional[KSet]:
    """The b-set B making ``(A, B)`` a maximal pair, if it exists."""
    if len(A) + b > n:
        raise ValueError(f"|A| + b = {len(A) + b} exceeds n = {n}")
    hd, _ = tail_decompose(A, n)
    if not hd:
        return None
    Bh = partner(hd)
    if len(Bh) > b:
        return None
    B = Bh + interval(n - b + len(Bh) + 1, n)
    if tail_decompose(B, n)[0] != Bh:
        return None
    return B


def k_partner_count(F: Sequence[int], k: int, n: int) -> int:
    """``|L(K, k)|`` for the k-partner K, zero when K does not exist."""
    K = k_partner(F, k, n)
    return count_L(K, k, n) if K is not None else 0


def k_partner_via_rank(F: Sequence[int], k: int, n: int) -> Optional[KSet]:
    """Same set as :func:`k_partner`, computed as the last k-set of ``L(partner(F), k)``."""
    c = count_L(partner(F), k, n)
    return unrank(c, k, n) if c else None
