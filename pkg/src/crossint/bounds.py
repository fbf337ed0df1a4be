"""Closed-form bounds and the single-variable objective on the first ID.

All arithmetic is exact: integers for counts, ``Fraction`` for weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .partners import corresponding_k_set, k_partner
from .subsets import (
    KSet,
    Params,
    Regime,
    binom,
    count_L,
    in_range_Ri,
    lex_precedes,
    range_Ri,
    successor,
    tail_decompose,
)


class RegimeError(ValueError):
    """Parameters fall outside the range where a formula applies."""


def _require_mixed(params: Params) -> None:
    if not params.is_mixed:
        raise RegimeError(
            f"n={params.n}, ks={params.ks} is not in the range k1+k3 <= n < k1+k2"
        )


def _require_nonmixed(params: Params) -> None:
    if not params.is_nonmixed:
        raise RegimeError(f"n={params.n}, ks={params.ks} violates n >= k1+k2")


def star_value(params: Params) -> int:
    """Total size when every family is the full star at element 1."""
    n = params.n
    return sum(binom(n - 1, k - 1) for k in params.ks)


def lambda_values(params: Params) -> Tuple[int, int]:
    """``(lambda_1, lambda_2)``: the star value and the kernel value."""
    _require_mixed(params)
    n, ks = params.n, params.ks
    kt = ks[-1]
    lam2 = sum(binom(n, k) - binom(n - kt, k) for k in ks[:2])
    lam2 += sum(binom(n - kt, k - kt) for k in ks[2:])
    return star_value(params), lam2


def mixed_bound(params: Params) -> int:
    return max(lambda_values(params))


def nonmixed_branches(params: Params) -> Tuple[int, int]:
    """The star branch and the kernel branch of the bound for ``n >= k1+k2``."""
    _require_nonmixed(params)
    n, ks = params.n, params.ks
    kt = ks[-1]
    kernel = binom(n, ks[0]) - binom(n - kt, ks[0])
    kernel += sum(binom(n - kt, k - kt) for k in ks[1:])
    return star_value(params), kernel


def nonmixed_bound(params: Params) -> int:
    return max(nonmixed_branches(params))


def equal_size_bound(n: int, k: int, t: int) -> int:
    """Maximum for t pairwise cross-intersecting k-uniform families, n >= 2k."""
    if n < 2 * k or t < 2:
        raise RegimeError(f"need n >= 2k and t >= 2 (n={n}, k={k}, t={t})")
    return max(binom(n, k) - binom(n - k, k) + t - 1, t * binom(n - 1, k - 1))


def two_family_bound(n: int, k: int, l: int) -> int:
    """Maximum of ``|A| + |B|`` for non-empty cross-intersecting k- and l-uniform families."""
    if k < l or n < k + l:
        raise RegimeError(f"need k >= l and n >= k + l (n={n}, k={k}, l={l})")
    return binom(n, k) - binom(n - l, k) + 1


def weighted_bound(params: Params, d: Sequence, i: int) -> Fraction:
    """Bound on ``sum_j d_j |A_j|`` when family ``i`` is at least a full star."""
    n, ks, t = params.n, params.ks, params.t
    if len(d) != t:
        raise ValueError(f"need {t} weights, got {len(d)}")
    w = [Fraction(x) for x in d]
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    if not 1 <= i <= t:
        raise ValueError(f"index {i} outside [1, {t}]")
    ki = ks[i - 1]
    others = [j for j in range(t) if j != i - 1]
    if any(n < ki + ks[j] for j in others):
        raise RegimeError(f"need n >= k_{i} + k_j for all j != {i}")
    m = min(ks[j] for j in others)
    kernel = w[i - 1] * (binom(n, ki) - binom(n - m, ki))
    kernel += sum(w[j] * binom(n - m, ks[j] - m) for j in others)
    star = sum(w[j] * binom(n - 1, ks[j] - 1) for j in range(t))
    return max(kernel, star)


def f_i_of_s(params: Params, i: int, s: int) -> int:
    """Total size when family ``i`` meets an s-set and all others contain it."""
    _require_nonmixed(params)
    n, ks, t = params.n, params.ks, params.t
    if not 1 <= i <= t:
        raise ValueError(f"index {i} outside [1, {t}]")
    m = min(ks[j] for j in range(t) if j != i - 1)
    if not 1 <= s <= m:
        raise ValueError(f"s={s} outside [1, {m}]")
    ki = ks[i - 1]
    return binom(n, ki) - binom(n - s, ki) + sum(
        binom(n - s, ks[j] - s) for j in range(t) if j != i - 1
    )


def system_ids(R1: Sequence[int], params: Params, regime: Optional[Regime] = None) -> Tuple[KSet, ...]:
    """IDs forced by the first ID: corresponding sets for the free group,
    k-partners for the rest."""
    regime = regime or params.regime
    n = params.n
    ids = [tuple(R1)]
    for i in range(2, params.t + 1):
        ki = params.k(i)
        if i <= regime.s:
            ids.append(corresponding_k_set(R1, ki, n))
        else:
            K = k_partner(R1, ki, n)
            if K is None:
                raise ValueError(f"{R1} has no {ki}-partner")
            ids.append(K)
    return tuple(ids)


def family_sizes(R1: Sequence[int], params: Params, regime: Optional[Regime] = None) -> Tuple[int, ...]:
    return _family_sizes(tuple(R1), params, regime or params.regime)


@lru_cache(maxsize=1 << 16)
def _family_sizes(R1: KSet, params: Params, regime: Regime) -> Tuple[int, ...]:
    n = params.n
    return tuple(
        count_L(R, k, n) for R, k in zip(system_ids(R1, params, regime), params.ks)
    )


def _check_window(R1: Sequence[int], params: Params) -> None:
    if len(R1) != params.ks[0] or not in_range_Ri(R1, 1, params):
        raise ValueError(f"{R1} is not an admissible first ID for {params}")


def f_value(R1: Sequence[int], params: Params, regime: Optional[Regime] = None) -> int:
    """Total size of the system determined by the first ID ``R1``."""
    _check_window(R1, params)
    return sum(family_sizes(R1, params, regime))


@dataclass(frozen=True)
class IncrementReport:
    alpha_per_index: Tuple[int, ...]
    gamma: int
    delta: int

    @property
    def net(self) -> int:
        return self.gamma - self.delta


def increments(R1: Sequence[int], R1p: Sequence[int], params: Params,
               regime: Optional[Regime] = None) -> IncrementReport:
    """Gains of the free families and losses of the others from ``R1`` to ``R1p``."""
    regime = regime or params.regime
    _check_window(R1, params)
    _check_window(R1p, params)
    if not lex_precedes(R1, R1p):
        raise ValueError(f"{R1} does not precede {R1p}")
    before = family_sizes(R1, params, regime)
    after = family_sizes(R1p, params, regime)
    s = regime.s
    alphas = tuple(after[i] - before[i] for i in range(s))
    delta = sum(before[i] - after[i] for i in range(s, params.t))
    return IncrementReport(alphas, sum(alphas), delta)


def alpha_closed_form(R1p: Sequence[int], i: int, params: Params,
                      regime: Optional[Regime] = None) -> int:
    """Gain of free family ``i`` when the first ID steps onto ``R1p``."""
    regime = regime or params.regime
    if not 1 <= i <= regime.s:
        raise ValueError(f"index {i} outside the free group [1, {regime.s}]")
    _check_window(R1p, params)
    if tuple(R1p) == range_Ri(1, params)[0]:
        raise ValueError(f"{R1p} is the first admissible ID and has no predecessor")
    hd, ell = tail_decompose(R1p, params.n)
    return binom(ell, params.k(i) - len(hd))


def beta_closed_form(q: int, params: Params, regime: Optional[Regime] = None) -> int:
    """Loss of the non-free families on a step whose new ID has maximum ``q``.

    Outside the mixed range the free group is family 1 alone.
    """
    if params.is_mixed:
        regime = regime or params.regime
        s = regime.s
    else:
        s = 1
    n, k1 = params.n, params.ks[0]
    return sum(binom(n - q, k - (q - k1)) for k in params.ks[s:])


def is_consecutive(F: Sequence[int], G: Sequence[int], n: int) -> bool:
    return len(F) == len(G) and successor(F, n) == tuple(G)
