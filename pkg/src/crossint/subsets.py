"""Lexicographic arithmetic on finite subsets of [n].

Sets are plain tuples of strictly increasing 1-based integers.  The ground
size ``n`` is passed explicitly wherever an operation depends on it.

The order used throughout is the one where a superset precedes its subsets:
``A <= B`` iff ``A`` contains ``B`` or ``min(A - B) < min(B - A)``.  On sets of
a common size this is ordinary lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, inf
from typing import Iterator, Optional, Sequence, Tuple

KSet = Tuple[int, ...]


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def kset(elements: Sequence[int], n: int) -> KSet:
    """Validate and normalise ``elements`` as a subset of ``[n]``."""
    s = tuple(sorted(elements))
    if len(set(s)) != len(s):
        raise ValueError(f"duplicate elements in {elements!r}")
    if s and (s[0] < 1 or s[-1] > n):
        raise ValueError(f"{elements!r} is not a subset of [1, {n}]")
    return s


def interval(a: int, b: int) -> KSet:
    """``[a, b]`` as a tuple; empty when ``a > b``."""
    return tuple(range(a, b + 1))


def lex_key(A: Sequence[int]) -> tuple:
    # The +inf sentinel makes a proper prefix (a subset) sort after its
    # extensions, which is exactly "supersets come first".
    return (*A, inf)


def lex_precedes(A: Sequence[int], B: Sequence[int]) -> bool:
    """True iff ``A`` is no later than ``B`` (reflexive)."""
    return lex_key(A) <= lex_key(B)


def strictly_precedes(A: Sequence[int], B: Sequence[int]) -> bool:
    return lex_key(A) < lex_key(B)


def ksubsets(n: int, k: int) -> Iterator[KSet]:
    """All k-subsets of [n] in lex order."""
    return combinations(range(1, n + 1), k)


def first_kset(k: int) -> KSet:
    return interval(1, k)


def last_kset(n: int, k: int) -> KSet:
    return interval(n - k + 1, n)


def successor(R: Sequence[int], n: int) -> Optional[KSet]:
    """Next set of the same size in lex order, or None for the last one."""
    k = len(R)
    if k == 0:
        raise ValueError("successor of the empty set is undefined")
    r = list(R)
    for i in range(k - 1, -1, -1):
        # position i (0-based) can hold at most n - k + i + 1
        if r[i] < n - k + i + 1:
            r[i] += 1
            for j in range(i + 1, k):
                r[j] = r[i] + j - i
            return tuple(r)
    return None


def predecessor(R: Sequence[int], n: int) -> Optional[KSet]:
    """Previous set of the same size in lex order, or None for ``[k]``."""
    k = len(R)
    if k == 0:
        raise ValueError("predecessor of the empty set is undefined")
    r = list(R)
    for i in range(k - 1, -1, -1):
        floor = r[i - 1] if i else 0
        if r[i] - 1 > floor:
            r[i] -= 1
            for j in range(i + 1, k):
                r[j] = n - k + j + 1
            return tuple(r)
    return None


def _run_sum(n: int, lo: int, hi: int, j: int) -> int:
    # sum_{x=lo}^{hi} C(n - x, j) by the hockey-stick identity
    if lo > hi:
        return 0
    return binom(n - lo + 1, j + 1) - binom(n - hi, j + 1)


def count_L(R: Sequence[int], k: int, n: int) -> int:
    """Number of k-subsets F of [n] with ``F <= R``.

    ``R`` may have any non-zero size.  A k-set precedes ``R`` either by
    branching below ``R`` at some position, or by extending ``R`` with larger
    elements when ``|R| <= k``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"invalid size k={k} for n={n}")
    if not R:
        raise ValueError("R must be non-empty")
    m = len(R)
    total = 0
    prev = 0
    for i in range(min(k, m)):
        total += _run_sum(n, prev + 1, R[i] - 1, k - i - 1)
        prev = R[i]
    if m <= k:
        total += binom(n - R[-1], k - m)
    return total


def rank(R: Sequence[int], n: int) -> int:
    """1-based position of ``R`` among the ``|R|``-subsets of [n]."""
    return count_L(R, len(R), n)


def unrank(r: int, k: int, n: int) -> KSet:
    """The r-th k-subset of [n] (1-based), so that ``count_L(result) == r``."""
    total = binom(n, k)
    if not 1 <= r <= total:
        raise ValueError(f"rank {r} outside [1, {total}]")
    r -= 1
    out = []
    x = 1
    for i in range(k):
        while True:
            block = binom(n - x, k - i - 1)
            if r < block:
                out.append(x)
                x += 1
                break
            r -= block
            x += 1
    return tuple(out)


def last_preceding(R: Sequence[int], k: int, n: int) -> Optional[KSet]:
    """Lex-last k-set F with ``F <= R``; None when no k-set qualifies."""
    c = count_L(R, k, n)
    return unrank(c, k, n) if c else None


def tail_decompose(F: Sequence[int], n: int) -> Tuple[KSet, int]:
    """Split ``F`` into its head and the length of its top run ``[n-l+1, n]``."""
    if not F:
        raise ValueError("F must be non-empty")
    ell = 0
    i = len(F) - 1
    while i >= 0 and F[i] == n - ell:
        ell += 1
        i -= 1
    return tuple(F[: len(F) - ell]), ell


def head(F: Sequence[int], n: int) -> KSet:
    return tail_decompose(F, n)[0]


def tail_length(F: Sequence[int], n: int) -> int:
    return tail_decompose(F, n)[1]


def _split_window(A: Sequence[int], c: int) -> Tuple[KSet, int]:
    # (prefix, start of the final c-window) or start -1 if not a window
    prefix, window = tuple(A[: len(A) - c]), A[len(A) - c:]
    start = window[0]
    if any(w != start + j for j, w in enumerate(window)):
        return prefix, -1
    if prefix and prefix[-1] >= start:
        return prefix, -1
    return prefix, start


def is_c_sequential(A: Sequence[int], B: Sequence[int], c: int) -> bool:
    """True iff ``A`` and ``B`` lie on one c-sequential chain with ``A`` first.

    Both sets share a prefix ``P`` and end in a run of ``c`` consecutive
    integers above ``max P``; the run of ``B`` starts later than that of ``A``.
    """
    if len(A) != len(B):
        raise ValueError("c-sequential sets must have equal size")
    if not 1 <= c <= len(A):
        raise ValueError(f"c={c} outside [1, {len(A)}]")
    pa, sa = _split_window(A, c)
    pb, sb = _split_window(B, c)
    return sa > 0 and sb > 0 and pa == pb and sa < sb


def is_c_step(A: Sequence[int], B: Sequence[int], c: int) -> bool:
    """The single-step relation: ``B``'s window is ``A``'s shifted by one."""
    if not is_c_sequential(A, B, c):
        return False
    return B[-1] == A[-1] + 1


@dataclass(frozen=True)
class Params:
    """Ground size and family sizes ``k_1 >= ... >= k_t``."""

    n: int
    ks: Tuple[int, ...]

    def __post_init__(self):
        ks = tuple(self.ks)
        object.__setattr__(self, "ks", ks)
        if len(ks) < 2:
            raise ValueError("need at least two families")
        if any(a < b for a, b in zip(ks, ks[1:])):
            raise ValueError(f"sizes must be non-increasing: {ks}")
        if ks[-1] < 1 or ks[0] > self.n:
            raise ValueError(f"sizes {ks} invalid for n={self.n}")

    @property
    def t(self) -> int:
        return len(self.ks)

    def k(self, i: int) -> int:
        """Size of family ``i`` (1-based)."""
        return self.ks[i - 1]

    @property
    def is_mixed(self) -> bool:
        ks = self.ks
        return self.t >= 3 and ks[0] + ks[2] <= self.n < ks[0] + ks[1]

    @property
    def is_nonmixed(self) -> bool:
        return self.n >= self.ks[0] + self.ks[1]

    @property
    def is_exceptional(self) -> bool:
        """The four-family pattern with a non-unique extremal structure."""
        ks = self.ks
        return (self.t == 4 and ks[0] == ks[1] and ks[2] == ks[3]
                and self.n == ks[0] + ks[2])

    @property
    def regime_label(self) -> str:
        if self.is_mixed:
            return "mixed"
        if self.is_nonmixed:
            return "nonmixed"
        return "unsupported"

    @cached_property
    def regime(self) -> "Regime":
        return Regime.from_params(self)


@dataclass(frozen=True)
class Regime:
    """Split of the families into a freely cross-intersecting top group.

    ``s`` counts the families ``j`` with ``k_1 + k_j > n`` (family 1 included);
    ``s_prime`` counts the families with ``k_j == k_1``.
    """

    s: int
    s_prime: int

    @classmethod
    def from_params(cls, params: Params) -> "Regime":
        n, ks = params.n, params.ks
        s = sum(1 for k in ks if ks[0] + k > n)
        s_prime = sum(1 for k in ks if k == ks[0])
        if s < 2:
            raise ValueError(f"n={n}, ks={ks}: no freely cross-intersecting pair")
        if s >= params.t:
            raise ValueError(f"n={n}, ks={ks}: every pair is free")
        if not n < ks[s - 2] + ks[s - 1]:
            raise ValueError(f"n={n}, ks={ks}: top {s} families not pairwise free")
        if s_prime > s:
            raise ValueError(f"n={n}, ks={ks}: s'={s_prime} exceeds s={s}")
        return cls(s, s_prime)

    def free(self) -> range:
        return range(1, self.s + 1)

    def nonfree(self, t: int) -> range:
        """Indices (1-based) non-freely cross-intersecting with family 1."""
        return range(self.s + 1, t + 1)


def range_Ri(i: int, params: Params) -> Tuple[KSet, KSet]:
    """Window ``(lo, hi)`` of admissible IDs for family ``i`` at an optimum."""
    n, t = params.n, params.t
    if not 1 <= i <= t:
        raise ValueError(f"family index {i} outside [1, {t}]")
    ki, kt = params.k(i), params.ks[-1]
    top = interval(n - ki + 2, n)
    if i <= 2:
        return (1, *top), (kt, *top)
    return interval(1, kt) + interval(n - ki + kt + 1, n), (1, *top)


def in_range_Ri(R: Sequence[int], i: int, params: Params) -> bool:
    lo, hi = range_Ri(i, params)
    return lex_precedes(lo, R) and lex_precedes(R, hi)


def iter_range_Ri(i: int, params: Params) -> Iterator[KSet]:
    """Members of the window for family ``i`` in lex order."""
    lo, hi = range_Ri(i, params)
    R: Optional[KSet] = lo
    while R is not None:
        yield R
        if R == hi:
            return
        R = successor(R, params.n)


def fmt_set(A: Sequence[int]) -> str:
    return "{" + ",".join(map(str, A)) + "}"
