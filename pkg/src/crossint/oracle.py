"""Brute-force ground truth.

Everything here is computed from explicit set members (as bitmasks) rather
than from partner arithmetic, so it can be used to check that arithmetic.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .bounds import RegimeError, f_value
from .partners import k_partner
from .subsets import (
    KSet,
    Params,
    binom,
    count_L,
    interval,
    iter_range_Ri,
    ksubsets,
    lex_precedes,
    unrank,
)


class BudgetExceeded(RuntimeError):
    """The exhaustive search would exceed its configured limits."""


def to_mask(A: Iterable[int]) -> int:
    m = 0
    for x in A:
        m |= 1 << (x - 1)
    return m


@lru_cache(maxsize=None)
def kset_masks(n: int, k: int) -> np.ndarray:
    """Bitmasks of all k-subsets of [n] in lex order."""
    return np.array([to_mask(c) for c in ksubsets(n, k)], dtype=np.int64)


def members(R: Sequence[int], k: int, n: int) -> List[KSet]:
    """``L(R, k)`` listed by scanning every k-set."""
    return [F for F in ksubsets(n, k) if lex_precedes(F, R)]


def cross_intersecting(fam_a: Iterable[Sequence[int]], fam_b: Iterable[Sequence[int]]) -> bool:
    ma = [to_mask(A) for A in fam_a]
    mb = [to_mask(B) for B in fam_b]
    return all(x & y for x in ma for y in mb)


def is_intersecting(fam: Iterable[Sequence[int]]) -> bool:
    ms = [to_mask(A) for A in fam]
    return all(x & y for x in ms for y in ms)


def families_cross_intersecting(idA: Sequence[int], kA: int, idB: Sequence[int], kB: int,
                                n: int, fast: bool = False) -> bool:
    """Whether ``L(idA, kA)`` and ``L(idB, kB)`` are cross-intersecting.

    The default path lists members; ``fast=True`` compares ``idB`` with the
    kB-partner of ``idA`` instead.
    """
    if fast:
        if kA + kB > n:
            return True
        K = k_partner(idA, kB, n)
        return K is not None and lex_precedes(idB, K)
    return cross_intersecting(members(idA, kA, n), members(idB, kB, n))


class PairTable:
    """Disjointness between the a-sets and the b-sets of [n], indexed by rank.

    ``first_a[r]`` is the rank of the first b-set disjoint from the a-set of
    rank ``r`` (``N_b + 1`` when none is).  From it, ``cap_a[r]`` is the
    largest b-rank whose L-initial family is cross-intersecting with the
    first ``r`` a-sets.  Ranks are 1-based; index 0 is padding.
    """

    def __init__(self, n: int, a: int, b: int):
        self.n, self.a, self.b = n, a, b
        ma, mb = kset_masks(n, a), kset_masks(n, b)
        self.Na, self.Nb = len(ma), len(mb)
        disjoint = (ma[:, None] & mb[None, :]) == 0
        self.first_a = self._first(disjoint, self.Nb)
        self.first_b = self._first(disjoint.T, self.Na)
        self.cap_a = self._cap(self.first_a)
        self.cap_b = self._cap(self.first_b)
        self._sorted_a = np.sort(self.first_a[1:])
        self._sorted_b = np.sort(self.first_b[1:])

    @staticmethod
    def _first(disjoint: np.ndarray, width: int) -> np.ndarray:
        hit = disjoint.any(axis=1)
        first = np.where(hit, disjoint.argmax(axis=1) + 1, width + 1)
        return np.concatenate(([width + 1], first)).astype(np.int64)

    @staticmethod
    def _cap(first: np.ndarray) -> np.ndarray:
        cap = np.minimum.accumulate(first) - 1
        cap[0] = first[0] - 1
        return cap

    def cross(self, ra: int, rb: int) -> bool:
        return rb <= self.cap_a[ra]

    def compatible_a(self, rb: int) -> int:
        """Number of a-sets meeting every member of the first ``rb`` b-sets."""
        return self.Na - int(np.searchsorted(self._sorted_a, rb, side="right"))

    def compatible_b(self, ra: int) -> int:
        return self.Nb - int(np.searchsorted(self._sorted_b, ra, side="right"))

    def cross_matrix(self) -> np.ndarray:
        """``[ra - 1, rb - 1]`` is True iff the two initial families cross-intersect."""
        rb = np.arange(1, self.Nb + 1)
        return rb[None, :] <= self.cap_a[1:, None]

    def maximal_matrix(self) -> np.ndarray:
        """``[ra - 1, rb - 1]`` is True iff the pair of initial families is maximal."""
        ra = np.arange(1, self.Na + 1)
        rb = np.arange(1, self.Nb + 1)
        comp_a = self.Na - np.searchsorted(self._sorted_a, rb, side="right")
        comp_b = self.Nb - np.searchsorted(self._sorted_b, ra, side="right")
        return (self.cross_matrix() & (comp_a[None, :] == ra[:, None])
                & (comp_b[:, None] == rb[None, :]))

    def maximal(self, ra: int, rb: int) -> bool:
        return (self.cross(ra, rb) and self.compatible_a(rb) == ra
                and self.compatible_b(ra) == rb)


@lru_cache(maxsize=256)
def pair_table(n: int, a: int, b: int) -> PairTable:
    return PairTable(n, a, b)


def _rank_of(R: Sequence[int], k: int, n: int) -> int:
    return sum(1 for F in ksubsets(n, k) if lex_precedes(F, R))


def maximality_bruteforce(idA: Sequence[int], kA: int, idB: Sequence[int], kB: int, n: int) -> bool:
    """Whether the two L-initial families are cross-intersecting and neither can grow."""
    if kA + kB > n:
        raise ValueError(f"kA + kB = {kA + kB} exceeds n = {n}")
    ra, rb = _rank_of(idA, kA, n), _rank_of(idB, kB, n)
    if ra == 0 or rb == 0:
        return False
    return pair_table(n, kA, kB).maximal(ra, rb)


def max_compatible_id(F: Sequence[int], k: int, n: int) -> Optional[KSet]:
    """Lex-greatest k-set K with ``L(K, k)`` cross-intersecting ``L(F, |F|)``."""
    r = _rank_of(F, len(F), n)
    c = int(pair_table(n, len(F), k).cap_a[r])
    return unrank(c, k, n) if c else None


# ---------------------------------------------------------------------------
# exhaustive maximum over L-initial systems


@dataclass
class OracleResult:
    params: Params
    value: int
    rank_tuples: List[Tuple[int, ...]]
    nodes: int = 0
    elapsed_ms: int = 0

    @property
    def tuples(self) -> List[Tuple[KSet, ...]]:
        n = self.params.n
        return [tuple(unrank(r, k, n) for r, k in zip(rt, self.params.ks))
                for rt in self.rank_tuples]


class _Search:
    def __init__(self, params: Params, budget_nodes: Optional[int],
                 deadline: Optional[float]):
        self.params = params
        self.t = params.t
        self.N = [binom(params.n, k) for k in params.ks]
        self.cap = [[None] * self.t for _ in range(self.t)]
        for i in range(self.t):
            for j in range(self.t):
                if i != j:
                    self.cap[i][j] = pair_table(params.n, params.ks[i], params.ks[j]).cap_a
        self.budget_nodes = budget_nodes
        self.deadline = deadline
        self.nodes = 0
        self.best = -1
        self.found: List[Tuple[int, ...]] = []

    def _tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.budget_nodes is not None and self.nodes > self.budget_nodes:
            raise BudgetExceeded(f"node budget {self.budget_nodes} exhausted")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")

    def _record(self, total: int, ranks: Tuple[int, ...]) -> None:
        if total > self.best:
            self.best = total
            self.found = [ranks]
        elif total == self.best:
            self.found.append(ranks)

    def run(self, first_ranks: Iterable[int]) -> None:
        ub = list(self.N)
        for r in first_ranks:
            self._branch(0, (), 0, ub, r)

    def _branch(self, depth, ranks, partial, ub, r):
        self._tick()
        t = self.t
        new_ub = list(ub)
        row = self.cap[depth]
        for j in range(depth + 1, t):
            c = int(row[j][r])
            if c < new_ub[j]:
                new_ub[j] = c
            if new_ub[j] < 1:
                return
        partial += r
        ranks = ranks + (r,)
        if partial + sum(new_ub[depth + 1:]) < self.best:
            return
        if depth + 1 == t - 1:
            self._record(partial + new_ub[t - 1], ranks + (new_ub[t - 1],))
        elif depth + 1 == t - 2:
            self._last_two(ranks, partial, new_ub)
        else:
            for r2 in range(new_ub[depth + 1], 0, -1):
                self._branch(depth + 1, ranks, partial, new_ub, r2)

    def _last_two(self, ranks, partial, ub):
        t = self.t
        u, v = ub[t - 2], ub[t - 1]
        self._tick(u)
        r = np.arange(1, u + 1)
        rt = np.minimum(v, self.cap[t - 2][t - 1][1:u + 1])
        ok = rt >= 1
        if not ok.any():
            return
        totals = np.where(ok, partial + r + rt, -1)
        top = int(totals.max())
        if top < self.best:
            return
        for idx in np.flatnonzero(totals == top)[::-1]:
            self._record(top, ranks + (int(r[idx]), int(rt[idx])))


def _search_partition(params: Params, first_ranks: List[int], budget_nodes, deadline):
    s = _Search(params, budget_nodes, deadline)
    s.run(first_ranks)
    return s.best, s.found, s.nodes


def search_space(params: Params) -> int:
    return prod(binom(params.n, k) for k in params.ks)


def exact_M(params: Params, budget_nodes: Optional[int] = None,
            budget_seconds: Optional[float] = None, max_space: int = 10**7,
            workers: int = 1) -> OracleResult:
    """Exact maximum of the total size over non-empty pairwise cross-intersecting
    L-initial systems, with every maximising ID tuple."""
    space = search_space(params)
    if max_space is not None and space > max_space:
        raise BudgetExceeded(f"search space {space} exceeds limit {max_space}")
    start = time.monotonic()
    deadline = start + budget_seconds if budget_seconds else None
    # descending from the lex-last first ID
    firsts = list(range(binom(params.n, params.ks[0]), 0, -1))
    if workers <= 1:
        parts = [_search_partition(params, firsts, budget_nodes, deadline)]
    else:
        chunks = [firsts[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_partition, [params] * workers, chunks,
                                  [budget_nodes] * workers, [deadline] * workers))
    best = max(p[0] for p in parts)
    if best < 0:
        raise ValueError(f"no non-empty cross-intersecting system for {params}")
    found = sorted({rt for b, f, _ in parts if b == best for rt in f})
    elapsed = int((time.monotonic() - start) * 1000)
    return OracleResult(params, best, found, sum(p[2] for p in parts), elapsed)


def system_is_cross_intersecting(ids: Sequence[Sequence[int]], params: Params) -> bool:
    """Member-level check of a whole ID tuple (every pair of families)."""
    fams = [members(I, k, params.n) for I, k in zip(ids, params.ks)]
    if any(not f for f in fams):
        return False
    return all(cross_intersecting(fams[i], fams[j])
               for i, j in combinations(range(len(fams)), 2))


# ---------------------------------------------------------------------------
# structure of extremal systems


@dataclass(frozen=True)
class ExtremalClass:
    label: str
    witness: Optional[Tuple[int, ...]] = None


def star_ids(params: Params) -> Tuple[KSet, ...]:
    n = params.n
    return tuple((1,) + interval(n - k + 2, n) for k in params.ks)


def kernel_ids(params: Params) -> Tuple[KSet, ...]:
    """IDs of the system where the free group meets ``[k_t]`` and the rest contain it.

    The free group is every family ``j`` with ``k_1 + k_j > n`` (and family 1
    itself), so in the mixed range this is families 1 and 2.
    """
    n, ks = params.n, params.ks
    kt = ks[-1]
    out = []
    for j, k in enumerate(ks):
        if j == 0 or ks[0] + k > n:
            out.append((kt,) + interval(n - k + 2, n))
        else:
            out.append(interval(1, kt) + interval(n - k + kt + 1, n))
    return tuple(out)


def _is_exceptional_system(ids: Sequence[KSet], params: Params) -> bool:
    n, (k1, _, k3, _) = params.n, params.ks
    if ids[0] != ids[1] or ids[2] != ids[3]:
        return False
    f3 = members(ids[2], k3, n)
    if not is_intersecting(f3):
        return False
    full = (1 << n) - 1
    banned = {full ^ to_mask(A) for A in f3}
    expected = [F for F in ksubsets(n, k1) if to_mask(F) not in banned]
    return members(ids[0], k1, n) == expected


def classify_extremal(ids: Sequence[Sequence[int]], params: Params) -> ExtremalClass:
    """Label an extremal ID tuple by the canonical pattern it matches."""
    ids = tuple(tuple(I) for I in ids)
    if params.is_exceptional and _is_exceptional_system(ids, params):
        return ExtremalClass("exceptional", ids[2])
    if ids == star_ids(params):
        return ExtremalClass("star", (1,))
    if ids == kernel_ids(params):
        return ExtremalClass("kernel", interval(1, params.ks[-1]))
    return ExtremalClass("other")


# ---------------------------------------------------------------------------
# profiles and compression


def f_profile(params: Params) -> List[int]:
    """Objective over the admissible first IDs, in lex order."""
    if not params.is_mixed:
        raise RegimeError(f"{params} is not in the mixed range")
    return [f_value(R, params) for R in iter_range_Ri(1, params)]


def initial_segment(size: int, k: int, n: int) -> List[KSet]:
    """The first ``size`` k-subsets, built by unranking."""
    return [unrank(r, k, n) for r in range(1, size + 1)]


def kk_compress_check(fam_a: Sequence[Sequence[int]], fam_b: Sequence[Sequence[int]], n: int) -> bool:
    """Whether the L-initial families of the same sizes are still cross-intersecting."""
    if not fam_a or not fam_b:
        raise ValueError("families must be non-empty")
    ka, kb = len(fam_a[0]), len(fam_b[0])
    if any(len(A) != ka for A in fam_a) or any(len(B) != kb for B in fam_b):
        raise ValueError("families must be uniform")
    if not cross_intersecting(fam_a, fam_b):
        raise ValueError("input families are not cross-intersecting")
    return cross_intersecting(initial_segment(len(fam_a), ka, n),
                              initial_segment(len(fam_b), kb, n))


def random_cross_intersecting_pair(rng: random.Random, n: int) -> Tuple[List[KSet], List[KSet]]:
    """A random non-empty cross-intersecting pair of uniform families on [n].

    Sizes are drawn with ``ka + kb <= n`` so the pair is never trivially free.
    The first family is seeded from a random core, the second is a random
    part of everything compatible with it, and half the time the first is
    then grown to everything compatible with the second.
    """
    while True:
        ka = rng.randint(1, n - 1)
        kb = rng.randint(1, n - ka)
        all_a = list(ksubsets(n, ka))
        all_b = list(ksubsets(n, kb))
        core = set(rng.sample(range(1, n + 1), rng.randint(1, min(kb, n))))
        pool = [A for A in all_a if core & set(A)] if rng.random() < 0.7 else all_a
        fam_a = [A for A in pool if rng.random() < rng.random()]
        if not fam_a:
            fam_a = [rng.choice(pool)]
        ma = [to_mask(A) for A in fam_a]
        allowed = [B for B in all_b if all(to_mask(B) & x for x in ma)]
        if not allowed:
            continue
        p = rng.random()
        fam_b = [B for B in allowed if rng.random() < p] or [rng.choice(allowed)]
        if rng.random() < 0.5:
            mb = [to_mask(B) for B in fam_b]
            fam_a = [A for A in all_a if all(to_mask(A) & y for y in mb)]
        return fam_a, fam_b
