"""Exhaustive and randomized invariant suites.

Each check returns a :class:`CheckResult` counting how many individual
assertions ran and keeping a short sample of the ones that failed.  Ground
truth comes from explicit enumeration (see :mod:`crossint.oracle`), never
from the arithmetic under test.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from . import bounds as B
from .oracle import (
    classify_extremal,
    exact_M,
    f_profile,
    families_cross_intersecting,
    kk_compress_check,
    members,
    pair_table,
    random_cross_intersecting_pair,
    search_space,
)
from .partners import (
    corresponding_k_set,
    is_maximal_pair,
    k_parity,
    k_partner,
    k_partner_count,
    k_partner_via_rank,
    maximal_counterpart,
    partner,
)
from .subsets import (
    KSet,
    Params,
    Regime,
    count_L,
    fmt_set,
    interval,
    is_c_sequential,
    iter_range_Ri,
    ksubsets,
    lex_precedes,
    strictly_precedes,
    successor,
    tail_decompose,
    unrank,
)

MAX_SAMPLES = 20


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    failures: int = 0
    samples: List[str] = field(default_factory=list)

    def expect(self, ok: bool, msg: Callable[[], str] | str = "") -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if len(self.samples) < MAX_SAMPLES:
                self.samples.append(msg() if callable(msg) else msg)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"name": self.name, "checks": self.checks,
                "failures": self.failures, "samples": list(self.samples)}


# ---------------------------------------------------------------------------
# parameter grids


def all_subsets(n: int) -> Iterator[KSet]:
    for k in range(1, n + 1):
        yield from ksubsets(n, k)


def _ks_tuples(n: int, t: int, k_min: int = 1) -> Iterator[Tuple[int, ...]]:
    for combo in combinations_with_replacement(range(n, k_min - 1, -1), t):
        yield combo


def mixed_params(n_max: int, t_values=(3, 4, 5), kt_min: int = 2,
                 max_space: Optional[int] = None, n_min: int = 2) -> Iterator[Params]:
    for n in range(n_min, n_max + 1):
        for t in t_values:
            for ks in _ks_tuples(n, t, kt_min):
                P = Params(n, ks)
                if not P.is_mixed:
                    continue
                if max_space is not None and search_space(P) > max_space:
                    continue
                yield P


def nonmixed_params(n_max: int, t_values=(2, 3, 4), max_space: Optional[int] = None,
                    n_min: int = 2) -> Iterator[Params]:
    for n in range(n_min, n_max + 1):
        for t in t_values:
            for ks in _ks_tuples(n, t):
                P = Params(n, ks)
                if not P.is_nonmixed:
                    continue
                if max_space is not None and search_space(P) > max_space:
                    continue
                yield P


def regime_params(n_max: int, t_max: int = 6) -> Iterator[Params]:
    """Every parameter set with a valid free/non-free split, any ``s >= 2``."""
    for n in range(2, n_max + 1):
        for t in range(3, t_max + 1):
            for ks in _ks_tuples(n, t):
                P = Params(n, ks)
                try:
                    Regime.from_params(P)
                except ValueError:
                    continue
                yield P


# ---------------------------------------------------------------------------
# lex arithmetic


def _precedes_by_definition(A, B) -> bool:
    sa, sb = set(A), set(B)
    if sa >= sb:
        return True
    da, db = sa - sb, sb - sa
    return bool(da) and (not db or min(da) < min(db))


def check_lex_totality(n_max: int = 8) -> CheckResult:
    res = CheckResult("lex totality")
    for n in range(1, n_max + 1):
        sets = list(all_subsets(n))
        for A in sets:
            for Bs in sets:
                if A == Bs:
                    continue
                a, b = strictly_precedes(A, Bs), strictly_precedes(Bs, A)
                res.expect(a != b, lambda: f"n={n}: {A} vs {Bs}")
                res.expect(a == _precedes_by_definition(A, Bs),
                           lambda: f"n={n}: {A} <= {Bs} disagrees with definition")
    return res


def check_rank_coherence(n_max: int = 10, k_max: int = 5) -> CheckResult:
    res = CheckResult("rank/successor/unrank coherence")
    for n in range(1, n_max + 1):
        for k in range(1, min(k_max, n) + 1):
            expected = 0
            for R in ksubsets(n, k):
                expected += 1
                c = count_L(R, k, n)
                res.expect(c == expected, lambda: f"rank{R} n={n}: {c} != {expected}")
                res.expect(unrank(c, k, n) == R, lambda: f"unrank round trip {R} n={n}")
                S = successor(R, n)
                if S is not None:
                    res.expect(count_L(S, k, n) == c + 1, lambda: f"successor {R} n={n}")
                else:
                    res.expect(c == expected and R == interval(n - k + 1, n),
                               lambda: f"early end at {R} n={n}")
    return res


def check_count_L_bruteforce(n_max: int = 9) -> CheckResult:
    res = CheckResult("count_L vs enumeration")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            ks = list(ksubsets(n, k))
            for R in all_subsets(n):
                want = sum(1 for F in ks if _precedes_by_definition(F, R))
                got = count_L(R, k, n)
                res.expect(got == want, lambda: f"count_L({R},{k},{n}) = {got}, want {want}")
    return res


def check_tail_reassembly(n_max: int = 10) -> CheckResult:
    res = CheckResult("tail decomposition")
    for n in range(1, n_max + 1):
        for F in all_subsets(n):
            hd, ell = tail_decompose(F, n)
            run = interval(n - ell + 1, n)
            res.expect(tuple(sorted(hd + run)) == F and not set(hd) & set(run)
                       and (not hd or hd[-1] < n - ell),
                       lambda: f"{F} n={n} -> {hd}, {ell}")
    return res


def check_k_partner_scan(n_max: int = 9) -> CheckResult:
    """Direct k-partner construction against a scan for the last k-set before the partner."""
    res = CheckResult("k_partner vs scan")
    for n in range(2, n_max + 1):
        for F in all_subsets(n):
            H = partner(F)
            for k in range(1, n - len(F) + 1):
                cands = [K for K in ksubsets(n, k) if lex_precedes(K, H)]
                want = cands[-1] if cands else None
                got = k_partner(F, k, n)
                res.expect(got == want, lambda: f"k_partner({F},{k}) n={n}: {got} != {want}")
                res.expect(k_partner_via_rank(F, k, n) == want,
                           lambda: f"rank route ({F},{k}) n={n}")
    return res


# ---------------------------------------------------------------------------
# partners


def _rank_maps(n: int) -> Dict[int, Dict[KSet, int]]:
    return {k: {F: i + 1 for i, F in enumerate(ksubsets(n, k))} for k in range(1, n + 1)}


def check_partner_involution(n_max: int = 10) -> CheckResult:
    res = CheckResult("partner involution")
    for n in range(1, n_max + 1):
        for F in all_subsets(n):
            res.expect(partner(partner(F)) == F, lambda: f"{F}")
    return res


def check_k_partner_maximal(n_max: int = 9) -> CheckResult:
    """k-partner is the lex-greatest compatible ID, and its family equals L(partner)."""
    res = CheckResult("k_partner is the greatest compatible ID")
    for n in range(2, n_max + 1):
        ranks = _rank_maps(n)
        for F in all_subsets(n):
            f = len(F)
            rf = ranks[f][F]
            for k in range(1, n - f + 1):
                cap = int(pair_table(n, f, k).cap_a[rf])
                K = k_partner(F, k, n)
                want = unrank(cap, k, n) if cap else None
                res.expect(K == want, lambda: f"n={n} F={F} k={k}: {K} != {want}")
                cnt = count_L(partner(F), k, n)
                res.expect(cnt == k_partner_count(F, k, n) == cap,
                           lambda: f"family size n={n} F={F} k={k}")
    return res


def check_head_invariance(n_max: int = 9) -> CheckResult:
    res = CheckResult("k_partner depends only on the head")
    for n in range(2, n_max + 1):
        for F in all_subsets(n):
            hd, ell = tail_decompose(F, n)
            if not hd or not ell:
                continue
            for k in range(1, n - len(F) + 1):
                res.expect(k_partner(F, k, n) == k_partner(hd, k, n),
                           lambda: f"n={n} F={F} k={k}")
    return res


def check_antitone(n_max: int = 9) -> CheckResult:
    res = CheckResult("k_partner is order-reversing")
    for n in range(2, n_max + 1):
        for a in range(1, n):
            for b in range(a, n):
                for k in range(1, n - b + 1):
                    A_sets = list(ksubsets(n, a))
                    B_sets = list(ksubsets(n, b))
                    KA = {A: k_partner_count(A, k, n) for A in A_sets}
                    KB = {X: k_partner_count(X, k, n) for X in B_sets}
                    for A in A_sets:
                        for X in B_sets:
                            if A == X:
                                continue
                            if strictly_precedes(A, X):
                                res.expect(KB[X] <= KA[A], lambda: f"n={n} {A} < {X} k={k}")
                            elif strictly_precedes(X, A):
                                res.expect(KA[A] <= KB[X], lambda: f"n={n} {X} < {A} k={k}")
                    # parity inputs share their k-partner
                    for X in B_sets:
                        P = k_parity(X, a, n)
                        if P is not None and P != X:
                            res.expect(k_partner(P, k, n) == k_partner(X, k, n),
                                       lambda: f"parity n={n} {X}~{P} k={k}")
    return res


def check_partner_parity_order(n_max: int = 9) -> CheckResult:
    """For a >= b the b-partner of C precedes the a-partner or is its parity."""
    res = CheckResult("partners of one set: order or parity")
    for n in range(2, n_max + 1):
        for C in all_subsets(n):
            c = len(C)
            for a in range(1, n - c + 1):
                A = k_partner(C, a, n)
                if A is None:
                    continue
                for b in range(1, a + 1):
                    Bs = k_partner(C, b, n)
                    if Bs is None:
                        continue
                    ok = strictly_precedes(Bs, A) or k_parity(Bs, a, n) == A
                    res.expect(ok, lambda: f"n={n} C={C} a={a} b={b}: {Bs} vs {A}")
    return res


def check_remaximalize(n_max: int = 9) -> CheckResult:
    res = CheckResult("re-maximalization")
    for n in range(2, n_max + 1):
        ranks = _rank_maps(n)
        for A in all_subsets(n):
            a = len(A)
            for b in range(1, n - a + 1):
                Bs = k_partner(A, b, n)
                if Bs is None:
                    continue
                Ap = k_partner(Bs, a, n)
                res.expect(Ap is not None and lex_precedes(A, Ap),
                           lambda: f"n={n} A={A} b={b}: A'={Ap}")
                if Ap is None:
                    continue
                T = pair_table(n, a, b)
                res.expect(T.maximal(ranks[a][Ap], ranks[b][Bs]),
                           lambda: f"n={n} ({Ap},{Bs}) not maximal")
    return res


def check_maximality_iff(n_max: int = 9) -> CheckResult:
    """Head criterion against the enumerated maximality table, both directions."""
    res = CheckResult("maximal pairs iff heads are partners")
    for n in range(2, n_max + 1):
        for a in range(1, n):
            A_sets = list(ksubsets(n, a))
            for b in range(1, n - a + 1):
                M = pair_table(n, a, b).maximal_matrix()
                B_sets = list(ksubsets(n, b))
                any_row = M.any(axis=1)
                for ia, A in enumerate(A_sets):
                    row = M[ia]
                    for ib, X in enumerate(B_sets):
                        got = is_maximal_pair(A, X, n)
                        res.expect(got == bool(row[ib]),
                                   lambda: f"n={n} ({A},{X}): head test {got}")
                    W = maximal_counterpart(A, b, n)
                    if W is None:
                        res.expect(not any_row[ia], lambda: f"n={n} A={A} b={b}: missed counterpart")
                    else:
                        res.expect(bool(row[count_L(W, b, n) - 1]),
                                   lambda: f"n={n} A={A} b={b}: {W} not maximal")
    return res


def check_parity_of_maximal_ids(n_max: int = 9, size_max: int = 4) -> CheckResult:
    """IDs with a maximal h-counterpart: the f-sized ones are the f-parity of the g-sized ones."""
    res = CheckResult("parity of maximal ID sets")
    for n in range(2, n_max + 1):
        for f in range(1, size_max + 1):
            for h in range(1, min(size_max, n - f) + 1):
                Fset = _ids_with_counterpart(n, f, h)
                for g in range(1, f + 1):
                    Gset = _ids_with_counterpart(n, g, h)
                    for G in Gset:
                        P = k_parity(G, f, n)
                        res.expect(P is not None and P in Fset,
                                   lambda: f"n={n} f={f} g={g} h={h}: {G} -> {P}")
                    for F in Fset:
                        P = k_parity(F, g, n)
                        res.expect(P is None or P in Gset,
                                   lambda: f"n={n} f={f} g={g} h={h}: {F} -> {P}")
    return res


def _ids_with_counterpart(n: int, f: int, h: int) -> set:
    rows = pair_table(n, f, h).maximal_matrix().any(axis=1)
    return {F for F, ok in zip(ksubsets(n, f), rows) if ok}


def check_star_cap(n_max: int = 8) -> CheckResult:
    """Once the first family contains the full star, the other stays inside it."""
    res = CheckResult("families past the star force the other into the star")
    for n in range(2, n_max + 1):
        for a in range(1, n):
            star_a = count_L((1,) + interval(n - a + 2, n), a, n)
            for b in range(1, n - a + 1):
                star_b = count_L((1,) + interval(n - b + 2, n), b, n)
                cap = pair_table(n, a, b).cap_a
                for ra in range(star_a, len(cap)):
                    res.expect(int(cap[ra]) <= star_b,
                               lambda: f"n={n} a={a} b={b} rank {ra}: cap {int(cap[ra])}")
    return res


def check_worked_example() -> CheckResult:
    res = CheckResult("worked example n=9, A={2,4,7}")
    n, A = 9, (2, 4, 7)
    K = k_partner(A, 4, n)
    res.expect(K == (1, 3, 4, 9), f"4-partner {K}")
    res.expect(not is_maximal_pair(A, K, n), "({2,4,7},{1,3,4,9}) reported maximal")
    Ap = k_partner(K, 3, n)
    res.expect(Ap == (2, 4, 9), f"re-maximalized {Ap}")
    res.expect(Ap is not None and is_maximal_pair(Ap, K, n), "re-maximalized pair not maximal")
    res.expect(families_cross_intersecting(A, 3, K, 4, n), "families not cross-intersecting")
    return res


# ---------------------------------------------------------------------------
# increments


def check_increments(params_iter, with_lemma: bool = True) -> List[CheckResult]:
    """All increment identities over every parameter set in ``params_iter``."""
    eq4 = CheckResult("net change equals gain minus loss")
    add = CheckResult("gains and losses are additive")
    alpha = CheckResult("closed-form gain of the free families")
    beta = CheckResult("loss equals closed form in the new maximum")
    mono = CheckResult("loss decreases in the new maximum down to its floor")
    trans = CheckResult("consecutive steps with equal maximum")
    seq = CheckResult("sequential steps with matching maxima")
    lem = CheckResult("three-step comparison")
    for P in params_iter:
        regime = Regime.from_params(P)
        window = list(iter_range_Ri(1, P))
        sizes = [B.family_sizes(R, P, regime) for R in window]
        fvals = [sum(s) for s in sizes]
        s, t, n, k1 = regime.s, P.t, P.n, P.ks[0]
        tag = f"n={n} ks={P.ks}"

        def gd(x, y):
            g = sum(sizes[y][i] - sizes[x][i] for i in range(s))
            d = sum(sizes[x][i] - sizes[y][i] for i in range(s, t))
            return g, d

        N = len(window)
        for x in range(N):
            for y in range(x, N):
                rep = B.increments(window[x], window[y], P, regime)
                eq4.expect(fvals[y] - fvals[x] == rep.net,
                           lambda: f"{tag} {window[x]}->{window[y]}")
        for x in range(N):
            for y in range(x, N):
                g_xy, d_xy = gd(x, y)
                for z in range(y, N):
                    g_yz, d_yz = gd(y, z)
                    g_xz, d_xz = gd(x, z)
                    add.expect(g_xz == g_xy + g_yz and d_xz == d_xy + d_yz,
                               lambda: f"{tag} {window[x]},{window[y]},{window[z]}")

        # consecutive steps
        by_q: Dict[int, set] = {}
        steps = []
        for x in range(N - 1):
            R, Rp = window[x], window[x + 1]
            rep = B.increments(R, Rp, P, regime)
            for i in range(1, s + 1):
                cf = B.alpha_closed_form(Rp, i, P, regime)
                alpha.expect(cf == rep.alpha_per_index[i - 1],
                             lambda: f"{tag} {R}->{Rp} i={i}: {cf}")
            alpha.expect(rep.alpha_per_index[0] == 1, lambda: f"{tag} {R}->{Rp}: first gain")
            q = Rp[-1]
            bq = sum(B.binom(n - q, k - (q - k1)) for k in P.ks[s:])
            beta.expect(rep.delta == bq, lambda: f"{tag} {R}->{Rp}: delta {rep.delta} vs {bq}")
            if P.is_mixed:
                beta.expect(B.beta_closed_form(q, P, regime) == bq, lambda: f"{tag} q={q}")
            by_q.setdefault(q, set()).add(rep.delta)
            steps.append((Rp, tail_decompose(Rp, n)[1], rep.gamma, rep.delta))

        floor = sum(1 for k in P.ks[s:] if n == k1 + k)
        qs = sorted(by_q)
        for q in qs:
            mono.expect(len(by_q[q]) == 1, lambda: f"{tag} q={q}: losses {by_q[q]}")
        seqd = [min(by_q[q]) for q in qs]
        for q, d in zip(qs, seqd):
            mono.expect(d >= floor, lambda: f"{tag} q={q}: {d} below floor {floor}")
        if floor == t - s:
            for q, d in zip(qs, seqd):
                mono.expect(d == t - s, lambda: f"{tag} q={q}: not constant {t - s}")
        for (q1, d1), (q2, d2) in zip(zip(qs, seqd), zip(qs[1:], seqd[1:])):
            if d1 > floor:
                mono.expect(d2 < d1, lambda: f"{tag} q={q1}->{q2}: {d1}->{d2}")
            else:
                mono.expect(d2 == floor, lambda: f"{tag} q={q2}: left floor")

        for (F, lf, gf, df), (G, lg, gg, dg) in combinations(steps, 2):
            if F[-1] != G[-1]:
                continue
            trans.expect(df == dg, lambda: f"{tag} {F} vs {G}: losses {df},{dg}")
            if lf == lg:
                trans.expect(gf == gg, lambda: f"{tag} {F} vs {G}: gains {gf},{gg}")
            elif lf < lg:
                trans.expect(gf <= gg, lambda: f"{tag} {F} vs {G}: gains {gf},{gg}")
            else:
                trans.expect(gg <= gf, lambda: f"{tag} {G} vs {F}: gains {gg},{gf}")

        groups: Dict[Tuple[int, int, int], set] = {}
        for x in range(N):
            for y in range(x + 1, N):
                X, Y = window[x], window[y]
                for d in range(1, k1 + 1):
                    if is_c_sequential(X, Y, d):
                        groups.setdefault((d, X[-1], Y[-1]), set()).add(gd(x, y))
        for key, vals in groups.items():
            seq.expect(len(vals) == 1, lambda: f"{tag} d,maxes={key}: {sorted(vals)}")

        if with_lemma:
            pos = {R: i for i, R in enumerate(window)}
            for A1 in window:
                hd, _ = tail_decompose(A1, n)
                if len(hd) < 2 or hd[-1] != hd[-2] + 1:
                    continue
                Ab, a = hd[:-2], hd[-2]
                lb = k1 - len(Ab) - 1
                run = interval(n - lb + 1, n)
                B1, C1 = Ab + (a,) + run, Ab + (a + 1,) + run
                if tail_decompose(B1, n)[1] != lb or B1 not in pos or C1 not in pos:
                    continue
                xa, xb, xc = pos[A1], pos[B1], pos[C1]
                lem.expect(xa < xb < xc, lambda: f"{tag} order {A1},{B1},{C1}")
                g1, d1 = gd(xa, xb)
                g2, d2 = gd(xb, xc)
                lem.expect(d1 == d2 and g1 <= g2,
                           lambda: f"{tag} {A1},{B1},{C1}: ({g1},{d1}) vs ({g2},{d2})")
    return [eq4, add, alpha, beta, mono, trans, seq, lem]


def check_endpoint_maximality(params_iter) -> CheckResult:
    res = CheckResult("profile maximum only at an endpoint")
    for P in params_iter:
        prof = f_profile(P)
        lam1, lam2 = B.lambda_values(P)
        tag = f"n={P.n} ks={P.ks}"
        res.expect(prof[0] == lam1 and prof[-1] == lam2, lambda: f"{tag}: endpoints {prof[0]},{prof[-1]}")
        if P.is_exceptional:
            res.expect(len(set(prof)) == 1, lambda: f"{tag}: not constant")
            continue
        top = max(prof)
        res.expect(all(v < top for v in prof[1:-1]),
                   lambda: f"{tag}: interior maximum in {prof}")
    return res


# ---------------------------------------------------------------------------
# oracle


def check_mixed_oracle(params_iter) -> List[CheckResult]:
    value = CheckResult("exact maximum equals the mixed bound")
    struct = CheckResult("extremal tuples are star, kernel or exceptional")
    lower = CheckResult("extremal first two IDs are past the star")
    forced = CheckResult("extremal IDs are forced by the first")
    for P in params_iter:
        res = exact_M(P, max_space=None)
        tag = f"n={P.n} ks={P.ks}"
        want = B.mixed_bound(P)
        value.expect(res.value == want, lambda: f"{tag}: {res.value} != {want}")
        n = P.n
        for ids in res.tuples:
            label = classify_extremal(ids, P).label
            if P.is_exceptional:
                struct.expect(label == "exceptional", lambda: f"{tag}: {ids} is {label}")
            else:
                struct.expect(label in ("star", "kernel"), lambda: f"{tag}: {ids} is {label}")
            for i in (0, 1):
                star = (1,) + interval(n - P.ks[i] + 2, n)
                lower.expect(lex_precedes(star, ids[i]), lambda: f"{tag}: {ids}")
            expect = [corresponding_k_set(ids[0], P.ks[1], n)]
            expect += [k_partner(ids[0], k, n) for k in P.ks[2:]]
            forced.expect(list(ids[1:]) == expect, lambda: f"{tag}: {ids} vs {expect}")
    return [value, struct, lower, forced]


def check_nonmixed_oracle(params_iter) -> List[CheckResult]:
    value = CheckResult("exact maximum equals the non-mixed bound")
    equal = CheckResult("equal sizes match the t-family formula")
    for P in params_iter:
        res = exact_M(P, max_space=None)
        tag = f"n={P.n} ks={P.ks}"
        want = B.nonmixed_bound(P)
        value.expect(res.value == want, lambda: f"{tag}: {res.value} != {want}")
        if len(set(P.ks)) == 1:
            e = B.equal_size_bound(P.n, P.ks[0], P.t)
            equal.expect(res.value == e, lambda: f"{tag}: {res.value} != {e}")
    return [value, equal]


def check_fast_path(n_max: int = 9) -> CheckResult:
    """Partner shortcut against the member-level table, for every pair of IDs."""
    res = CheckResult("fast cross-intersection test")
    for n in range(2, n_max + 1):
        for a in range(1, n + 1):
            A_sets = list(ksubsets(n, a))
            for b in range(1, n + 1):
                B_sets = list(ksubsets(n, b))
                if a + b > n:
                    for A in A_sets:
                        for X in B_sets:
                            res.expect(families_cross_intersecting(A, a, X, b, n, fast=True),
                                       lambda: f"n={n} {A},{X}")
                    continue
                cross = pair_table(n, a, b).cross_matrix()
                for ia, A in enumerate(A_sets):
                    for ib, X in enumerate(B_sets):
                        got = families_cross_intersecting(A, a, X, b, n, fast=True)
                        res.expect(got == bool(cross[ia, ib]), lambda: f"n={n} {A},{X}")
    return res


def check_gold_path(n_max: int = 6) -> CheckResult:
    """Member listing against the disjointness table, for every pair of IDs."""
    res = CheckResult("member-level cross-intersection test")
    for n in range(2, n_max + 1):
        for a in range(1, n):
            for b in range(1, n - a + 1):
                cross = pair_table(n, a, b).cross_matrix()
                for ia, A in enumerate(ksubsets(n, a)):
                    for ib, X in enumerate(ksubsets(n, b)):
                        got = families_cross_intersecting(A, a, X, b, n)
                        res.expect(got == bool(cross[ia, ib]), lambda: f"n={n} {A},{X}")
    return res


# ---------------------------------------------------------------------------
# compression


def check_kk(n_values, trials: int, seed: int) -> CheckResult:
    res = CheckResult(f"compression keeps pairs cross-intersecting (seed {seed})")
    for n in n_values:
        rng = random.Random(f"{seed}:{n}")
        for _ in range(trials):
            fa, fb = random_cross_intersecting_pair(rng, n)
            res.expect(kk_compress_check(fa, fb, n),
                       lambda: f"n={n} |A|={len(fa)} |B|={len(fb)} "
                               f"k=({len(fa[0])},{len(fb[0])})")
    return res


# ---------------------------------------------------------------------------
# weighted bound and dominance


def check_weighted_unit(n_max: int = 9, t_max: int = 4) -> CheckResult:
    res = CheckResult("unit-weight bound equals the non-mixed bound")
    for P in nonmixed_params(n_max, tuple(range(2, t_max + 1))):
        got = B.weighted_bound(P, [1] * P.t, 1)
        want = B.nonmixed_bound(P)
        res.expect(got == want, lambda: f"n={P.n} ks={P.ks}: {got} != {want}")
    return res


def check_dominance(n_max: int = 12, t_max: int = 5) -> CheckResult:
    res = CheckResult("first family dominates the one-set values")
    for P in nonmixed_params(n_max, tuple(range(2, t_max + 1))):
        t, kt = P.t, P.ks[-1]
        tag = f"n={P.n} ks={P.ks}"
        for s in range(1, kt + 1):
            vals = [B.f_i_of_s(P, j, s) for j in range(1, t + 1)]
            res.expect(vals[0] == max(vals), lambda: f"{tag} s={s}: {vals}")
        lhs = B.f_i_of_s(P, t, P.ks[-2])
        rhs = max(B.f_i_of_s(P, 1, 1), B.f_i_of_s(P, 1, kt))
        res.expect(lhs <= rhs, lambda: f"{tag}: {lhs} > {rhs}")
    return res


# ---------------------------------------------------------------------------
# named suites


def suite_lex(n_max: int = 9, **_) -> List[CheckResult]:
    return [
        check_lex_totality(min(n_max, 8)),
        check_rank_coherence(min(n_max + 1, 10)),
        check_count_L_bruteforce(min(n_max, 9)),
        check_tail_reassembly(min(n_max + 1, 10)),
        check_k_partner_scan(min(n_max, 9)),
    ]


def suite_partners(n_max: int = 9, **_) -> List[CheckResult]:
    n_max = min(n_max, 9)
    return [
        check_partner_involution(n_max),
        check_k_partner_maximal(n_max),
        check_head_invariance(n_max),
        check_antitone(n_max),
        check_partner_parity_order(n_max),
        check_remaximalize(n_max),
        check_maximality_iff(n_max),
        check_parity_of_maximal_ids(n_max),
        check_star_cap(min(n_max, 8)),
        check_worked_example(),
    ]


def suite_increments(n_max: int = 9, **_) -> List[CheckResult]:
    n_max = min(n_max, 9)
    out = check_increments(regime_params(n_max))
    out.append(check_endpoint_maximality(mixed_params(n_max, kt_min=1)))
    out.append(check_weighted_unit(n_max))
    out.append(check_dominance(max(n_max, 12)))
    return out


def suite_oracle(n_max: int = 9, **_) -> List[CheckResult]:
    n_max = min(n_max, 9)
    out = check_mixed_oracle(mixed_params(n_max, max_space=10**7))
    out += check_nonmixed_oracle(nonmixed_params(n_max, max_space=10**7))
    out.append(check_fast_path(n_max))
    out.append(check_gold_path(min(n_max, 6)))
    return out


def suite_kk(n_max: int = 8, seed: int = 0, trials: int = 10_000, **_) -> List[CheckResult]:
    return [check_kk(range(5, max(n_max, 5) + 1), trials, seed)]


SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    "lex": suite_lex,
    "partners": suite_partners,
    "increments": suite_increments,
    "oracle": suite_oracle,
    "kk": suite_kk,
}


def run_suite(name: str, n_max: int = 9, seed: int = 0, trials: int = 10_000) -> List[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](n_max=n_max, seed=seed, trials=trials)


def summarize(results: List[CheckResult]) -> Tuple[int, int]:
    return sum(r.checks for r in results), sum(r.failures for r in results)


__all__ = [
    "CheckResult", "SUITES", "run_suite", "summarize", "fmt_set",
    "mixed_params", "nonmixed_params", "regime_params",
]
