"""Named cross-checks between independent routes, at two range levels.

``quick`` keeps indices at 8 and series orders at 12. ``full`` uses the
ranges the statements were originally checked on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import arith, gf2, oracle, parity, wreath
from .census import CensusContext
from .series import SeriesQ

SAMPLE_H = (wreath.HParams(1, 1, 1), wreath.HParams(2, 2, 1), wreath.HParams(6, 4, 3))


@dataclass
class CheckResult:
    name: str
    module: str
    ok: bool
    detail: str = ""


def _limits(level: str) -> dict:
    if level == "quick":
        return dict(n=8, order=12, order_long=12, k=4, n_parity=8, n_big=60, p_max=2000, a_max=128)
    if level == "full":
        return dict(n=10, order=20, order_long=30, k=6, n_parity=30, n_big=10**4, p_max=10**4, a_max=512)
    raise ValueError(f"unknown level {level!r}")


def _first_failure(items) -> str:
    for item in items:
        return f"first failure at {item}"
    return ""


# arith


def check_ochiai(L) -> CheckResult:
    bad = [n for n in range(1, 201) if arith.v2_involutions(n) != arith.v2(arith.involutions(n))]
    return CheckResult("ochiai", "arith", not bad, _first_failure(bad))


def check_kummer_lucas(L) -> CheckResult:
    bad = []
    for a in range(L["a_max"] + 1):
        for b in range(a + 1):
            c = math.comb(a, b)
            if arith.binom_mod2(a, b) != c % 2 or arith.v2_binomial(a, b) != arith.v2(c):
                bad.append((a, b))
    return CheckResult("kummer_lucas", "arith", not bad, _first_failure(bad))


def check_involution_recurrence(L) -> CheckResult:
    bad = [n for n in range(1, 200) if arith.involutions(n + 1) != arith.involutions(n) + n * arith.involutions(n - 1)]
    return CheckResult("involution_recurrence", "arith", not bad, _first_failure(bad))


# oracle and census


def check_oracle_census(L) -> CheckResult:
    bad = []
    for q in (3, 5):
        ctx = CensusContext(q)
        for n in range(1, L["n"] + 1):
            cen = oracle.enumerate_types(q, n)
            calc = {}
            for m2 in range(n // q + 1):
                for m1 in range(n // 2 + 1):
                    v = ctx.s_type(n, m1, m2)
                    if v:
                        calc[oracle.RepType(m1, m2, n).subgroup_type(q)] = v
            if calc != cen.counts or ctx.s_total(n) != cen.total():
                bad.append((q, n))
            elif ctx.N_count(n) != cen.filtered(lambda t: t.lam == 0 and t.nu == 0):
                bad.append((q, n, "N"))
            elif ctx.f_count(n) != cen.filtered(lambda t: t.lam == 0 and t.mu == 0):
                bad.append((q, n, "f"))
            elif ctx.M_count(n) != cen.filtered(lambda t: t.mu == 0):
                bad.append((q, n, "M"))
    return CheckResult("oracle_vs_census", "oracle", not bad, _first_failure(bad))


def check_tree(L) -> CheckResult:
    bad = [
        (q, k)
        for q in (3, 5, 7)
        for k in range(1, L["k"] + 1)
        if CensusContext(q).M_core(k, k - 1) != CensusContext(q).M_tree(k)
    ]
    return CheckResult("tree_identity", "census", not bad, _first_failure(bad))


def stothers_failures(k_max: int) -> list:
    ctx = CensusContext(3)
    f = math.factorial
    bad = []
    for k in range(1, k_max + 1):
        if Fraction(ctx.M_core(k, k - 1), f(k - 1)) != Fraction(3**k * f(2 * k), f(k - 1) * f(k + 2)):
            bad.append(("k,k-1", k))
        if Fraction(ctx.M_core(k, k), f(k - 1)) != 4 ** (k - 1) * 3**k:
            bad.append(("k,k", k))
        for e in range(k + 1, (3 * k + 1) // 2):
            if 2 * e >= 3 * k:
                continue
            prod = 1
            for l in range(3 * k - 2 * e - 1):
                prod *= 3 * k - e - 2 * l - 2
            rhs = Fraction(2 ** (3 * k - 2 * e - 1) * 3**k * k * prod, f(3 * k - 2 * e)) * ctx.f_count(6 * (e - k))
            if Fraction(ctx.M_core(k, e), f(k - 1)) != rhs:
                bad.append(("general", k, e))
    for l in range(1, k_max // 2 + 1):
        if Fraction(ctx.M_core(2 * l, 3 * l), f(2 * l - 1)) != 3 ** (2 * l - 1) * ctx.f_count(6 * l):
            bad.append(("2l,3l", l))
    return bad


def check_stothers(L) -> CheckResult:
    bad = stothers_failures(L["k"])
    return CheckResult("stothers", "census", not bad, _first_failure(bad))


def check_mq_even(L) -> CheckResult:
    kmax = 8 if L["k"] == 6 else 4
    bad = [(q, k) for q in (3, 5, 7) for k in range(1, kmax + 1) if CensusContext(q).M_total(k) % 2]
    ctx = {q: CensusContext(q) for q in (3, 5)}
    bad += [(q, n, "q∤n") for q in (3, 5) for n in range(1, L["n_parity"] + 1) if n % q and ctx[q].M_count(n)]
    return CheckResult("M_even", "census", not bad, _first_failure(bad))


def v2_bound_failures(kmax: int) -> list:
    bad = []
    for q in (5, 7):
        ctx = CensusContext(q)
        for k in range(1, kmax + 1):
            lhs = arith.v2(ctx.M_total(k))
            rhs = Fraction(q * k - 1, 4) - arith.v2_factorial(k - 1) - (k.bit_length() - 1)
            if lhs < rhs:
                bad.append((q, k))
    return bad


def check_v2_bound(L) -> CheckResult:
    bad = v2_bound_failures(5 if L["k"] == 6 else 3)
    return CheckResult("v2_bound", "census", not bad, _first_failure(bad))


def free_identity_failures(max_index: int) -> list:
    """M_general at the free type against q^(m2-1) (m2-1)! f_q(n), n = q m2 even."""
    bad = []
    for q in (3, 5):
        ctx = CensusContext(q)
        for n in range(2 * q, max_index + 1, 2 * q):
            m2 = n // q
            if ctx.M_general(n, n // 2, m2) != q ** (m2 - 1) * math.factorial(m2 - 1) * ctx.f_count(n):
                bad.append((q, n))
    return bad


def check_free(L) -> CheckResult:
    bad = free_identity_failures(18)
    return CheckResult("free_identity", "census", not bad, _first_failure(bad))


# wreath


def check_s3_recurrence(L) -> CheckResult:
    n_max = 30 if L["n"] == 10 else 15
    bad = []
    for H in SAMPLE_H:
        ctx = wreath.WreathContext(3, H)
        rec = wreath.s3H_rec_list(H, n_max)
        bad += [(H, n) for n in range(1, n_max + 1) if ctx.s_general(n) != rec[n - 1]]
    return CheckResult("s3_recurrence", "wreath", not bad, _first_failure(bad))


def check_sgen_vs_census(L) -> CheckResult:
    n_max = 20 if L["n"] == 10 else 10
    bad = []
    for q in (3, 5):
        ctx = wreath.WreathContext(q, wreath.HParams.trivial())
        cc = CensusContext(q)
        bad += [(q, n) for n in range(1, n_max + 1) if ctx.s_general(n) != cc.s_total(n)]
        for n in range(1, L["n"] + 1):
            for H in SAMPLE_H:
                w = wreath.WreathContext(q, H).s_general(n)
                if w != oracle.oracle_sH(q, n, H):
                    bad.append((q, n, H))
    return CheckResult("sgen_vs_census", "wreath", not bad, _first_failure(bad))


def reduction_holds(q: int, H: wreath.HParams, k: int, order: int, ctx) -> bool:
    h = H.h
    extra = order + q + 4
    F0 = wreath.F_series(0, q, H, extra, ctx)
    F1 = wreath.F_series(1, q, H, extra, ctx)
    tot = SeriesQ.zero(order)
    for mu in range(k // 2 + 1):
        tot = tot + (F0.derivative(mu).shift(k + mu) * (wreath.coeff_c(k, mu, H) * h**mu)).truncate(order)
    if k >= 1:
        for nu in range((k - 1) // 2 + 1):
            tot = tot + (F1.derivative(nu).shift(k + nu - 1) * (wreath.coeff_d(k, nu, H) * h**nu)).truncate(order)
    return tot.agrees(wreath.F_series(k, q, H, order, ctx), order)


def relation_failures(q: int, H: wreath.HParams, order: int, ctx) -> list:
    h, a, b = H.h, H.a, H.b
    F = lambda k: wreath.F_series(k, q, H, order + 2, ctx)  # noqa: E731
    bad = []
    for k in range(0, 7):
        rhs = (F(k).shift(1) * a + F(k - 1).shift(2) * h + F(k - 1).derivative().shift(3) * h).truncate(order)
        if not F(k + 1).agrees(rhs, order):
            bad.append(("I", k))
    for k in range(0, 4):
        lhs = (F(k - 1).derivative().shift(1) * h).truncate(order)
        rhs = (F(k - 1) * (h * (k - 1)) + F(k) * b + F(k + q - 1)).truncate(order)
        if not lhs.agrees(rhs, order):
            bad.append(("II", k))
    return bad


def check_series_identities(L) -> CheckResult:
    N = L["order"]
    bad = []
    for q in (3, 5):
        for H in SAMPLE_H:
            ctx = wreath.WreathContext(q, H)
            bad += [("reduction", q, H, k) for k in range(q + 1) if not reduction_holds(q, H, k, N, ctx)]
            bad += [(q, H) + f for f in relation_failures(q, H, N, ctx)]
            S = wreath.S_series(q, H, N, ctx)
            Hser = wreath.H_series(q, H, N + 1, ctx)
            if not S.integral().scale(Fraction(1, H.h)).exp().agrees(Hser, N + 1):
                bad.append(("exp", q, H))
            for nu in range(5):
                lg = wreath.logderiv(Hser, nu, H.h)
                if not lg.agrees(wreath.faa_di_bruno(S, nu, H.h)):
                    bad.append(("faa", q, H, nu))
                if H.h_even and lg.mod2() != gf2.poly_trunc(gf2.poly_pow(S.mod2(), nu), lg.order):
                    bad.append(("collapse", q, H, nu))
    return CheckResult("series_identities", "wreath", not bad, _first_failure(bad))


def mod2_equation_failures(order: int) -> list:
    bad = []
    for q in (3, 5):
        for H in SAMPLE_H:
            if not H.h_even:
                continue
            S = wreath.S_series(q, H, order).mod2()
            lhs = 0b10 ^ S ^ gf2.poly_trunc(gf2.poly_pow(S, q - 1) << (3 * q - 2), order)
            if lhs:
                bad.append(("functional", q, H))
            for n in range(1, order + 2):
                if (S >> wreath.power_of_index(n)) & 1 != wreath.shat_mod2_coeff(q, n):
                    bad.append(("coeff", q, H, n))
    return bad


def check_mod2_equation(L) -> CheckResult:
    bad = mod2_equation_failures(L["order_long"])
    return CheckResult("mod2_equation", "wreath", not bad, _first_failure(bad))


def coeff_mod2_failures(k_max: int) -> list:
    bad = []
    for H in (wreath.HParams(2, 2, 1), wreath.HParams(6, 4, 3), wreath.HParams(1, 1, 1), wreath.HParams(3, 1, 3)):
        for k in range(k_max + 1):
            for mu in range(k // 2 + 1):
                if wreath.coeff_c(k, mu, H) % 2 != wreath.coeff_c_mod2(k, mu, H.h_even):
                    bad.append(("c", H, k, mu))
            for nu in range((k - 1) // 2 + 1) if k >= 1 else ():
                if wreath.coeff_d(k, nu, H) % 2 != wreath.coeff_d_mod2(k, nu, H.h_even):
                    bad.append(("d", H, k, nu))
    return bad


def check_coeff_mod2(L) -> CheckResult:
    bad = coeff_mod2_failures(24 if L["n"] == 10 else 12)
    return CheckResult("coeff_mod2", "wreath", not bad, _first_failure(bad))


def check_fuss_catalan(L) -> CheckResult:
    bad = []
    for q in (3, 5, 7):
        for eta in range(201):
            m = (q - 1) * eta + 1
            if math.comb(m, eta) % m:
                bad.append((q, eta))
    return CheckResult("fuss_catalan", "wreath", not bad, _first_failure(bad))


# gf2


def even_det_failures() -> list:
    bad = []
    for q in (3, 5, 7, 11, 13):
        for H in (wreath.HParams(2, 2, 1), wreath.HParams(6, 4, 3)):
            D = gf2.build_delta(q, H)
            if D != gf2.delta_mod2_even(q):
                bad.append(("table_even", q, H))
            if gf2.det_gf2(D) != gf2.expected_det(q, True) or gf2.minor_gf2(D, 0, 0) != gf2.expected_det(q, True):
                bad.append(("det_even", q, H))
            bad += [("minor_even", q, H, k) for k in range(1, q - 1) if gf2.minor_gf2(D, k, 0)]
    return bad


def odd_det_failures() -> list:
    bad = []
    for q in (3, 5, 7, 11, 13):
        for H in (wreath.HParams(1, 1, 1), wreath.HParams(3, 1, 3)):
            D = gf2.build_delta(q, H)
            if D != gf2.delta_mod2_odd(q):
                bad.append(("table_odd", q, H))
            if gf2.det_gf2(D) != gf2.expected_det(q, False):
                bad.append(("det_odd", q, H))
    return bad


def odd_minor_failures() -> list:
    bad = []
    for q in (3, 5, 7, 11, 13):
        for H in (wreath.HParams(1, 1, 1), wreath.HParams(3, 1, 3)):
            D = gf2.build_delta(q, H)
            for k in range(q - 1):
                got = gf2.minor_gf2(D, k, 0)
                if got != gf2.expected_minor(q, k, False):
                    bad.append((q, H.h, k, gf2.poly_str(got), gf2.poly_str(gf2.expected_minor(q, k, False))))
    return bad


def check_det_even(L) -> CheckResult:
    bad = even_det_failures()
    return CheckResult("det_even", "gf2", not bad, _first_failure(bad))


def check_det_odd(L) -> CheckResult:
    bad = odd_det_failures()
    return CheckResult("det_odd", "gf2", not bad, _first_failure(bad))


def check_minors_odd(L) -> CheckResult:
    bad = odd_minor_failures()
    detail = "; ".join(f"q={q} h={h} kappa={k}: got {g}, stated {e}" for q, h, k, g, e in bad[:4])
    return CheckResult("minors_odd", "gf2", not bad, detail)


# parity


def check_sq_parity(L) -> CheckResult:
    bad = []
    for q in (3, 5):
        ctx = CensusContext(q)
        for n in range(1, L["n_parity"] + 1):
            if parity.sq_parity(q, n).odd != bool(ctx.s_total(n) % 2):
                bad.append(("s", q, n))
            if parity.Nq_parity(q, n).odd != bool(ctx.N_count(n) % 2):
                bad.append(("N", q, n))
        for n in range(1, 61):
            if parity.Nq_parity(q, n).odd != bool(wreath.shat_mod2_coeff(q, n)):
                bad.append(("shat", q, n))
    return CheckResult("sq_nq_parity", "parity", not bad, _first_failure(bad))


def check_fermat_forms(L) -> CheckResult:
    bad = []
    for q in (3, 5, 17):
        for n in range(1, L["n_big"] + 1):
            if parity.sq_parity(q, n).odd != parity.sq_parity_fermat(q, n).odd:
                bad.append(("s", q, n))
            if parity.Nq_parity(q, n).odd != parity.Nq_parity_fermat(q, n).odd:
                bad.append(("N", q, n))
    return CheckResult("fermat_forms", "parity", not bad, _first_failure(bad))


def check_binom_shift(L) -> CheckResult:
    bad = [
        (lam, k)
        for lam in range(1, 5)
        for k in range(1, L["a_max"] + 1)
        if parity.binom_shift_parity(lam, k) != bool(arith.binom_mod2(2**lam * k + 1, k - 1))
    ]
    return CheckResult("binom_shift", "parity", not bad, _first_failure(bad))


def check_tree_parity(L) -> CheckResult:
    bad = []
    for q in (3, 5):
        ctx = CensusContext(q)
        for k in range(1, 9):
            val = arith.exact_div(ctx.M_core(k, k - 1), math.factorial(k - 1))
            if parity.tree_case_parity(q, k) != bool(val % 2):
                bad.append((q, k))
    return CheckResult("tree_parity", "parity", not bad, _first_failure(bad))


def residue_failures(p_max: int) -> list:
    bad = []
    for q, (mod, residues) in parity.CQ_RESIDUES.items():
        for p in range(3, p_max):
            if p % mod in residues and arith.is_prime(p) and not parity.cond_Cq(q, p):
                bad.append((q, p, p % mod))
    return bad


def check_residues(L) -> CheckResult:
    bad = residue_failures(L["p_max"])
    detail = "; ".join(f"q={q} p={p} (residue {r})" for q, p, r in bad[:4])
    return CheckResult("cq_residues", "parity", not bad, detail)


M625_ODD = (
    1, 2, 13, 26, 29, 58, 61, 65, 122, 125, 130, 145, 250, 253, 290, 305, 325, 506, 509, 610, 625,
    650, 725, 1018, 1021, 1250, 1265, 1450, 1525, 1625, 2042, 2045, 2530, 2545, 3050, 3250, 3625,
    4090, 4093, 5090, 5105,
)
M625_EVEN = (
    2, 26, 58, 122, 130, 250, 290, 506, 610, 650, 1018, 1250, 1450, 2042, 2530, 3050, 3250, 4090,
    5090,
)


def check_m625(L) -> CheckResult:
    bad = []
    for h_even, expected in ((False, M625_ODD), (True, M625_EVEN)):
        got = tuple(n for n in range(1, 6251) if parity.lift_parity(3, 625, n, h_even).odd)
        if got != expected:
            bad.append(("list", h_even))
        top = 20000 if L["n"] == 10 else 8000
        bad += [
            ("bed", h_even, n)
            for n in range(6251, top + 1)
            if parity.fermat_bed(3, 625, n, h_even).odd != parity.lift_parity(3, 625, n, h_even).odd
        ]
    return CheckResult("m625", "parity", not bad, _first_failure(bad))


def check_fermat_threshold(L) -> CheckResult:
    bad = []
    for q in (3, 5):
        for m in range(1, 16 if L["n"] == 10 else 6):
            for h_even in (False, True):
                if h_even and m % 2 == 0:
                    continue
                start = parity.fermat_threshold(q, m)
                for n in range(start, start + 2000):
                    if parity.fermat_bed(q, m, n, h_even).odd != parity.lift_parity(q, m, n, h_even).odd:
                        bad.append((q, m, n, h_even))
    return CheckResult("fermat_threshold", "parity", not bad, _first_failure(bad))


CHECKS: dict[str, list[Callable[[dict], CheckResult]]] = {
    "arith": [check_ochiai, check_kummer_lucas, check_involution_recurrence],
    "oracle": [check_oracle_census],
    "census": [check_tree, check_stothers, check_mq_even, check_v2_bound, check_free],
    "wreath": [
        check_s3_recurrence,
        check_sgen_vs_census,
        check_series_identities,
        check_mod2_equation,
        check_coeff_mod2,
        check_fuss_catalan,
    ],
    "gf2": [check_det_even, check_det_odd, check_minors_odd],
    "parity": [
        check_sq_parity,
        check_fermat_forms,
        check_binom_shift,
        check_tree_parity,
        check_residues,
        check_m625,
        check_fermat_threshold,
    ],
}


def run_checks(module: str = "all", level: str = "quick") -> list[CheckResult]:
    L = _limits(level)
    mods = list(CHECKS) if module == "all" else [module]
    out = []
    for mod in mods:
        if mod not in CHECKS:
            raise ValueError(f"unknown module {mod!r}")
        out.extend(check(L) for check in CHECKS[mod])
    return out
