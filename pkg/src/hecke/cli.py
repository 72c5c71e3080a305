"""Command-line frontend: count tables, parity lists and the verification suites."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Iterable, Sequence

from . import gf2, oracle, parity, verify, wreath
from .arith import exact_div, is_prime
from .census import CensusContext

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def emit(columns: Sequence[str], rows: Iterable[Sequence], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
    else:
        for row in rows:
            obj = {c: (v if isinstance(v, bool) or v is None else str(v)) for c, v in zip(columns, row)}
            out.write(json.dumps(obj) + "\n")


def odd_prime(text: str) -> int:
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if q < 3 or not is_prime(q):
        raise argparse.ArgumentTypeError(f"q must be an odd prime, got {q}")
    return q


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _hparams(args) -> wreath.HParams:
    if args.group is not None:
        if args.group == "trivial":
            return wreath.HParams.trivial()
        kind, _, r = args.group.partition(":")
        if kind != "cyclic" or not r.isdigit() or int(r) < 1:
            raise UsageError(f"--group must be 'trivial' or 'cyclic:<r>', got {args.group!r}")
        return wreath.HParams.cyclic(int(r), args.q)
    try:
        h, a, b = (int(x) for x in (args.h, args.a, args.b))
        return wreath.HParams(h, a, b)
    except (TypeError, ValueError) as e:
        raise UsageError(f"give --h --a --b as positive integers or use --group ({e})")


def _h_even(args) -> bool:
    if args.h in ("even", "odd"):
        return args.h == "even"
    if args.h is not None and args.h.isdigit() and int(args.h) > 0:
        return int(args.h) % 2 == 0
    raise UsageError("--h must be 'even', 'odd' or a positive integer")


# census


def cmd_census(args) -> int:
    ctx = CensusContext(args.q)
    if args.what in ("sq", "mq", "nq", "fq"):
        table = ctx.table(args.what, args.n_max)
        emit(("q", "n", "count"), ((args.q, n, c) for n, c in table.rows), args.format)
    elif args.what == "type":
        rows = []
        n = args.n
        for m2 in range(n // args.q + 1):
            for m1 in range(n // 2 + 1):
                c = ctx.s_type(n, m1, m2)
                if c:
                    t = oracle.RepType(m1, m2, n).subgroup_type(args.q)
                    rows.append((args.q, n, m1, m2, t.lam, t.mu, t.nu, c))
        emit(("q", "n", "m1", "m2", "lambda", "mu", "nu", "count"), rows, args.format)
    else:
        rows = []
        for k in range(1, args.k_max + 1):
            core = ctx.M_core(k, k - 1)
            rows.append((args.q, k, core, ctx.M_tree(k), exact_div(core, math.factorial(k - 1)) % 2))
        emit(("q", "k", "m_core", "m_tree", "parity"), rows, args.format)
    return EXIT_OK


# oracle


def cmd_oracle(args) -> int:
    if args.what == "types":
        cen = oracle.enumerate_types(args.q, args.n, workers=args.workers)
        rows = [(args.q, args.n, t.lam, t.mu, t.nu, c) for t, c in sorted(cen.counts.items())]
        emit(("q", "n", "lambda", "mu", "nu", "count"), rows, args.format)
    else:
        rows = []
        for n in range(1, args.n_max + 1):
            cen = oracle.enumerate_types(args.q, n, workers=args.workers)
            rows.append(
                (
                    args.q,
                    n,
                    cen.total(),
                    cen.filtered(lambda t: t.mu == 0),
                    cen.filtered(lambda t: t.lam == 0 and t.nu == 0),
                    cen.filtered(lambda t: t.lam == 0 and t.mu == 0),
                )
            )
        emit(("q", "n", "s", "m", "n_free", "f"), rows, args.format)
    return EXIT_OK


# wreath


def cmd_wreath(args) -> int:
    H = _hparams(args)
    cols_h = (H.h, H.a, H.b)
    if args.what == "sgen":
        ctx = wreath.WreathContext(args.q, H)
        rows = [(args.q, *cols_h, n, ctx.s_general(n)) for n in range(1, args.n_max + 1)]
        emit(("q", "h", "a", "b", "n", "count"), rows, args.format)
    elif args.what == "s3rec":
        if args.q != 3:
            raise UsageError("s3rec is the q = 3 recurrence")
        vals = wreath.s3H_rec_list(H, args.n_max)
        emit(("q", "h", "a", "b", "n", "count"), ((3, *cols_h, n, v) for n, v in enumerate(vals, 1)), args.format)
    else:
        order = args.order
        if args.kind == "S":
            ser = wreath.S_series(args.q, H, order)
        elif args.kind == "H":
            ser = wreath.H_series(args.q, H, order)
        else:
            ser = wreath.F_series(args.k, args.q, H, order)
        rows = [(args.q, *cols_h, args.kind, i, c) for i, c in enumerate(ser.coeffs)]
        emit(("q", "h", "a", "b", "series", "power", "coeff"), rows, args.format)
    return EXIT_OK


# gf2


def cmd_gf2(args) -> int:
    H = _hparams(args)
    D = gf2.build_delta(args.q, H)
    if args.what == "det":
        det = gf2.det_gf2(D)
        exp = gf2.expected_det(args.q, H.h_even)
        emit(
            ("q", "h", "det", "expected", "match"),
            [(args.q, H.h, gf2.poly_str(det), gf2.poly_str(exp), det == exp)],
            args.format,
        )
    else:
        rows = []
        for k in range(args.q - 1):
            got = gf2.minor_gf2(D, k, 0)
            exp = gf2.expected_minor(args.q, k, H.h_even)
            rows.append((args.q, H.h, k, gf2.poly_str(got), gf2.poly_str(exp), got == exp))
        emit(("q", "h", "kappa", "minor", "expected", "match"), rows, args.format)
    return EXIT_OK


# parity


def cmd_parity(args) -> int:
    q = args.q
    rows = []
    if args.what in ("sq", "nq"):
        fn = parity.sq_parity if args.what == "sq" else parity.Nq_parity
        for n in range(1, args.n_max + 1):
            v = fn(q, n)
            if v.odd or not args.odd_only:
                rows.append((q, n, int(v.odd), v.eta))
        emit(("q", "n", "parity", "eta"), rows, args.format)
    elif args.what == "lifted":
        h_even = _h_even(args)
        for n in range(1, args.n_max + 1):
            v = parity.lift_parity(q, args.m, n, h_even)
            if v.odd or not args.odd_only:
                comps = " ".join(f"{d}:{eta}" for d, eta in v.components)
                rows.append((q, args.m, n, int(v.odd), comps))
        emit(("q", "m", "n", "parity", "components"), rows, args.format)
    elif args.what == "fermat":
        h_even = _h_even(args)
        start = args.n_min if args.n_min is not None else parity.fermat_threshold(q, args.m)
        for n in range(start, args.n_max + 1):
            v = parity.fermat_bed(q, args.m, n, h_even)
            if v.odd or not args.odd_only:
                rows.append((q, args.m, n, int(v.odd), v.d, v.sigma))
        emit(("q", "m", "n", "parity", "t", "sigma"), rows, args.format)
    else:
        for p in range(3, args.p_max + 1):
            if is_prime(p) and (2 * q * (q - 1)) % p:
                holds = parity.cond_Cq(q, p)
                if holds or not args.odd_only:
                    rows.append((q, p, holds))
        emit(("q", "p", "condition"), rows, args.format)
    return EXIT_OK


# verify


def cmd_verify(args) -> int:
    results = verify.run_checks(args.module, args.level)
    emit(
        ("module", "check", "ok", "detail"),
        ((r.module, r.name, r.ok, r.detail) for r in results),
        args.format,
    )
    failed = [r for r in results if not r.ok]
    for r in failed:
        print(f"FAIL {r.module}.{r.name}: {r.detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke", description="Subgroup counts and parities for Hecke groups C2*Cq.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    qarg = argparse.ArgumentParser(add_help=False)
    qarg.add_argument("--q", type=odd_prime, default=3)

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--h")
    group.add_argument("--a")
    group.add_argument("--b")
    group.add_argument("--group", help="'trivial' or 'cyclic:<r>'")

    c = sub.add_parser("census", parents=[common, qarg], help="closed-form subgroup counts")
    c.add_argument("what", choices=("sq", "mq", "nq", "fq", "type", "tree"))
    c.add_argument("--n-max", type=positive, default=10)
    c.add_argument("--n", type=positive, default=6)
    c.add_argument("--k-max", type=positive, default=6)
    c.set_defaults(func=cmd_census)

    o = sub.add_parser("oracle", parents=[common, qarg], help="brute-force coset-diagram enumeration")
    o.add_argument("what", choices=("types", "counts"))
    o.add_argument("--n", type=positive, default=6)
    o.add_argument("--n-max", type=positive, default=8)
    o.add_argument("--workers", type=positive, default=1)
    o.set_defaults(func=cmd_oracle)

    w = sub.add_parser("wreath", parents=[common, qarg, group], help="generalized subgroup numbers and series")
    w.add_argument("what", choices=("sgen", "s3rec", "series"))
    w.add_argument("--n-max", type=positive, default=10)
    w.add_argument("--order", type=int, default=12)
    w.add_argument("--kind", choices=("S", "H", "F"), default="S")
    w.add_argument("--k", type=int, default=0)
    w.set_defaults(func=cmd_wreath)

    g = sub.add_parser("gf2", parents=[common, qarg, group], help="Delta_q determinant and minors mod 2")
    g.add_argument("what", choices=("det", "minors"))
    g.set_defaults(func=cmd_gf2)

    pa = sub.add_parser("parity", parents=[common, qarg, group], help="parity predicates")
    pa.add_argument("what", choices=("sq", "nq", "lifted", "fermat", "cq"))
    pa.add_argument("--n-max", type=positive, default=30)
    pa.add_argument("--n-min", type=positive)
    pa.add_argument("--m", type=positive, default=1)
    pa.add_argument("--p-max", type=positive, default=200)
    pa.add_argument("--odd-only", action="store_true", help="keep odd rows only (for cq: rows where the condition holds)")
    pa.set_defaults(func=cmd_parity)

    v = sub.add_parser("verify", parents=[common], help="run the cross-check suites")
    v.add_argument("module", choices=("all", *verify.CHECKS))
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"hecke: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.BudgetExceeded as e:
        print(f"hecke: error: {e} (raise HECKE_BUDGET to allow it)", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"hecke: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
