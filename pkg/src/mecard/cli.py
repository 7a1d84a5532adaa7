"""mecard command line.

    mecard chi --space '{"EM":{"group":[3],"deg":2}}' --n 3
    mecard group-chi --group D4 --p 2
    mecard extrapolate --space '{"BG":"C3"}' --l 2 --N 8
    mecard verify-all

JSON is the canonical output (sorted keys, rationals as "num/den");
``--format csv`` prints the tabular part only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import acceptance, groups
from .arith import format_rational, inverse_binomial_transform, is_prime, parse_rational
from .errors import BudgetExceeded, GroupAxiomError
from .mahler import extrapolate_values
from .resolutions import (
    bar_sequence,
    cech_sequence,
    iterated_bar_sequence,
    resolution_convergence,
    simplicial_group_sequences,
)
from .series import chi_symmetric_genfun, rows_csv, sym_cardinality_series
from .spaces import (
    chi,
    chi_sequence,
    homotopy_cardinality,
    parse_space,
    validate_p_small,
)


class UsageError(Exception):
    pass


def _load_json_arg(text: str):
    """Inline JSON, a path to a UTF-8 JSON file, or a bare preset string."""
    path = Path(text)
    if not text.lstrip().startswith(("{", "[", '"')) and path.is_file():
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _space(args):
    try:
        return parse_space(_load_json_arg(args.space))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed space expression: {exc}") from exc


def _group(spec):
    try:
        return groups.parse_group(_load_json_arg(spec))
    except GroupAxiomError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed group spec: {exc}") from exc


def _check_primes(args, need_l=True, odd_p=False):
    if not is_prime(args.p):
        raise UsageError(f"p = {args.p} is not prime")
    if odd_p and args.p == 2:
        raise UsageError("this command needs an odd prime p")
    if need_l:
        if not is_prime(args.l):
            raise UsageError(f"l = {args.l} is not prime")
        if (args.p - 1) % args.l and not args.allow_any_l:
            raise UsageError(f"l = {args.l} does not divide p - 1 = {args.p - 1} (use --allow-any-l)")


def _vjson(v):
    return "inf" if v == float("inf") else v


def _emit(args, payload: dict, rows=None, header=None):
    if args.format == "csv" and rows is not None:
        lines = [",".join(header)]
        lines += [",".join(str(c) for c in r) for r in rows]
        print("\n".join(lines))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


# commands


def cmd_chi(args) -> int:
    _check_primes(args, need_l=False)
    X = _space(args)
    val = chi(X, args.n, args.p)
    _emit(args, {"n": args.n, "p": args.p, "chi": format_rational(val)}, [(args.n, format_rational(val))], ["n", "chi"])
    return 0


def cmd_sequence(args) -> int:
    _check_primes(args, need_l=False)
    X = _space(args)
    seq = chi_sequence(X, args.p)
    vals = seq.values(args.N + 1)
    xbar = inverse_binomial_transform(vals)
    report = validate_p_small(X, args.p)
    payload = {
        "p": args.p,
        "d": seq.d,
        "lambda": [format_rational(v) for v in vals],
        "mahler": [format_rational(c) for c in xbar],
        "validation": report.to_json(),
    }
    if seq.closed is not None:
        payload["closed_form"] = seq.closed.to_json()
    rows = [(n, format_rational(v), format_rational(c)) for n, (v, c) in enumerate(zip(vals, xbar))]
    _emit(args, payload, rows, ["n", "lambda", "xbar"])
    return 0


def cmd_extrapolate(args) -> int:
    _check_primes(args, odd_p=True)
    X = _space(args)
    seq = chi_sequence(X, args.p, with_closed_form=False)
    target = homotopy_cardinality(X, args.p)
    rep = extrapolate_values(seq.values(args.N + 1), args.l, seq.d, target, seq.slack(args.l))
    payload = {"p": args.p, **rep.to_json()}
    rows = [
        (n, format_rational(s), g, _vjson(v))
        for n, (s, g, v) in enumerate(zip(rep.partials, rep.guaranteed, rep.target_valuations))
    ]
    _emit(args, payload, rows, ["N", "partial_sum", "guaranteed", "valuation"])
    return 0 if rep.passed else 1


def cmd_group_chi(args) -> int:
    _check_primes(args, need_l=False)
    G = _group(args.group)
    mo = max(args.max_order, G.order)
    hkr = groups.hkr_chi(G, args.p, max_order=mo)
    table, ok = [], True
    for n in range(args.N + 1):
        h = hkr(n)
        c = groups.chi_bg(G, args.p, n, max_order=mo)
        row = {"n": n, "hkr": format_rational(h), "chi": c}
        b = groups.brute_force_commuting_tuples(G, args.p, n, args.budget)
        row["brute"] = b
        ok &= b == c
        ok &= h == c
        table.append(row)
    card = groups.p_typical_cardinality(G, args.p, max_order=mo)
    ok &= hkr.extrapolate_minus_one() == card
    payload = {
        "group": G.name,
        "order": G.order,
        "p": args.p,
        "hkr": hkr.to_json(),
        "table": table,
        "p_typical_cardinality": format_rational(card),
        "oracle_agrees": ok,
    }
    rows = [(r["n"], r["hkr"], r["chi"], r["brute"]) for r in table]
    _emit(args, payload, rows, ["n", "hkr", "chi", "brute"])
    return 0 if ok else 1


def cmd_sym(args) -> int:
    _check_primes(args, need_l=False)
    s = chi_symmetric_genfun(args.p, args.n, args.M)
    return _emit_series(args, s, {"p": args.p, "n": args.n, "M": args.M})


def cmd_sym_card(args) -> int:
    _check_primes(args, need_l=False)
    s = sym_cardinality_series(args.p, args.M)
    return _emit_series(args, s, {"p": args.p, "M": args.M})


def _emit_series(args, s, meta) -> int:
    if args.format == "csv":
        print(rows_csv(s.to_rows()))
    else:
        print(json.dumps({**meta, "coefficients": [format_rational(c) for c in s.coeffs]}, sort_keys=True, indent=2))
    return 0


def _resolution_sequences(args):
    if args.kind == "bar":
        return [bar_sequence(args.g)]
    if args.kind == "cech":
        return [cech_sequence(parse_rational(args.card), args.g)]
    if args.kind == "iterbar":
        return [iterated_bar_sequence(args.g, args.d)]
    if not args.moore:
        raise UsageError("--moore is required for simpgroup/wbar")
    sizes = [int(s) for s in args.moore.split(",")]
    res = simplicial_group_sequences(sizes)
    return [res.bar] if args.kind == "simpgroup" else [res.wbar]


def cmd_resolve(args) -> int:
    if not is_prime(args.l):
        raise UsageError(f"l = {args.l} is not prime")
    reports = [resolution_convergence(s, args.l, args.N, args.burn_in) for s in _resolution_sequences(args)]
    if args.format == "csv":
        print("\n\n".join(r.to_csv() for r in reports))
    else:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2))
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify_all(args) -> int:
    print(f"seed {args.seed}", file=sys.stderr)
    only = [int(c) for c in args.only.split(",")] if args.only else None
    results = acceptance.run_all(args.seed, only)
    if args.format == "json":
        out = {"seed": args.seed, "criteria": [r.to_json(timings=args.timings) for r in results]}
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        for r in results:
            print(r.line if args.timings else f"[{'PASS' if r.passed else 'FAIL'}] {r.number}. {r.name}")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"first failure: {failed[0].line}", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="prime (default 3)")
    common.add_argument("--l", type=int, default=2, help="auxiliary prime l dividing p-1 (default 2)")
    common.add_argument("--N", type=int, default=12, help="largest index (default 12)")
    common.add_argument("--budget", type=int, default=None, help="enumeration cap (env CC_BUDGET)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--allow-any-l", action="store_true", help="skip the l | p-1 check")
    common.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="mecard", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="chi(X, n)")
    p.add_argument("--space", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("sequence", parents=[common], help="lambda_X(0..N) and its Mahler coefficients")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("extrapolate", parents=[common], help="continuity certificate and value at -1")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_extrapolate)

    p = sub.add_parser("group-chi", parents=[common], help="HKR expolynomial and chi_n(BG) table")
    p.add_argument("--group", required=True)
    p.add_argument("--max-order", type=int, default=groups.MAX_ORDER)
    p.set_defaults(func=cmd_group_chi, N=6)

    p = sub.add_parser("sym", parents=[common], help="generating function of chi_n(B Sigma_m)")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--M", type=int, default=12)
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("sym-card", parents=[common], help="series of |B Sigma_m|_p")
    p.add_argument("--M", type=int, default=12)
    p.set_defaults(func=cmd_sym_card)

    p = sub.add_parser("resolve", parents=[common], help="skeleton table and convergence report")
    p.add_argument("--kind", choices=("bar", "cech", "iterbar", "simpgroup", "wbar"), required=True)
    p.add_argument("--g", type=int, default=3, help="group order")
    p.add_argument("--d", type=int, default=2, help="iteration depth for iterbar")
    p.add_argument("--card", default="1", help="|X| for cech")
    p.add_argument("--moore", default=None, help="Moore complex orders, e.g. 3,9,3")
    p.add_argument("--burn-in", type=int, default=None)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (not deterministic)")
    p.set_defaults(func=cmd_verify_all, format="text")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("CC_BUDGET")
    if args.budget is None:
        args.budget = groups.default_budget()
    else:
        # library calls read the cap from the environment
        os.environ["CC_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except (UsageError, GroupAxiomError, BudgetExceeded, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if saved is None:
            os.environ.pop("CC_BUDGET", None)
        else:
            os.environ["CC_BUDGET"] = saved


if __name__ == "__main__":
    sys.exit(main())
