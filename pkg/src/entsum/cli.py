"""Command-line front end.

Distributions are given either as a path to a JSON file or as an inline JSON
string in the canonical serialization.  Every subcommand can emit a human
summary, a structured JSON object, or a delimited table with the columns
``instance,alpha,lhs,rhs,gap``; report subcommands can additionally render a
figure with ``--plot``.

Exit codes: 0 success, 1 a checked verdict failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from . import acceptance
from .applications import (
    LinearForm,
    cauchy_davenport_check,
    count_solutions,
    discrete_epi_check,
    doubling_gap,
    doubling_gap_sweep,
    kanter_G,
    kanter_small_ball_check,
    lo_entropy_bound,
    small_ball,
)
from .convolve import convolve_many
from .core import (
    Domain,
    Pmf,
    mass_to_obj,
    pmf_from_json,
)
from .decompose import decompose
from .entropy import Alpha, renyi, to_bits
from .errors import Error, ParseError
from .extremal import extremal_distribution_fast, verify_main_inequality
from .oracle import brute_extremal_check, brute_small_ball, min_entropy_over_permutations
from .rearrange import Sign, rearrange

CSV_COLUMNS = ("instance", "alpha", "lhs", "rhs", "gap")


# ----------------------------------------------------------------- input ---


def _load_pmf(spec: str) -> Pmf:
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            with open(spec, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read {spec!r}: {exc}") from exc
    return pmf_from_json(text)


def _parse_alphas(text: str) -> list[Alpha]:
    try:
        return [Alpha.of(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad order list {text!r}: {exc}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}: {exc}") from exc


def _parse_domain(args) -> Domain:
    if getattr(args, "p", None) is not None:
        return Domain.cyclic(args.p)
    return Domain.integers()


# ---------------------------------------------------------------- output ---


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return repr(x)
    return "" if x is None else str(x)


def _emit(args, rows, human_lines, json_obj) -> None:
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(row.get(col)) for col in CSV_COLUMNS])
    elif args.format == "json":
        print(json.dumps(json_obj, indent=2, default=_fmt))
    else:
        for line in human_lines:
            print(line)


def _entropy_value(args, nats: float) -> float:
    return to_bits(nats) if getattr(args, "bits", False) else nats


def _unit(args) -> str:
    return "bits" if getattr(args, "bits", False) else "nats"


def _pmf_lines(label: str, f) -> list[str]:
    return [f"{label}: {json.dumps(mass_to_obj(f), separators=(',', ':'))}"]


# ------------------------------------------------------------ subcommands ---


def _cmd_entropy(args) -> int:
    f = _load_pmf(args.pmf)
    alphas = _parse_alphas(args.alpha)
    rows = []
    lines = []
    for a in alphas:
        value = _entropy_value(args, renyi(f, a))
        rows.append({"instance": 0, "alpha": str(a), "lhs": value, "rhs": None, "gap": None})
        lines.append(f"H_{a} = {value:.12g} {_unit(args)}")
    _emit(args, rows, lines, {"pmf": mass_to_obj(f), "entropies": {str(a): r["lhs"] for a, r in zip(alphas, rows)}})
    return 0


def _cmd_rearrange(args) -> int:
    f = _load_pmf(args.pmf)
    sign = {"plus": Sign.PLUS, "minus": Sign.MINUS, "star": Sign.STAR}[args.sign]
    out = rearrange(f, sign)
    rows = [
        {"instance": i, "alpha": None, "lhs": v, "rhs": None, "gap": None}
        for i, v in out.items()
    ]
    _emit(args, rows, _pmf_lines("rearranged", out), {"rearranged": mass_to_obj(out)})
    return 0


def _cmd_decompose(args) -> int:
    f = _load_pmf(args.pmf)
    d = decompose(f)
    rows = []
    for name, part in (("triangle", d.triangle), ("square", d.square)):
        for i, v in part.items():
            rows.append({"instance": i, "alpha": name, "lhs": v, "rhs": None, "gap": None})
    lines = _pmf_lines("triangle", d.triangle) + _pmf_lines("square", d.square)
    _emit(
        args,
        rows,
        lines,
        {"triangle": mass_to_obj(d.triangle), "square": mass_to_obj(d.square)},
    )
    return 0


def _cmd_lowerbound(args) -> int:
    fs = [_load_pmf(spec) for spec in args.pmfs]
    alphas = _parse_alphas(args.alpha)
    report = verify_main_inequality(fs, alphas)
    rows = []
    lines = _pmf_lines("convolution", report.lhs) + _pmf_lines("extremal", report.extremal)
    lines.append("majorized: yes (exact)")
    for a, (lhs, rhs) in report.entropies.items():
        lhs_v, rhs_v = _entropy_value(args, lhs), _entropy_value(args, rhs)
        rows.append(
            {"instance": 0, "alpha": str(a), "lhs": lhs_v, "rhs": rhs_v, "gap": lhs_v - rhs_v}
        )
        lines.append(
            f"alpha={a}: H(convolution)={lhs_v:.12g} >= H(extremal)={rhs_v:.12g} "
            f"(gap {lhs_v - rhs_v:.3e} {_unit(args)})"
        )
    if args.plot:
        from . import plots

        plots.save_bound_report(report, args.plot)
        lines.append(f"figure written to {args.plot}")
    _emit(
        args,
        rows,
        lines,
        {
            "convolution": mass_to_obj(report.lhs),
            "extremal": mass_to_obj(report.extremal),
            "majorized": True,
            "entropies": [
                {"alpha": str(a), "lhs": lhs, "rhs": rhs}
                for a, (lhs, rhs) in report.entropies.items()
            ],
        },
    )
    return 0


def _cmd_lo(args) -> int:
    factors = tuple(_load_pmf(spec) for spec in args.pmfs)
    coeffs = tuple(_parse_int_list(args.coeffs))
    form = LinearForm(coeffs, factors)
    alphas = _parse_alphas(args.alpha)
    rows = []
    lines = []
    ok = True
    for a in alphas:
        out = lo_entropy_bound(form, a)
        ok = ok and out.holds
        lhs = _entropy_value(args, out.weighted_entropy)
        rhs = _entropy_value(args, out.unweighted_entropy)
        rows.append({"instance": 0, "alpha": str(a), "lhs": lhs, "rhs": rhs, "gap": lhs - rhs})
        lines.append(
            f"alpha={a}: H(weighted)={lhs:.12g} >= H(unweighted)={rhs:.12g} "
            f"{'PASS' if out.holds else 'FAIL'}"
        )
    q = small_ball(form)
    lines.append(f"small ball Q = {q} = {float(q):.12g}")
    _emit(
        args,
        rows,
        lines,
        {
            "coefficients": list(coeffs),
            "small_ball": q,
            "bounds": [dict(r) for r in rows],
        },
    )
    return 0 if ok else 1


def _cmd_kanter(args) -> int:
    rows = []
    lines = []
    obj: dict = {}
    status = 0
    if args.qs is not None:
        qs = [Fraction(part) for part in args.qs.split(",") if part.strip()]
        out = kanter_small_ball_check(qs)
        rows.append(
            {
                "instance": 0,
                "alpha": "inf",
                "lhs": float(out.probability),
                "rhs": out.bound,
                "gap": float(out.probability) - out.bound,
            }
        )
        lines.append(
            f"P(sum in {{0,1}}) = {out.probability} = {float(out.probability):.12g} "
            f"<= G({out.argument:.6g}) = {out.bound:.12g} "
            f"{'PASS' if out.holds else 'FAIL'}"
        )
        obj = {
            "qs": [str(q) for q in qs],
            "probability": out.probability,
            "argument": out.argument,
            "bound": out.bound,
            "holds": out.holds,
        }
        status = 0 if out.holds else 1
    elif args.sweep is not None:
        xs = [args.sweep * (k + 1) / args.points for k in range(args.points)]
        gs = [kanter_G(x) for x in xs]
        env = [math.sqrt(2 / (math.pi * x)) for x in xs]
        for k, (x, g, e) in enumerate(zip(xs, gs, env)):
            rows.append({"instance": k, "alpha": repr(x), "lhs": g, "rhs": e, "gap": g - e})
        lines.append(f"G evaluated at {args.points} points in (0, {args.sweep}]")
        lines.append(f"envelope sqrt(2/(pi x)) dominates: {all(g < e for g, e in zip(gs, env))}")
        obj = {"x": xs, "G": gs, "envelope": env}
        if args.plot:
            from . import plots

            plots.save_kanter_sweep(xs, gs, env, args.plot)
            lines.append(f"figure written to {args.plot}")
    else:
        g = kanter_G(args.x)
        rows.append({"instance": 0, "alpha": repr(args.x), "lhs": g, "rhs": None, "gap": None})
        lines.append(f"G({args.x:.6g}) = {g:.15g}")
        obj = {"x": args.x, "G": g}
    _emit(args, rows, lines, obj)
    return status


def _cmd_count(args) -> int:
    domain = _parse_domain(args)
    sets = [_parse_int_list(text) for text in args.set]
    coeffs = _parse_int_list(args.coeffs)
    actual, best = count_solutions(sets, coeffs, domain)
    rows = [{"instance": 0, "alpha": "2", "lhs": actual, "rhs": best, "gap": actual - best}]
    ok = actual <= best
    lines = [
        f"solutions: {actual}",
        f"rearranged maximizer: {best}",
        f"{actual} <= {best} {'PASS' if ok else 'FAIL'}",
    ]
    _emit(args, rows, lines, {"solutions": actual, "maximizer": best, "holds": ok})
    return 0 if ok else 1


def _cmd_cd(args) -> int:
    domain = _parse_domain(args)
    out = cauchy_davenport_check(_parse_int_list(args.a_set), _parse_int_list(args.b_set), domain)
    rows = [
        {
            "instance": 0,
            "alpha": "0",
            "lhs": out.sumset_size,
            "rhs": out.bound,
            "gap": out.sumset_size - out.bound,
        }
    ]
    lines = [
        f"|A+B| = {out.sumset_size} >= {out.bound} {'PASS' if out.holds else 'FAIL'}",
        f"rearranged |A+ + B-| = {out.rearranged_size}",
    ]
    _emit(
        args,
        rows,
        lines,
        {
            "sumset": out.sumset_size,
            "bound": out.bound,
            "holds": out.holds,
            "rearranged": out.rearranged_size,
        },
    )
    return 0 if out.holds else 1


def _cmd_epi(args) -> int:
    out = discrete_epi_check(_parse_int_list(args.a_set), _parse_int_list(args.b_set))
    holds = out.slack >= -1e-9
    rows = [
        {
            "instance": 0,
            "alpha": "1",
            "lhs": out.n_sum + 1,
            "rhs": out.n_x + out.n_y,
            "gap": out.slack,
        }
    ]
    lines = [
        f"N(X+Y)+1 = {out.n_sum + 1:.12g} >= N(X)+N(Y) = {out.n_x + out.n_y:.12g} "
        f"{'PASS' if holds else 'FAIL'} (slack {out.slack:.3e})"
    ]
    _emit(
        args,
        rows,
        lines,
        {"n_sum": out.n_sum, "n_x": out.n_x, "n_y": out.n_y, "slack": out.slack},
    )
    return 0 if holds else 1


def _cmd_gap(args) -> int:
    rows = []
    lines = []
    if args.n_max is not None:
        sweep = doubling_gap_sweep(args.n_max)
        ok = True
        for n, gap, est in sweep:
            gap_v, est_v = _entropy_value(args, gap), _entropy_value(args, est)
            rows.append({"instance": n, "alpha": "1", "lhs": gap_v, "rhs": est_v, "gap": gap_v - est_v})
            ok = ok and gap >= est - 1e-12
        lines.append(f"gap >= estimate for all n in [2, {args.n_max}]: {'PASS' if ok else 'FAIL'}")
        obj = {"rows": [dict(r) for r in rows]}
        if args.plot:
            from . import plots

            ns = [r["instance"] for r in rows]
            plots.save_gap_sweep(ns, [r["lhs"] for r in rows], [r["rhs"] for r in rows], args.plot)
            lines.append(f"figure written to {args.plot}")
        _emit(args, rows, lines, obj)
        return 0 if ok else 1
    gap, est = doubling_gap(args.n)
    gap_v, est_v = _entropy_value(args, gap), _entropy_value(args, est)
    rows.append({"instance": args.n, "alpha": "1", "lhs": gap_v, "rhs": est_v, "gap": gap_v - est_v})
    ok = gap >= est - 1e-12
    lines.append(
        f"n={args.n}: gap = {gap_v:.12g} >= estimate = {est_v:.12g} {_unit(args)} "
        f"{'PASS' if ok else 'FAIL'}"
    )
    _emit(args, rows, lines, {"n": args.n, "gap": gap_v, "estimate": est_v})
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    if args.mode == "perm":
        if len(args.pmfs) != 2:
            raise ParseError("perm mode needs exactly two distributions")
        f, g = (_load_pmf(spec) for spec in args.pmfs)
        alphas = _parse_alphas(args.alpha)
        rows = []
        lines = []
        for a in alphas:
            minimum, pair = min_entropy_over_permutations(f, g, a)
            rows.append(
                {"instance": 0, "alpha": str(a), "lhs": minimum, "rhs": None, "gap": None}
            )
            lines.append(f"alpha={a}: min entropy over relabelings = {minimum:.12g}")
            lines.append(f"  argmin first map : {pair.first}")
            lines.append(f"  argmin second map: {pair.second}")
        _emit(args, rows, lines, {"minima": [dict(r) for r in rows]})
        return 0
    if args.mode == "extremal":
        report = brute_extremal_check(
            trials=args.trials, domain=_parse_domain(args), n=args.n, seed=args.seed
        )
        rows = [
            {
                "instance": 0,
                "alpha": None,
                "lhs": report.trials,
                "rhs": len(report.failures),
                "gap": None,
            }
        ]
        lines = [f"{report.trials} trials, {len(report.failures)} failures"]
        lines += [f"  {failure}" for failure in report.failures]
        _emit(
            args,
            rows,
            lines,
            {"trials": report.trials, "failures": report.failures, "passed": report.passed},
        )
        return 0 if report.passed else 1
    # smallball
    if not args.pmfs or args.coeffs is None:
        raise ParseError("smallball mode needs distributions and --coeffs")
    factors = tuple(_load_pmf(spec) for spec in args.pmfs)
    coeffs = tuple(_parse_int_list(args.coeffs))
    form = LinearForm(coeffs, factors)
    brute = brute_small_ball(form)
    fast = small_ball(form)
    ok = brute == fast
    rows = [
        {"instance": 0, "alpha": "inf", "lhs": brute, "rhs": fast, "gap": brute - fast}
    ]
    lines = [f"enumeration {brute} vs convolution {fast}: {'MATCH' if ok else 'MISMATCH'}"]
    _emit(args, rows, lines, {"enumeration": brute, "convolution": fast, "match": ok})
    return 0 if ok else 1


def _cmd_selftest(args) -> int:
    only = set(_parse_int_list(args.criteria)) if args.criteria else None
    results = acceptance.run_all(seed=args.seed, only=only)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "number": r.number,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                        "seconds": r.seconds,
                    }
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        for r in results:
            print(r.line())
    failures = [r for r in results if not r.passed]
    if failures and args.format != "json":
        print(f"{len(failures)} criterion(s) failed")
    return 1 if failures else 0


def _cmd_convolve(args) -> int:
    fs = [_load_pmf(spec) for spec in args.pmfs]
    out = convolve_many(fs)
    rows = [
        {"instance": i, "alpha": None, "lhs": v, "rhs": None, "gap": None}
        for i, v in out.items()
    ]
    _emit(args, rows, _pmf_lines("convolution", out), {"convolution": mass_to_obj(out)})
    return 0


def _cmd_extremal(args) -> int:
    fs = [_load_pmf(spec) for spec in args.pmfs]
    out = extremal_distribution_fast(fs)
    rows = [
        {"instance": i, "alpha": None, "lhs": v, "rhs": None, "gap": None}
        for i, v in out.items()
    ]
    _emit(args, rows, _pmf_lines("extremal", out), {"extremal": mass_to_obj(out)})
    return 0


# -------------------------------------------------------------- argparse ---


def _add_common(sub, bits: bool = False) -> None:
    sub.add_argument(
        "--format",
        choices=("human", "json", "csv"),
        default="human",
        help="output format (default: human)",
    )
    if bits:
        sub.add_argument("--bits", action="store_true", help="report entropies in bits")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entsum",
        description="Exact entropy lower bounds for sums on Z/pZ and Z.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("entropy", help="Renyi entropies of one distribution")
    sub.add_argument("pmf", help="PMF file or inline JSON")
    sub.add_argument("--alpha", default="0,1/2,1,2,inf", help="comma-separated orders")
    _add_common(sub, bits=True)
    sub.set_defaults(func=_cmd_entropy)

    sub = subs.add_parser("rearrange", help="center-out rearrangement")
    sub.add_argument("pmf")
    sub.add_argument("--sign", choices=("plus", "minus", "star"), default="plus")
    _add_common(sub)
    sub.set_defaults(func=_cmd_rearrange)

    sub = subs.add_parser("decompose", help="triangle/square split")
    sub.add_argument("pmf")
    _add_common(sub)
    sub.set_defaults(func=_cmd_decompose)

    sub = subs.add_parser("convolve", help="exact convolution of several PMFs")
    sub.add_argument("pmfs", nargs="+")
    _add_common(sub)
    sub.set_defaults(func=_cmd_convolve)

    sub = subs.add_parser("extremal", help="extremal lower-bound distribution")
    sub.add_argument("pmfs", nargs="+")
    _add_common(sub)
    sub.set_defaults(func=_cmd_extremal)

    sub = subs.add_parser("lowerbound", help="verify the convolution entropy bound")
    sub.add_argument("pmfs", nargs="+")
    sub.add_argument("--alpha", default="0,1/2,1,2,inf")
    sub.add_argument("--plot", metavar="FILE", help="render a report figure")
    _add_common(sub, bits=True)
    sub.set_defaults(func=_cmd_lowerbound)

    sub = subs.add_parser("lo", help="weighted-sum entropy bound and small ball")
    sub.add_argument("pmfs", nargs="+")
    sub.add_argument("--coeffs", required=True, help="comma-separated integers")
    sub.add_argument("--alpha", default="inf")
    _add_common(sub, bits=True)
    sub.set_defaults(func=_cmd_lo)

    sub = subs.add_parser("kanter", help="G(x) bound for symmetric three-point sums")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--x", type=float, default=1.0, help="evaluate G at x")
    group.add_argument("--qs", help="comma-separated q_i, runs the exact check")
    group.add_argument("--sweep", type=float, help="tabulate G on (0, SWEEP]")
    sub.add_argument("--points", type=int, default=500)
    sub.add_argument("--plot", metavar="FILE")
    _add_common(sub)
    sub.set_defaults(func=_cmd_kanter)

    sub = subs.add_parser("count", help="collision-equation solution counts")
    sub.add_argument("--set", action="append", required=True, help="repeatable index list")
    sub.add_argument("--coeffs", required=True)
    sub.add_argument("--p", type=int, help="odd prime modulus; omit for integers")
    _add_common(sub)
    sub.set_defaults(func=_cmd_count)

    sub = subs.add_parser("cd", help="sumset cardinality bound")
    sub.add_argument("--a-set", required=True)
    sub.add_argument("--b-set", required=True)
    sub.add_argument("--p", type=int, help="odd prime modulus; omit for integers")
    _add_common(sub)
    sub.set_defaults(func=_cmd_cd)

    sub = subs.add_parser("epi", help="entropy power inequality for uniforms on Z")
    sub.add_argument("--a-set", required=True)
    sub.add_argument("--b-set", required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_epi)

    sub = subs.add_parser("gap", help="entropy gap under doubling for uniforms")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, default=2, help="single support size")
    group.add_argument("--n-max", type=int, help="sweep 2..N_MAX")
    sub.add_argument("--plot", metavar="FILE")
    _add_common(sub, bits=True)
    sub.set_defaults(func=_cmd_gap)

    sub = subs.add_parser("oracle", help="brute-force certifiers")
    sub.add_argument("--mode", choices=("perm", "extremal", "smallball"), required=True)
    sub.add_argument("pmfs", nargs="*")
    sub.add_argument("--alpha", default="1")
    sub.add_argument("--coeffs", help="smallball mode coefficient list")
    sub.add_argument("--p", type=int, help="extremal mode modulus; omit for integers")
    sub.add_argument("--n", type=int, default=2)
    sub.add_argument("--trials", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    _add_common(sub)
    sub.set_defaults(func=_cmd_oracle)

    sub = subs.add_parser("selftest", help="run the full acceptance suite")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--criteria", help="comma-separated criterion numbers to run")
    _add_common(sub)
    sub.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
