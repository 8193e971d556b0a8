"""Command-line front end.

Every subcommand prints either an aligned text table (default) or a JSON
report (``--json``).  Rationals are always written as ``"p/q"`` strings.
Exit status: 0 on success, 1 when a mathematical precondition fails,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import oracle
from .applications import (DistSpec, cdf, expected_cdf, expected_cdf_closed_form, gupta_sum,
                           measure_young, median_bound_check, median_set, summation_identity)
from .core import (InvalidArgument, Interval, MonotoneFn, ParseError, as_rational, fmt_ext,
                   fmt_rational)
from .integral import change_of_variables, ls_integral, parts
from .inverse import InverseVersion, bracket, gen_inverse, inverse_fn
from .measure import atoms_in, interval_image, ls_measure
from .randomgen import random_interval, random_monotone, seed_from_env
from .young import classical_bounds, closed_interval_bounds, s_functional_bounds, t_bounds


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _load_json(source: str, what: str):
    text = source
    if not source.lstrip().startswith("{"):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"--{what}: cannot read {source!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--{what}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_fn(source: str, what: str) -> MonotoneFn:
    try:
        return MonotoneFn.from_json(_load_json(source, what))
    except ParseError as exc:
        raise ParseError(f"--{what}: {exc}") from None


def _load_dist(source: str) -> DistSpec:
    try:
        return DistSpec.from_json(_load_json(source, "dist"))
    except ParseError as exc:
        raise ParseError(f"--dist: {exc}") from None


def _interval(text: str, what: str = "interval") -> Interval:
    try:
        return Interval.parse(text)
    except ParseError as exc:
        raise ParseError(f"--{what}: {exc}") from None


def _rational(text: str, what: str) -> Fraction:
    try:
        return as_rational(text)
    except ParseError as exc:
        raise ParseError(f"--{what}: {exc}") from None


def _integer(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"--{what}: not an integer: {text!r}") from None


def _fmt(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, float):
        return fmt_ext(value)
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _emit(report: dict, as_json: bool, out=None):
    out = out or sys.stdout
    report = _fmt(report)
    if as_json:
        json.dump(report, out, indent=2)
        out.write("\n")
        return
    rows = [(k, v) for k, v in report.items() if k != "inputs"]
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        out.write(f"{key.ljust(width)}  {value}\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_integrate(args) -> dict:
    f, g = _load_fn(args.f, "f"), _load_fn(args.g, "g")
    interval = _interval(args.interval)
    report = {"value": ls_integral(f, g, interval)}
    if args.change_of_variables:
        lhs, rhs = change_of_variables(f, g, interval, args.version)
        report.update({"lhs": lhs, "rhs": rhs, "version": args.version, "agree": lhs == rhs})
    report["inputs"] = {"f": f.to_json(), "g": g.to_json(), "interval": str(interval)}
    return report


def cmd_parts(args) -> dict:
    f, g = _load_fn(args.f, "f"), _load_fn(args.g, "g")
    interval = _interval(args.interval)
    r = parts(f, g, interval)
    return {"lhs": r.lhs, "boundary": r.boundary, "jump_sum": r.jump_sum,
            "common_discontinuities": r.common_discontinuities, "holds": r.holds,
            "inputs": {"f": f.to_json(), "g": g.to_json(), "interval": str(interval)}}


def cmd_invert(args) -> dict:
    g = _load_fn(args.g, "g")
    if args.materialize:
        return {"inverse": inverse_fn(g, args.version).to_json(), "version": args.version,
                "inputs": {"g": g.to_json()}}
    if args.y is None:
        raise ParseError("--y is required unless --materialize is given")
    y = _rational(args.y, "y")
    value = gen_inverse(g, y, args.version)
    lo, hi = bracket(g, y)
    return {"value": value, "version": args.version, "bracket": [lo, hi],
            "inputs": {"g": g.to_json(), "y": fmt_rational(y)}}


def cmd_measure(args) -> dict:
    g = _load_fn(args.g, "g")
    interval = _interval(args.interval)
    img = interval_image(g, interval)
    return {"measure": ls_measure(g, interval), "image": [img.lee, img.ree],
            "atoms": [[x, m] for x, m in atoms_in(g, interval)],
            "inputs": {"g": g.to_json(), "interval": str(interval)}}


def cmd_young(args) -> dict:
    f = _load_fn(args.f, "f")
    g = _load_fn(args.g, "g") if args.g else None
    if args.I or args.J:
        if not (args.I and args.J and g):
            raise ParseError("--I, --J and --g must be given together")
        interval, sub = _interval(args.I, "I"), _interval(args.J, "J")
        report = t_bounds(f, g, interval, sub)
    else:
        if args.a is None or args.s is None or args.t is None:
            raise ParseError("give either --I/--J or all of --a, --s, --t")
        a, s, t = _rational(args.a, "a"), _rational(args.s, "s"), _rational(args.t, "t")
        if args.form == "classical":
            report = classical_bounds(f, a, s, t)
        elif g is None:
            raise ParseError(f"--g is required for form {args.form!r}")
        elif args.form == "s":
            report = s_functional_bounds(f, g, a, s, t)
        else:
            report = closed_interval_bounds(f, g, a, s, t)
    out = report.to_json()
    out["inputs"] = {"f": f.to_json(), **({"g": g.to_json()} if g else {})}
    return out


def cmd_prob(args) -> dict:
    dist = _load_dist(args.dist)
    inputs = {"dist": dist.to_json()}
    if args.what == "expected-cdf":
        return {"integral": expected_cdf(dist), "closed_form": expected_cdf_closed_form(dist),
                "agree": expected_cdf(dist) == expected_cdf_closed_form(dist), "inputs": inputs}
    if args.what == "median":
        med = median_set(dist)
        return {"lo": med.lo, "hi": med.hi, "inputs": inputs}
    if args.what == "median-bound":
        out = median_bound_check(dist).to_json()
        out["inputs"] = inputs
        return out
    if args.what == "cdf":
        return {"cdf": cdf(dist).to_json(), "inputs": inputs}
    if not args.f or args.s is None or args.t is None:
        raise ParseError("measure-young needs --f, --s and --t")
    f = _load_fn(args.f, "f")
    out = measure_young(dist, f, _rational(args.s, "s"), _rational(args.t, "t")).to_json()
    out["inputs"] = {**inputs, "f": f.to_json()}
    return out


def cmd_sumform(args) -> dict:
    f = _load_fn(args.f, "f")
    n = _integer(args.n, "n")
    if args.gupta:
        lhs, rhs = gupta_sum(f, n)
        return {"lhs": lhs, "rhs": rhs, "holds": lhs == rhs, "inputs": {"f": f.to_json(), "n": n}}
    m = _integer(args.m, "m")
    out = summation_identity(f, m, n).to_json()
    out["inputs"] = {"f": f.to_json(), "m": m, "n": n}
    return out


def cmd_verify(args) -> dict:
    seed = seed_from_env() if args.seed is None else args.seed
    rng = random.Random(seed)
    levels = list(range(1, args.levels + 1))
    worst = {n: None for n in levels}
    monotone = bounded = True
    for _ in range(args.instances):
        f = random_monotone(rng, lo=-2, hi=2)
        f = f.shifted(-f.lower_limit)
        g = random_monotone(rng, lo=-2, hi=2)
        interval = random_interval(rng, f.breakpoints + g.breakpoints, allow_empty=False)
        exact = ls_integral(f, g, interval)
        mass = ls_measure(g, interval)
        prev = None
        for n in levels:
            if f.upper_limit >= n:
                continue
            gap = exact - oracle.partition_sum(f, g, interval, n)
            worst[n] = gap if worst[n] is None else max(worst[n], gap)
            bounded &= 0 <= gap <= mass / 2 ** n
            monotone &= prev is None or gap <= prev
            prev = gap
    table = [{"level": n, "max_gap": worst[n]} for n in levels]
    lem_ok = True
    for _ in range(args.instances):
        g = random_monotone(rng)
        interval = random_interval(rng, g.breakpoints)
        for v in InverseVersion:
            est, target = oracle.lemleb_check(g, interval, v, args.grid)
            err = abs(est - target)
            lem_ok &= err == 0 or err < 2 * oracle.lemleb_bound(g, args.grid)
    return {"seed": seed, "instances": args.instances, "gap_bounded": bounded,
            "gap_monotone": monotone, "lemleb_within_bound": lem_ok, "convergence": table,
            "ok": bounded and monotone and lem_ok}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    parser = _Parser(prog="stieltjes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    versions = [v.value for v in InverseVersion]

    p = sub.add_parser("integrate", parents=[common], help="integral of f dg over an interval")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--change-of-variables", action="store_true")
    p.add_argument("--version", choices=versions, default="smallest")
    p.set_defaults(run=cmd_integrate)

    p = sub.add_parser("parts", parents=[common], help="integration by parts report")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--interval", required=True)
    p.set_defaults(run=cmd_parts)

    p = sub.add_parser("invert", parents=[common], help="generalized inverse")
    p.add_argument("--g", required=True)
    p.add_argument("--y")
    p.add_argument("--version", choices=versions, default="smallest")
    p.add_argument("--materialize", action="store_true", help="print the inverse as a function")
    p.set_defaults(run=cmd_invert)

    p = sub.add_parser("measure", parents=[common], help="L-S measure of an interval")
    p.add_argument("--g", required=True)
    p.add_argument("--interval", required=True)
    p.set_defaults(run=cmd_measure)

    p = sub.add_parser("young", parents=[common], help="Young functional bounds")
    p.add_argument("--f", required=True)
    p.add_argument("--g")
    p.add_argument("--I")
    p.add_argument("--J")
    p.add_argument("--a")
    p.add_argument("--s")
    p.add_argument("--t")
    p.add_argument("--form", choices=["closed", "s", "classical"], default="closed")
    p.set_defaults(run=cmd_young)

    p = sub.add_parser("prob", parents=[common], help="distribution corollaries")
    p.add_argument("what", choices=["expected-cdf", "median", "median-bound", "measure-young", "cdf"])
    p.add_argument("--dist", required=True)
    p.add_argument("--f")
    p.add_argument("--s")
    p.add_argument("--t")
    p.set_defaults(run=cmd_prob)

    p = sub.add_parser("sumform", parents=[common], help="floor-sum identity")
    p.add_argument("--f", required=True)
    p.add_argument("--m", default="1")
    p.add_argument("--n", required=True)
    p.add_argument("--gupta", action="store_true", help="check the m = 1 special case")
    p.set_defaults(run=cmd_sumform)

    p = sub.add_parser("verify", parents=[common], help="engine versus brute-force oracle")
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--seed", type=int, default=None, help="overrides STIELTJES_SEED")
    p.set_defaults(run=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.run(args)
    except ParseError as exc:
        print(f"stieltjes {args.command}: {exc}", file=sys.stderr)
        return 2
    except InvalidArgument as exc:
        print(f"stieltjes {args.command}: precondition violated: {exc}", file=sys.stderr)
        return 1
    if args.command == "verify":
        _emit_verify(report, args.json)
        return 0 if report["ok"] else 1
    _emit(report, args.json)
    return 0


def _emit_verify(report: dict, as_json: bool):
    if as_json:
        _emit(report, True)
        return
    print(f"seed {report['seed']}, {report['instances']} instances")
    print(f"{'level':>5}  {'max gap':>14}")
    for row in report["convergence"]:
        gap = "-" if row["max_gap"] is None else f"{float(row['max_gap']):.6e}"
        print(f"{row['level']:>5}  {gap:>14}")
    for key in ("gap_bounded", "gap_monotone", "lemleb_within_bound"):
        print(f"{key}: {'PASS' if report[key] else 'FAIL'}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
