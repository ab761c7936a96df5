"""Command-line front-end.

Usage::

    hermes sphere --q 2 --n 3 --t 2
    hermes density --q 2 --n 3 --d 3 --mrd --format json
    hermes verify code.json
    hermes census --q 3 --n 3 --jobs 4
    hermes scan --q 2-16 --n-max 12

Exit status: 0 on success, 1 on computational errors, 2 on usage errors
(bad flags, out-of-range radii, non-prime-power fields, malformed files).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .codefile import load_code
from .codes import (
    CodeParams,
    density_report,
    min_distance,
    mrd_params,
    packing_density,
    render_decimal,
    singleton_check,
    sphere_packing_check,
)
from .counting import (
    ball_bounds,
    ball_size,
    binomial_bounds,
    gaussian_binomial,
    power_of,
    sphere_bounds,
    sphere_size,
)
from .errors import (
    CodeFileError,
    HermesError,
    InvalidModulus,
    NotPrime,
    NotPrimePower,
    RadiusOutOfRange,
    TooLarge,
    UnsupportedDistance,
    UnsupportedRadius,
)
from .field import factor_prime_power, hermitian_field
from .hermitian import sample
from .oracle import bound_sweep, census_vs_formula, perfect_scan, prime_powers

USAGE_ERRORS = (
    CodeFileError,
    InvalidModulus,
    NotPrime,
    NotPrimePower,
    RadiusOutOfRange,
    TooLarge,
    UnsupportedDistance,
    UnsupportedRadius,
)


class UsageError(Exception):
    pass


def qpow(value, q):
    """Render an exact value, with a ``q^k`` hint when it is a power of q."""
    value = Fraction(value)
    if value.denominator == 1:
        k = power_of(value.numerator, q)
        text = str(value.numerator)
        return f"{text} (= {q}^{k})" if k is not None and k > 1 else text
    if value.numerator == 1:
        k = power_of(value.denominator, q)
        if k is not None:
            return f"{q}^-{k}"
    return str(value)


def qexp(value, q):
    """Bracket endpoint as ``q^k`` when possible, otherwise the plain value."""
    value = Fraction(value)
    if value.denominator == 1:
        k = power_of(value.numerator, q)
    elif value.numerator == 1:
        k = power_of(value.denominator, q)
        k = None if k is None else -k
    else:
        k = None
    return f"{q}^{k}" if k is not None else str(value)


def frac(value):
    return None if value is None else str(Fraction(value))


def parse_q_list(text):
    """Comma-separated integers; ``a-b`` expands to the prime powers in [a, b]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                out.extend(prime_powers(lo, hi))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid q list {text!r}") from None
    if not out or any(q < 2 for q in out):
        raise argparse.ArgumentTypeError(f"q values must be at least 2: {text!r}")
    return out


def positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def field_size(text):
    v = positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("q must be at least 2")
    return v


# -- subcommands --------------------------------------------------------------


def _count_cmd(kind, value_fn, bounds_fn, args):
    value = value_fn(args.q, args.n, args.t)
    bracket = bounds_fn(args.q, args.n, args.t)
    inside = value in bracket
    data = {
        "kind": kind,
        "q": args.q,
        "n": args.n,
        "t": args.t,
        "value": value,
        "lower": bracket.lower,
        "upper": bracket.upper,
        "contained": inside,
    }
    symbol = "S" if kind == "sphere" else "B"
    text = (
        f"{symbol}_{args.t}(q={args.q}, n={args.n}) = {qpow(value, args.q)} "
        f"within [{qexp(bracket.lower, args.q)}, {qexp(bracket.upper, args.q)}]: "
        f"{'contained' if inside else 'NOT contained'}"
    )
    return data, text


def cmd_sphere(args):
    return _count_cmd("sphere", sphere_size, sphere_bounds, args)


def cmd_ball(args):
    return _count_cmd("ball", ball_size, ball_bounds, args)


def cmd_binomial(args):
    if args.m > args.n:
        raise UsageError(f"m = {args.m} exceeds n = {args.n}")
    value = gaussian_binomial(args.q * args.q, args.n, args.m)
    bracket = binomial_bounds(args.q, args.n, args.m)
    inside = value in bracket
    data = {
        "kind": "binomial",
        "q": args.q,
        "n": args.n,
        "m": args.m,
        "value": value,
        "lower": bracket.lower,
        "upper": bracket.upper,
        "contained": inside,
    }
    text = (
        f"bin_{{{args.q}^2}}({args.n},{args.m}) = {value} "
        f"within [{qexp(bracket.lower, args.q)}, {qexp(bracket.upper, args.q)}]: "
        f"{'contained' if inside else 'NOT contained'}"
    )
    return data, text


def _limit_dict(limit):
    return {
        "regime": limit.regime,
        "value": frac(limit.value),
        "lower": frac(limit.bracket.lower) if limit.bracket else None,
        "upper": frac(limit.bracket.upper) if limit.bracket else None,
    }


def cmd_density(args):
    if args.mrd:
        if args.d > args.n:
            raise UsageError(f"--d must lie in 1..{args.n} with --mrd")
        params = mrd_params(args.q, args.n, args.d)
    else:
        params = CodeParams(args.q, args.n, args.size, args.d if args.size > 1 else None)
    report = density_report(params)
    data = {
        "q": args.q,
        "n": args.n,
        "d": args.d,
        "t": params.t,
        "M": params.M,
        "density": frac(report.density),
        "decimal": report.decimal,
        "lower": frac(report.lower),
        "upper": frac(report.upper),
        "regime": report.regime,
        "is_mrd": report.is_mrd,
        "limit": _limit_dict(report.limit),
    }
    lim = report.limit
    if lim.value is not None:
        lim_text = frac(lim.value)
    else:
        lim_text = f"in [{qexp(lim.bracket.lower, args.q)}, {qexp(lim.bracket.upper, args.q)}]"
    lines = [
        f"q={args.q} n={args.n} d={args.d} t={params.t} M={qpow(params.M, args.q)}",
        f"density: {frac(report.density)} ({report.decimal})",
        f"bracket: [{qexp(report.lower, args.q) if report.lower else 0}, {qexp(report.upper, args.q)}]"
        + (" (MRD)" if report.is_mrd else ""),
        f"limit as n grows ({report.regime} d): {lim_text}",
    ]
    return data, "\n".join(lines)


def cmd_verify(args):
    try:
        code = load_code(args.path)
    except OSError as exc:
        raise CodeFileError(exc.strerror or str(exc), args.path) from exc
    q, n = code.q, code.n
    d = min_distance(code, cap=args.cap) if args.cap else min_distance(code)
    params = CodeParams(q, n, code.size, d)
    sc = singleton_check(params)
    pk = sphere_packing_check(params)
    dens = packing_density(params)
    trivial = params.M == q ** (n * n)
    data = {
        "q": q,
        "n": n,
        "k": code.k,
        "M": params.M,
        "d": d,
        "t": params.t,
        "singleton_bound": sc.bound,
        "is_mrd": sc.is_mrd,
        "packing": {
            "lhs": pk.lhs,
            "rhs": pk.rhs,
            "slack": pk.slack,
            "is_perfect": pk.is_perfect,
            "trivial": trivial,
        },
        "density": frac(dens),
        "decimal": render_decimal(dens),
    }
    perfect = "perfect" + (" (trivial: full space)" if trivial else "") if pk.is_perfect else "not perfect"
    lines = [
        f"(n, q, k) = ({n}, {q}, {code.k}), M = {qpow(params.M, q)}",
        f"minimum distance d = {d}, packing radius t = {params.t}",
        f"Singleton-like bound: {qpow(sc.bound, q)}; {'MRD' if sc.is_mrd else 'not MRD'}",
        f"sphere packing: M*B_t = {pk.lhs} <= {qpow(pk.rhs, q)}, slack {pk.slack}; {perfect}",
        f"packing density: {frac(dens)} ({render_decimal(dens)})",
    ]
    return data, "\n".join(lines)


def cmd_census(args):
    check = census_vs_formula(args.q, args.n, cap=args.cap, workers=args.jobs)
    verdict = "pass" if check.passed else "FAIL"
    text = f"census q={args.q} n={args.n}: {verdict}, counts {list(check.census)}"
    if check.mismatch:
        t, got, want = check.mismatch
        text += f"\nfirst mismatch at t={t}: census {got}, formula {want}"
    return check.to_dict(), text


def cmd_scan(args):
    result = perfect_scan(args.q, args.n_max, mode=args.mode)
    lines = [
        f"scanned {len(result.grid)} (q, n, d) triples, mode {result.mode}",
        f"trivial perfect parameter sets: {len(result.trivial)}",
        f"nontrivial perfect candidates: {len(result.nontrivial)}",
    ]
    for f in result.nontrivial:
        lines.append(f"  q={f.q} n={f.n} d={f.d} M={f.M}")
    if result.lemma_violations:
        lines.append(f"t=1/t=2 strict-inequality violations: {result.lemma_violations}")
    return result.to_dict(), "\n".join(lines)


def cmd_sweep(args):
    report = bound_sweep(args.q, args.n_max)
    text = f"{report.checks} bracket checks over {report.points} points: {len(report.violations)} violations"
    return report.to_dict(), text


def cmd_sample(args):
    factor_prime_power(args.q)
    f = hermitian_field(args.q)
    a = sample(args.n, f, args.seed)
    data = {"q": args.q, "n": args.n, "seed": args.seed, "matrix": a.to_json(), "rank": a.rank()}
    text = "\n".join(" ".join(row) for row in a.to_json()) + f"\nrank {a.rank()}"
    return data, text


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="hermes", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("sphere", cmd_sphere, "exact sphere size S_t with its bracket"),
        ("ball", cmd_ball, "exact ball size B_t with its bracket"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--q", type=field_size, required=True)
        p.add_argument("--n", type=positive, required=True)
        p.add_argument("--t", type=nonneg, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("binomial", parents=[common], help="Gaussian binomial in base q^2")
    p.add_argument("--q", type=field_size, required=True)
    p.add_argument("--n", type=nonneg, required=True)
    p.add_argument("--m", type=nonneg, required=True)
    p.set_defaults(func=cmd_binomial)

    p = sub.add_parser("density", parents=[common], help="packing density and its brackets")
    p.add_argument("--q", type=field_size, required=True)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--d", type=positive, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--size", type=positive, help="code size M")
    which.add_argument("--mrd", action="store_true", help="use the MRD size q^{n(n-d+1)}")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", parents=[common], help="full report for a JSON code file")
    p.add_argument("path")
    p.add_argument("--cap", type=positive, help="codeword enumeration cap")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="brute-force rank census vs formula")
    p.add_argument("--q", type=field_size, required=True)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--cap", type=positive, help="enumeration cap (default HERMES_ENUM_CAP or 2^30)")
    p.add_argument("--jobs", type=positive, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", parents=[common], help="scan parameters for perfect codes")
    p.add_argument("--q", type=parse_q_list, required=True, help="e.g. 2,3,4 or 2-16")
    p.add_argument("--n-max", type=positive, required=True)
    p.add_argument("--mode", choices=("power", "integer"), default="power")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sweep", parents=[common], help="check every bracket over a grid")
    p.add_argument("--q", type=parse_q_list, required=True)
    p.add_argument("--n-max", type=positive, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sample", parents=[common], help="uniform random Hermitian matrix")
    p.add_argument("--q", type=field_size, required=True)
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text = args.func(args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"hermes {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (HermesError, ValueError) as exc:
        print(f"hermes {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
