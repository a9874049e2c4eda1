"""
Command-line front end.

    dynnikov act --n 3 --word "1" --coords "1;2"
    dynnikov invert --n 4 --coords "2,1;1,1"
    dynnikov entropy --n 3 --word "1 -2"
    dynnikov classify --n 3 --word "1 2" --seed "0;1"
    dynnikov fixed --n 4 --word "1 1 1 2 3" --coords "2,1;1,1"
    dynnikov family beta --m 1 --nn 1 dilatation --tol 1e-10
    dynnikov family beta --m-range 1:4 --nn-range 1:4 sweep

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import families as fam
from .braid import format_word, parse_word
from .coords import (
    DynnikovCoordinates,
    dynnikov_to_triangle,
    format_coords,
    format_triangle,
    lamination,
    parse_coords,
)
from .errors import DynnikovError
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    EntropyStatus,
    classify_orbit,
    entropy_estimate,
    fixed_point_check,
    projective_eigen_check,
)
from .update import apply_word

FORMATS = ("plain", "json", "csv")
FAMILY_ACTIONS = ("word", "dilatation", "coords", "verify", "reduce", "sweep")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _jsonable(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def _emit(out, fmt: str, record: dict, plain: str) -> None:
    if fmt == "json":
        out.write(json.dumps({k: _jsonable(v) for k, v in record.items()}, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(
            " ".join(map(str, v)) if isinstance(v, (list, tuple)) else v
            for v in record.values()
        )
        out.write(buf.getvalue())
    else:
        out.write(plain + "\n")


def _coords_record(x: DynnikovCoordinates) -> dict:
    return {"n": x.n, "coords_a": list(x.a), "coords_b": list(x.b)}


def _digits(tol: float) -> int:
    return max(1, math.ceil(-math.log10(tol)))


def _fmt_real(value: float, tol: float) -> str:
    return f"{value:.{_digits(tol)}f}"


def _seed(args) -> DynnikovCoordinates:
    if args.seed is not None:
        return parse_coords(args.seed, args.n)
    h = args.n - 2
    return lamination([1] * h, [1] * h)


def _cmd_act(args, out):
    x = parse_coords(args.coords, args.n)
    w = parse_word(args.word, args.n)
    y = apply_word(x, w, use_bands=args.bands)
    _emit(out, args.format, {**_coords_record(y), "word": format_word(w)}, format_coords(y))


def _cmd_invert(args, out):
    x = parse_coords(args.coords, args.n)
    t = dynnikov_to_triangle(x)
    rec = {"n": t.n, "alpha": list(t.alpha), "beta": list(t.beta)}
    _emit(out, args.format, rec, format_triangle(t))


def _cmd_entropy(args, out):
    w = parse_word(args.word, args.n)
    rep = entropy_estimate(w, _seed(args), args.max_iter, args.tol, args.window)
    rec = {
        "n": w.n,
        "word": format_word(w),
        "estimate": rep.estimate,
        "dilatation": rep.dilatation,
        "iterations": rep.iterations,
        "status": rep.status.value,
    }
    plain = f"{rep.estimate!r} ({rep.status.value} after {rep.iterations} iterations)"
    _emit(out, args.format, rec, plain)


def _cmd_classify(args, out):
    w = parse_word(args.word, args.n)
    c = classify_orbit(w, _seed(args), args.max_iter, args.tol, args.window)
    rec = {
        "n": w.n,
        "word": format_word(w),
        "status": c.kind.value,
        "period": c.period,
        "estimate": c.rate,
        "iterations": c.iterations,
    }
    _emit(out, args.format, rec, str(c))


def _cmd_fixed(args, out):
    x = parse_coords(args.coords, args.n)
    w = parse_word(args.word, args.n)
    ok = fixed_point_check(w, x)
    rec = {**_coords_record(x), "word": format_word(w), "pass": ok}
    _emit(out, args.format, rec, "true" if ok else "false")


def _family(kind: str, m: int, n: int) -> fam.Family:
    return fam.Beta(m, n) if kind == "beta" else fam.Sigma(m, n)


def _sweep_row(job):
    kind, m, n, tol, max_iter = job
    f = _family(kind, m, n)
    r = fam.dilatation(f, tol)
    w = fam.family_word(f)
    h = w.n - 2
    rep = entropy_estimate(w, lamination([1] * h, [1] * h), max_iter)
    return m, n, r, rep.estimate, abs(rep.estimate - math.log(r))


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise UsageError(f"range must look like LO:HI, got {text!r}") from None
    return range(lo, hi + 1)


def _cmd_sweep(args, out):
    if args.m_range is None or args.nn_range is None:
        raise UsageError("sweep needs --m-range and --nn-range")
    jobs = [
        (args.kind, m, n, args.tol, args.max_iter)
        for m in _parse_range(args.m_range)
        for n in _parse_range(args.nn_range)
        if args.kind == "beta" or m + 2 <= n
    ]
    for job in jobs:
        _family(job[0], job[1], job[2])  # validate before spawning workers
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    rows.sort(key=lambda row: (row[0], row[1]))
    if args.format == "json":
        keys = ("m", "n", "dilatation", "entropy_estimate", "abs_err")
        out.write(json.dumps({"rows": [dict(zip(keys, r)) for r in rows]}) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "n", "dilatation", "entropy_estimate", "abs_err"])
    for m, n, r, est, err in rows:
        writer.writerow([m, n, repr(r), repr(est), f"{err:.3e}"])


def _cmd_family(args, out):
    if args.action == "sweep":
        return _cmd_sweep(args, out)
    if args.m is None or args.nn is None:
        raise UsageError(f"family {args.action} needs --m and --nn")
    f = _family(args.kind, args.m, args.nn)
    base = {"family": args.kind, "m": f.m, "nn": f.n, "n": f.strands}
    if args.action == "word":
        w = fam.family_word(f)
        _emit(out, args.format, {**base, "word": format_word(w)}, format_word(w))
    elif args.action == "dilatation":
        r = fam.dilatation(f, args.tol)
        rec = {**base, "dilatation": r, "estimate": math.log(r)}
        _emit(out, args.format, rec, _fmt_real(r, args.tol))
    elif args.action == "coords":
        r = fam.dilatation(f, args.tol)
        x = fam.unstable_coords(f, r)
        _emit(out, args.format, {**base, **_coords_record(x), "dilatation": r}, format_coords(x))
    elif args.action == "reduce":
        if not isinstance(f, fam.Sigma) or f.n != f.m + 1:
            raise DynnikovError("reducing systems are known for sigma with nn = m + 1 only")
        x = fam.reducing_system(f.m)
        _emit(out, args.format, {**base, **_coords_record(x)}, format_coords(x))
    elif args.action == "verify":
        w = fam.family_word(f)
        if isinstance(f, fam.Sigma) and f.n == f.m + 1:
            ok = fixed_point_check(w, fam.reducing_system(f.m))
            rec = {**base, "pass": ok, "check": "fixed_point"}
        else:
            r = fam.dilatation(f, args.tol)
            chk = projective_eigen_check(w, fam.unstable_coords(f, r), r, args.eigen_tol)
            ok = chk.passed
            rec = {**base, "pass": ok, "check": "eigenvector", "dilatation": r,
                   "max_rel_err": chk.max_rel_err}
        _emit(out, args.format, rec, "true" if ok else "false")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")

    parser = _Parser(prog="dynnikov", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("act", parents=[common], help="apply a braid to coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--coords", required=True)
    p.add_argument("--bands", action="store_true", help="route through band rules")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("invert", parents=[common], help="triangle coordinates of a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coords", required=True)
    p.set_defaults(func=_cmd_invert)

    for name, func, max_iter, tol in (
        ("entropy", _cmd_entropy, DEFAULT_MAX_ITER, DEFAULT_TOL),
        ("classify", _cmd_classify, 1000, 1e-9),
    ):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--word", required=True)
        p.add_argument("--seed", help="integral seed, default all ones")
        p.add_argument("--tol", type=float, default=tol)
        p.add_argument("--max-iter", type=int, default=max_iter)
        p.add_argument("--window", type=int, default=10)
        p.set_defaults(func=func)

    p = sub.add_parser("fixed", parents=[common], help="exact fixed-point test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--coords", required=True)
    p.set_defaults(func=_cmd_fixed)

    p = sub.add_parser("family", parents=[common], help="the beta / sigma families")
    p.add_argument("kind", choices=("beta", "sigma"))
    p.add_argument("--m", type=int)
    p.add_argument("--nn", type=int)
    p.add_argument("action", choices=FAMILY_ACTIONS)
    p.add_argument("--tol", type=float, default=1e-12, help="bisection tolerance")
    p.add_argument("--eigen-tol", type=float, default=1e-9)
    p.add_argument("--m-range")
    p.add_argument("--nn-range")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_family)
    return parser


def execute(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        if args.command in ("entropy", "classify") and args.n < 3:
            raise DynnikovError("need n >= 3")
        args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except DynnikovError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return 0


def main() -> None:
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
