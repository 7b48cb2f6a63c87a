"""Command-line front end.

Commands:

    compute     print one exact sequence value or polynomial
    verify      sweep chosen catalog ids over parameter ranges
    verify-all  sweep the whole catalog up to an n bound
    bench       time the arithmetic kernels
    cache       save / load / inspect the Bernoulli number cache

Report lines go to stdout (one line per checked instance; with --json,
one JSON object per line); the closing summary goes to stderr so that
stdout stays machine-parseable.  Exit status: 0 when everything
checked holds, 1 on any verification or cache-validation failure,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .arith import Rat
from .catalog import CATALOG, VerifyReport, catalog_ids, verify, verify_sweep
from .sequences import (
    BernoulliCache,
    CacheIntegrityError,
    bbar,
    bernoulli_number,
    bernoulli_poly,
    default_cache,
    euler_poly,
    harmonic,
)

CACHE_HEADER = "bepoly-bernoulli-cache v1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# -- argument parsing ----------------------------------------------------------

def _nonneg_int(text: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return int(text)


def _range_arg(text: str) -> range:
    """Inclusive range syntax: 'a..b' or a single value 'a'."""
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bepoly",
        description="Exact Bernoulli/Euler polynomial computations and "
                    "identity verification over arbitrary-precision rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print one exact value")
    p_compute.add_argument(
        "what",
        choices=["bernoulli-number", "bernoulli-poly", "euler-poly", "harmonic", "bbar"],
    )
    p_compute.add_argument("n", type=_nonneg_int)

    p_verify = sub.add_parser("verify", help="verify chosen identities")
    p_verify.add_argument("--id", dest="ids", action="append", required=True,
                          metavar="ID", help="catalog id (repeatable)")
    p_verify.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    p_verify.add_argument("--p", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--q", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--cache", type=Path, metavar="PATH")

    p_all = sub.add_parser("verify-all", help="verify the whole catalog")
    p_all.add_argument("--n-max", type=_nonneg_int, default=10)
    p_all.add_argument("--id", dest="extra_ids", action="append", default=[],
                       metavar="ID", help="additionally include this id "
                       "(e.g. a negative control)")
    p_all.add_argument("--json", action="store_true")
    p_all.add_argument("--cache", type=Path, metavar="PATH")

    p_bench = sub.add_parser("bench", help="time the arithmetic kernels")
    p_bench.add_argument("--n-max", type=_nonneg_int, default=100)
    p_bench.add_argument("--cache", type=Path, metavar="PATH")

    p_cache = sub.add_parser("cache", help="manage the Bernoulli number cache")
    p_cache.add_argument("action", choices=["save", "load", "info"])
    p_cache.add_argument("--cache", type=Path, required=True, metavar="PATH")
    p_cache.add_argument("--n-max", type=_nonneg_int, default=50,
                         help="for save: compute B_0..B_n before writing")

    return parser


# -- cache file format ---------------------------------------------------------

def write_cache_file(path: Path, values: list[Rat]) -> None:
    lines = [CACHE_HEADER]
    lines += [f"{i}\t{v.numerator}/{v.denominator}" for i, v in enumerate(values)]
    path.write_text("\n".join(lines) + "\n", encoding="ascii")


def read_cache_file(path: Path) -> list[Rat]:
    """Parse a cache file; raises CacheIntegrityError on malformed entries.

    Parsing is purely syntactic -- the arithmetic revalidation happens
    when the values are fed to BernoulliCache.seed().
    """
    text = path.read_text(encoding="ascii")
    lines = text.splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        raise CacheIntegrityError(-1, f"{path}: missing or unknown header")
    values: list[Rat] = []
    for lineno, line in enumerate(lines[1:]):
        m = re.fullmatch(r"(\d+)\t(-?\d+)/(\d+)", line)
        if not m or int(m.group(1)) != lineno:
            raise CacheIntegrityError(lineno, f"{path}: malformed entry at index {lineno}")
        values.append(Fraction(int(m.group(2)), int(m.group(3))))
    return values


def _load_cache(path: Path) -> None:
    values = read_cache_file(path)
    default_cache().seed(values)


# -- report rendering ----------------------------------------------------------

def _report_json(report: VerifyReport) -> str:
    obj: dict = {"id": report.key, "n": report.n}
    if report.l is not None:
        obj["l"] = report.l
    obj["p"] = report.p
    obj["q"] = report.q
    if report.skipped:
        obj["skipped"] = True
    else:
        obj["holds"] = report.holds
        obj["residual"] = report.residual_str()
        obj["elapsed_ms"] = round(report.elapsed * 1000, 3)
    return json.dumps(obj)


def _report_text(report: VerifyReport) -> str:
    if report.skipped:
        return f"skip  {report.key}  {report.params_str()}  (out of domain)"
    ms = report.elapsed * 1000
    if report.holds:
        return f"ok    {report.key}  {report.params_str()}  ({ms:.2f} ms)"
    return (f"FAIL  {report.key}  {report.params_str()}  "
            f"residual = {report.residual_str()}  ({ms:.2f} ms)")


def _emit_reports(reports: Iterable[VerifyReport], as_json: bool) -> int:
    checked = failed = skipped = 0
    for report in reports:
        print(_report_json(report) if as_json else _report_text(report))
        if report.skipped:
            skipped += 1
            continue
        checked += 1
        if not report.holds:
            failed += 1
    print(
        f"verified {checked} instance(s): {checked - failed} ok, "
        f"{failed} failed, {skipped} skipped",
        file=sys.stderr,
    )
    return EXIT_FAILED if failed else EXIT_OK


# -- commands -------------------------------------------------------------------

def _cmd_compute(args) -> int:
    table = {
        "bernoulli-number": bernoulli_number,
        "bernoulli-poly": bernoulli_poly,
        "euler-poly": euler_poly,
        "harmonic": harmonic,
        "bbar": bbar,
    }
    print(table[args.what](args.n))
    return EXIT_OK


def _validate_ids(parser: argparse.ArgumentParser, ids: Iterable[str]) -> None:
    for key in ids:
        if key not in CATALOG:
            parser.error(f"unknown identity id {key!r}; catalog: {', '.join(CATALOG)}")


def _cmd_verify(args, parser) -> int:
    _validate_ids(parser, args.ids)
    reports = verify_sweep(args.ids, args.n, p_range=args.p, q_range=args.q)
    return _emit_reports(reports, args.json)


def _cmd_verify_all(args, parser) -> int:
    _validate_ids(parser, args.extra_ids)
    keys = catalog_ids(include_negative=False)
    keys += [k for k in args.extra_ids if k not in keys]
    reports = verify_sweep(keys, range(0, args.n_max + 1))
    return _emit_reports(reports, args.json)


def _cmd_bench(args) -> int:
    n = max(args.n_max, 1)

    start = time.perf_counter()
    fresh = BernoulliCache()
    value = fresh.get(n)
    t_numbers = time.perf_counter() - start
    digits = len(str(abs(value.numerator)))
    print(f"bernoulli-numbers  n=0..{n}  "
          f"B_{n} = {digits}-digit numerator / {value.denominator}  "
          f"({t_numbers * 1000:.1f} ms)")

    start = time.perf_counter()
    poly = bernoulli_poly(n)
    t_poly = time.perf_counter() - start
    print(f"bernoulli-poly     n={n}  {poly.degree + 1} coefficients  "
          f"({t_poly * 1000:.1f} ms)")

    n_verify = max(n, 2)
    report = verify("1.6", n_verify)
    print(f"verify-1.6         n={n_verify}  holds={report.holds}  "
          f"({report.elapsed * 1000:.1f} ms)")
    return EXIT_OK


def _cmd_cache(args) -> int:
    path: Path = args.cache
    if args.action == "save":
        default_cache().get(args.n_max)
        values = default_cache().values()
        write_cache_file(path, values)
        print(f"saved {len(values)} entries (B_0..B_{len(values) - 1}) to {path}")
        return EXIT_OK
    if args.action == "load":
        _load_cache(path)
        print(f"loaded and validated {default_cache().highest + 1} entries; "
              f"highest cached index: {default_cache().highest}")
        return EXIT_OK
    # info: report on the file when present, else on the in-process cache
    if path.exists():
        values = read_cache_file(path)
        print(f"highest cached index: {len(values) - 1} ({path})")
    else:
        print(f"highest cached index: {default_cache().highest} (in-memory)")
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    cache_path: Optional[Path] = getattr(args, "cache", None)
    use_cache_io = args.command in ("verify", "verify-all", "bench")
    try:
        if use_cache_io and cache_path and cache_path.exists():
            _load_cache(cache_path)

        if args.command == "compute":
            status = _cmd_compute(args)
        elif args.command == "verify":
            status = _cmd_verify(args, parser)
        elif args.command == "verify-all":
            status = _cmd_verify_all(args, parser)
        elif args.command == "bench":
            status = _cmd_bench(args)
        else:
            status = _cmd_cache(args)

        if use_cache_io and cache_path:
            write_cache_file(cache_path, default_cache().values())
    except CacheIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    return status


if __name__ == "__main__":
    sys.exit(main())
