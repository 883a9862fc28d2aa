"""Command-line interface.

Subcommands: count, scan, estimate, trpf, alpha, constants, report, plot.
Exit codes: 0 success, 1 usage error, 2 numeric/domain error.

The scan subcommand can persist the sieve in a small binary cache file
(``--cache``); ``GOLDBACH_CACHE_DIR`` relocates relative cache paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import analysis, estimator, formats, goldbach, primes, svg
from .errors import DomainError, FormatError, NumericError, OutOfRangeError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # raise instead of exiting with code 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="gbcomet", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[], description="Exact pair count for one even number.")
    p.add_argument("--even", type=int, required=True, metavar="2N")
    p.add_argument("--pairs", action="store_true", help="also list the pairs")

    p = sub.add_parser("scan", description="Per-even records over a range, as CSV.")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--band", type=str, default=None,
                   help="comma-separated signatures, e.g. 2,2-3")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", type=str, default=None, metavar="FILE.csv")
    p.add_argument("--cache", type=str, default=None, metavar="FILE.gbsv")

    p = sub.add_parser("estimate", description="Pair-count estimate for one even number.")
    p.add_argument("--even", type=int, required=True, metavar="2N")
    p.add_argument("--method", choices=("egp", "igp"), required=True)

    p = sub.add_parser("trpf", description="Relative-factor curves on a log_p(x) grid, as CSV.")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--factors", type=str, default="2..5", metavar="K or K..K")
    p.add_argument("--grid", type=str, required=True, metavar="LO:HI:STEPS")
    p.add_argument("--simulated", action="store_true")
    p.add_argument("--out", type=str, default=None, metavar="FILE.csv")

    p = sub.add_parser("alpha", description="alpha per odd sieving prime, as CSV.")
    p.add_argument("--even", type=int, required=True, metavar="2N")
    p.add_argument("--out", type=str, default=None, metavar="FILE.csv")

    p = sub.add_parser("constants", description="Partial products for the closed-form constants.")
    p.add_argument("--cutoff", type=int, required=True)

    p = sub.add_parser("report", description="Band statistics over a scan CSV.")
    p.add_argument("--band", type=str, required=True)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--in", dest="infile", type=str, required=True, metavar="FILE.csv")
    p.add_argument("--out", type=str, default=None, metavar="FILE.csv")

    p = sub.add_parser("plot", description="Render a CSV as a deterministic SVG.")
    p.add_argument("--kind", choices=svg.PLOT_KINDS, required=True)
    p.add_argument("--in", dest="infile", type=str, required=True, metavar="FILE.csv")
    p.add_argument("--out", type=str, required=True, metavar="FILE.svg")

    return top


def _require_even(value: int, what: str = "--even") -> None:
    if value < 4 or value % 2:
        raise UsageError(f"{what} must be an even integer >= 4, got {value}")


def _cache_path(raw: str) -> Path:
    path = Path(raw)
    cache_dir = os.environ.get("GOLDBACH_CACHE_DIR")
    if cache_dir and not path.is_absolute():
        path = Path(cache_dir) / path
    return path


def _table_for(limit: int, cache: str | None) -> primes.PrimalityTable:
    if cache is not None:
        path = _cache_path(cache)
        if path.exists():
            table = primes.load_cache(path)
            if table.limit >= limit:
                return table
        table = primes.build_sieve(limit)
        path.parent.mkdir(parents=True, exist_ok=True)
        primes.save_cache(table, path)
        return table
    return primes.build_sieve(limit)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def _parse_factors(spec: str) -> tuple[int, ...]:
    try:
        if ".." in spec:
            lo_s, hi_s = spec.split("..")
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise UsageError(f"bad --factors {spec!r}; expected K or K..K") from None
    if not 2 <= lo <= hi <= 5:
        raise UsageError(f"--factors must lie within 2..5, got {spec!r}")
    return tuple(range(lo, hi + 1))


def _parse_grid(spec: str) -> tuple[float, float, int]:
    try:
        lo_s, hi_s, steps_s = spec.split(":")
        return float(lo_s), float(hi_s), int(steps_s)
    except ValueError:
        raise UsageError(f"bad --grid {spec!r}; expected LO:HI:STEPS") from None


def _cmd_count(args) -> int:
    _require_even(args.even)
    table = primes.build_sieve(args.even)
    print(f"gp={goldbach.count_gp(args.even, table)}")
    if args.pairs:
        for a, b in goldbach.gp_pairs(args.even, table):
            print(f"{a}+{b}")
    return 0


def _cmd_scan(args) -> int:
    _require_even(args.lo, "--lo")
    _require_even(args.hi, "--hi")
    if args.lo > args.hi:
        raise UsageError(f"--lo {args.lo} exceeds --hi {args.hi}")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    band_filter = None
    if args.band is not None:
        try:
            band_filter = {goldbach.band_from_str(s) for s in args.band.split(",")}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    table = _table_for(args.hi, args.cache)
    records = goldbach.scan(args.lo, args.hi, table, band_filter, args.workers)
    _emit(formats.scan_to_csv(records), args.out)
    return 0


def _cmd_estimate(args) -> int:
    _require_even(args.even)
    value = estimator.egp(args.even) if args.method == "egp" else estimator.igp(args.even)
    print(f"{value:.6f}")
    return 0


def _cmd_trpf(args) -> int:
    if not args.p > 2:
        raise UsageError(f"--p must exceed 2, got {args.p}")
    factors = _parse_factors(args.factors)
    grid = _parse_grid(args.grid)
    source = "simulated" if args.simulated else "real"
    curve = estimator.trpf_curve(args.p, grid, source, factors)
    _emit(formats.curve_to_csv(curve), args.out)
    return 0


def _cmd_alpha(args) -> int:
    _require_even(args.even)
    profile = estimator.alpha_profile(args.even)
    _emit(formats.alpha_to_csv(profile), args.out)
    return 0


def _cmd_constants(args) -> int:
    if args.cutoff < 9:
        raise UsageError(f"--cutoff must be >= 9, got {args.cutoff}")
    table = primes.build_sieve(args.cutoff)
    consts = estimator.mertens_partial(args.cutoff, table)
    print(f"c_partial={consts.c_partial:.6f}")
    print(f"C_partial={consts.C_partial:.6f}")
    return 0


def _cmd_report(args) -> int:
    try:
        band = goldbach.band_from_str(args.band)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = Path(args.infile).read_text(encoding="utf-8")
    records = formats.scan_from_csv(text)
    window = (args.lo, args.hi)
    stats = analysis.band_stats(records, band, window)
    err = analysis.error_report(records, band, window)
    if stats is None or err is None:
        _emit(formats.report_to_csv([]), args.out)
        print(f"no records for band {args.band} in [{args.lo}, {args.hi}]",
              file=sys.stderr)
        return 0
    _emit(formats.report_to_csv([(stats, err)]), args.out)
    return 0


def _cmd_plot(args) -> int:
    text = Path(args.infile).read_text(encoding="utf-8")
    _, rows = formats.read_table(text)
    doc = svg.render_plot(args.kind, rows)
    Path(args.out).write_text(doc, encoding="utf-8", newline="")
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "scan": _cmd_scan,
    "estimate": _cmd_estimate,
    "trpf": _cmd_trpf,
    "alpha": _cmd_alpha,
    "constants": _cmd_constants,
    "report": _cmd_report,
    "plot": _cmd_plot,
}


def run(argv: list[str]) -> int:
    """Parse and execute one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, NumericError, OutOfRangeError, FormatError, ValueError,
            OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
