"""CSV schemas shared by the CLI, the plots, and the tests.

All emitters produce UTF-8 text with LF line endings, a mandatory header
row, and floats at six significant digits.
"""

from __future__ import annotations

import io

from .analysis import BandStats, ErrorReport
from .errors import FormatError
from .estimator import AlphaProfile, TrpfCurve
from .goldbach import GpRecord, band_from_str, band_to_str

SCAN_HEADER = "two_n,gp_count,band,egp,igp"
CURVE_HEADER = "logpx,f2,f3,f4,f5,total"
ALPHA_HEADER = "p,alpha,case"
REPORT_HEADER = ("band,lo,hi,members,mean_gp,min_gp,max_gp,"
                 "bias_egp,bias_igp,bandwidth_igp,frac_within_bound")


def _f(x: float) -> str:
    return f"{x:.6g}"


def scan_to_csv(records: list[GpRecord]) -> str:
    out = io.StringIO()
    out.write(SCAN_HEADER + "\n")
    for r in records:
        out.write(f"{r.two_n},{r.gp_count},{band_to_str(r.band)},{_f(r.egp)},{_f(r.igp)}\n")
    return out.getvalue()


def scan_from_csv(text: str) -> list[GpRecord]:
    lines = text.splitlines()
    if not lines or lines[0] != SCAN_HEADER:
        raise FormatError(f"expected scan header {SCAN_HEADER!r}")
    records = []
    for line in lines[1:]:
        if not line:
            continue
        two_n, gp, band, egp, igp = line.split(",")
        records.append(GpRecord(int(two_n), int(gp), band_from_str(band),
                                float(egp), float(igp)))
    return records


def curve_to_csv(curve: TrpfCurve) -> str:
    out = io.StringIO()
    out.write(CURVE_HEADER + "\n")
    per = curve.per_factor
    for i, u in enumerate(curve.grid):
        cols = [_f(float(u))]
        for k in (2, 3, 4, 5):
            cols.append(_f(float(per[k][i])) if k in per else "0")
        cols.append(_f(float(curve.total[i])))
        out.write(",".join(cols) + "\n")
    return out.getvalue()


def alpha_to_csv(profile: AlphaProfile) -> str:
    out = io.StringIO()
    out.write(ALPHA_HEADER + "\n")
    for p in sorted(profile.entries):
        out.write(f"{p},{_f(profile.entries[p])},{profile.cases[p]}\n")
    return out.getvalue()


def report_to_csv(rows: list[tuple[BandStats, ErrorReport]]) -> str:
    out = io.StringIO()
    out.write(REPORT_HEADER + "\n")
    for stats, err in rows:
        out.write(",".join([
            band_to_str(stats.band),
            str(stats.window[0]),
            str(stats.window[1]),
            str(stats.member_count),
            _f(stats.mean_gp),
            _f(stats.min_gp),
            _f(stats.max_gp),
            _f(err.bias_egp),
            _f(err.bias_igp),
            _f(err.bandwidth_igp),
            _f(err.frac_within_bound),
        ]) + "\n")
    return out.getvalue()


def read_table(text: str) -> tuple[list[str], list[dict[str, str]]]:
    """Generic CSV reader: header names plus one dict per row."""
    lines = [ln for ln in text.splitlines() if ln]
    if not lines:
        raise FormatError("empty CSV input")
    header = lines[0].split(",")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(header):
            raise FormatError(f"row has {len(cells)} cells, header has {len(header)}")
        rows.append(dict(zip(header, cells)))
    return header, rows
