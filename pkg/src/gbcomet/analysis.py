"""Band-level statistics and estimator-error reports over scan records.

Windows are closed intervals on 2n.  Aggregations return ``None`` for an
empty selection (an empty result, as opposed to an error), and are plain
arithmetic over the record order, so identical inputs give identical reports
regardless of how the records were produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .goldbach import BandSignature, GpRecord
from .numerics import li_offset


@dataclass(frozen=True)
class BandStats:
    """Aggregate pair counts for one band inside a window."""

    band: BandSignature
    window: tuple[int, int]
    member_count: int
    mean_gp: float
    min_gp: float
    max_gp: float
    mean_egp: float
    mean_igp: float


@dataclass(frozen=True)
class ErrorReport:
    """Estimator bias and error-band coverage for one band inside a window.

    ``bandwidth_igp`` is the spread (max - min) of gp - igp over the window;
    ``frac_within_bound`` is the fraction of members with
    |gp - igp| <= 2 (li(sqrt(2n)) - li(2)).
    """

    band: BandSignature
    window: tuple[int, int]
    member_count: int
    bias_egp: float
    bias_igp: float
    bandwidth_igp: float
    frac_within_bound: float


def _select(records: list[GpRecord], band: BandSignature,
            window: tuple[int, int]) -> list[GpRecord]:
    prev = None
    for r in records:
        if prev is not None and r.two_n < prev:
            raise ValueError("records must be sorted ascending by two_n")
        prev = r.two_n
    lo, hi = window
    return [r for r in records if lo <= r.two_n <= hi and r.band == tuple(band)]


def band_stats(records: list[GpRecord], band: BandSignature,
               window: tuple[int, int]) -> BandStats | None:
    """Aggregate gp/egp/igp over the band members inside the window."""
    sel = _select(records, band, window)
    if not sel:
        return None
    gp = np.array([r.gp_count for r in sel], dtype=np.float64)
    return BandStats(
        band=tuple(band),
        window=window,
        member_count=len(sel),
        mean_gp=float(gp.mean()),
        min_gp=float(gp.min()),
        max_gp=float(gp.max()),
        mean_egp=float(np.mean([r.egp for r in sel])),
        mean_igp=float(np.mean([r.igp for r in sel])),
    )


def band_ratio(records: list[GpRecord], band_a: BandSignature,
               band_b: BandSignature, window: tuple[int, int]) -> float | None:
    """mean_gp(band_b) / mean_gp(band_a), or None if either band is empty."""
    a = band_stats(records, band_a, window)
    b = band_stats(records, band_b, window)
    if a is None or b is None:
        return None
    return b.mean_gp / a.mean_gp


def error_report(records: list[GpRecord], band: BandSignature,
                 window: tuple[int, int]) -> ErrorReport | None:
    """Bias and error-band coverage for the band inside the window."""
    sel = _select(records, band, window)
    if not sel:
        return None
    gp = np.array([r.gp_count for r in sel], dtype=np.float64)
    egp = np.array([r.egp for r in sel])
    igp = np.array([r.igp for r in sel])
    resid = gp - igp
    bound = np.array([2.0 * li_offset(math.sqrt(r.two_n)) for r in sel])
    return ErrorReport(
        band=tuple(band),
        window=window,
        member_count=len(sel),
        bias_egp=float(np.mean(egp - gp)),
        bias_igp=float(np.mean(igp - gp)),
        bandwidth_igp=float(resid.max() - resid.min()),
        frac_within_bound=float(np.mean(np.abs(resid) <= bound)),
    )
