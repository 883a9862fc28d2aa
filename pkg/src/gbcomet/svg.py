"""Minimal deterministic SVG plots for the CSV outputs.

No plotting dependency: geometry is derived only from the CSV values, so
identical inputs give byte-identical SVG documents.
"""

from __future__ import annotations

from collections import Counter

from .errors import FormatError

WIDTH, HEIGHT = 900, 600
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 25, 25, 55

PALETTE = ["#1f4e9c", "#b22222", "#2e8b57", "#d2691e", "#6a3d9a",
           "#008b8b", "#c71585", "#8b8b00", "#4682b4"]
GREY = "#bbbbbb"

PLOT_KINDS = ("bands-scatter", "b2-compare", "trpf-curves", "alpha-profile")


class _Axes:
    def __init__(self, xs: list[float], ys: list[float], xlabel: str, ylabel: str):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 == self.y0:
            self.y1 = self.y0 + 1.0
        self.xlabel = xlabel
        self.ylabel = ylabel

    def px(self, x: float) -> float:
        w = WIDTH - MARGIN_L - MARGIN_R
        return MARGIN_L + (x - self.x0) / (self.x1 - self.x0) * w

    def py(self, y: float) -> float:
        h = HEIGHT - MARGIN_T - MARGIN_B
        return HEIGHT - MARGIN_B - (y - self.y0) / (self.y1 - self.y0) * h

    def frame(self) -> list[str]:
        parts = [
            f'<rect x="{MARGIN_L}" y="{MARGIN_T}" '
            f'width="{WIDTH - MARGIN_L - MARGIN_R}" '
            f'height="{HEIGHT - MARGIN_T - MARGIN_B}" '
            f'fill="none" stroke="#333333" stroke-width="1"/>'
        ]
        for i in range(5):
            xv = self.x0 + (self.x1 - self.x0) * i / 4
            yv = self.y0 + (self.y1 - self.y0) * i / 4
            xq, yq = self.px(xv), self.py(yv)
            parts.append(
                f'<text x="{xq:.2f}" y="{HEIGHT - MARGIN_B + 18}" '
                f'font-size="11" text-anchor="middle">{xv:.6g}</text>'
            )
            parts.append(
                f'<text x="{MARGIN_L - 6}" y="{yq + 4:.2f}" '
                f'font-size="11" text-anchor="end">{yv:.6g}</text>'
            )
        parts.append(
            f'<text x="{(MARGIN_L + WIDTH - MARGIN_R) / 2:.2f}" y="{HEIGHT - 12}" '
            f'font-size="13" text-anchor="middle">{self.xlabel}</text>'
        )
        parts.append(
            f'<text x="16" y="{(MARGIN_T + HEIGHT - MARGIN_B) / 2:.2f}" font-size="13" '
            f'text-anchor="middle" transform="rotate(-90 16 '
            f'{(MARGIN_T + HEIGHT - MARGIN_B) / 2:.2f})">{self.ylabel}</text>'
        )
        return parts


def _document(body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _need(rows: list[dict[str, str]], columns: list[str], kind: str) -> None:
    if not rows:
        raise FormatError(f"{kind}: CSV has no data rows")
    for col in columns:
        if col not in rows[0]:
            raise FormatError(f"{kind}: missing required column {col!r}")


def _circle(x: float, y: float, color: str, r: float = 1.6) -> str:
    return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}"/>'


def _polyline(pts: list[tuple[float, float]], color: str) -> str:
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
    return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def render_bands_scatter(rows: list[dict[str, str]]) -> str:
    """Pair counts versus 2n, the nine most common bands coloured, rest grey."""
    _need(rows, ["two_n", "gp_count", "band"], "bands-scatter")
    counts = Counter(r["band"] for r in rows)
    ranked = sorted(counts, key=lambda b: (-counts[b], b))
    color = {b: PALETTE[i] for i, b in enumerate(ranked[: len(PALETTE)])}
    xs = [float(r["two_n"]) for r in rows]
    ys = [float(r["gp_count"]) for r in rows]
    ax = _Axes(xs, ys, "2n", "goldbach pairs")
    body = ax.frame()
    for r, x, y in zip(rows, xs, ys):
        body.append(_circle(ax.px(x), ax.py(y), color.get(r["band"], GREY)))
    return _document(body)


def render_b2_compare(rows: list[dict[str, str]]) -> str:
    """Actual pair counts (grey) against the egp (blue) and igp (red) estimates."""
    _need(rows, ["two_n", "gp_count", "egp", "igp"], "b2-compare")
    xs = [float(r["two_n"]) for r in rows]
    gp = [float(r["gp_count"]) for r in rows]
    eg = [float(r["egp"]) for r in rows]
    ig = [float(r["igp"]) for r in rows]
    ax = _Axes(xs, gp + eg + ig, "2n", "goldbach pairs")
    body = ax.frame()
    for x, y in zip(xs, gp):
        body.append(_circle(ax.px(x), ax.py(y), GREY))
    body.append(_polyline([(ax.px(x), ax.py(y)) for x, y in zip(xs, eg)], PALETTE[0]))
    body.append(_polyline([(ax.px(x), ax.py(y)) for x, y in zip(xs, ig)], PALETTE[1]))
    return _document(body)


def render_trpf_curves(rows: list[dict[str, str]]) -> str:
    """Per-factor relative curves and their total on the log_p(x) grid."""
    _need(rows, ["logpx", "f2", "f3", "f4", "f5", "total"], "trpf-curves")
    xs = [float(r["logpx"]) for r in rows]
    series = ["f2", "f3", "f4", "f5", "total"]
    ys_all: list[float] = []
    for name in series:
        ys_all.extend(float(r[name]) for r in rows)
    ax = _Axes(xs, ys_all, "log_p(x)", "relative factor")
    body = ax.frame()
    for i, name in enumerate(series):
        pts = [(ax.px(x), ax.py(float(r[name]))) for x, r in zip(xs, rows)]
        body.append(_polyline(pts, PALETTE[i]))
        body.append(
            f'<text x="{WIDTH - MARGIN_R - 52}" y="{MARGIN_T + 16 + 14 * i}" '
            f'font-size="12" fill="{PALETTE[i]}">{name}</text>'
        )
    return _document(body)


def render_alpha_profile(rows: list[dict[str, str]]) -> str:
    """alpha per sieving prime, coloured by its piecewise case."""
    _need(rows, ["p", "alpha", "case"], "alpha-profile")
    case_color = {"one": PALETTE[0], "i2+i3": PALETTE[2], "i2": PALETTE[1],
                  "zero": GREY}
    xs = [float(r["p"]) for r in rows]
    ys = [float(r["alpha"]) for r in rows]
    ax = _Axes(xs, ys, "p", "alpha")
    body = ax.frame()
    for r, x, y in zip(rows, xs, ys):
        body.append(_circle(ax.px(x), ax.py(y), case_color.get(r["case"], GREY), r=2.2))
    return _document(body)


_RENDERERS = {
    "bands-scatter": render_bands_scatter,
    "b2-compare": render_b2_compare,
    "trpf-curves": render_trpf_curves,
    "alpha-profile": render_alpha_profile,
}


def render_plot(kind: str, rows: list[dict[str, str]]) -> str:
    """Render one of the supported plot kinds from parsed CSV rows."""
    if kind not in _RENDERERS:
        raise ValueError(f"unknown plot kind {kind!r}")
    return _RENDERERS[kind](rows)
