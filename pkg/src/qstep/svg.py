"""Static multi-panel SVG line charts, no plotting library."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

PALETTE = ("#1f4fb4", "#12a7c4", "#c02fc0", "#d62020", "#2c8a2c", "#8a5a1e")
DASHES = ("", "6,3", "2,2", "8,3,2,3", "4,4", "1,3")

PANEL_W = 420
PANEL_H = 260
MARGIN_L = 64
MARGIN_R = 16
MARGIN_T = 28
MARGIN_B = 40


@dataclass
class Series:
    label: str
    xs: Sequence[float]
    ys: Sequence[Optional[float]]


@dataclass
class Panel:
    title: str
    series: List[Series]
    ylabel: str = ""
    xlabel: str = "E/m"


def nice_ticks(lo: float, hi: float, n: int = 5) -> List[float]:
    if hi <= lo:
        hi = lo + (abs(lo) or 1.0)
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t = start + len(ticks) * step
    return ticks


def _num(x: float) -> str:
    return f"{x:.2f}"


def _label(t: float) -> str:
    return f"{t:.4g}"


def _segments(xs, ys) -> List[List[Tuple[float, float]]]:
    segs, cur = [], []
    for x, y in zip(xs, ys):
        if y is None or not math.isfinite(y):
            if cur:
                segs.append(cur)
            cur = []
        else:
            cur.append((x, y))
    if cur:
        segs.append(cur)
    return segs


def _data_range(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return 0.0, 1.0
    lo, hi = min(values), max(values)
    if hi == lo:
        pad = abs(lo) * 0.1 or 1.0
        return lo - pad, hi + pad
    return lo, hi


def render_panel(panel: Panel, ox: float, oy: float) -> List[str]:
    xs_all = [x for s in panel.series for x in s.xs]
    ys_all = [y for s in panel.series for y in s.ys if y is not None and math.isfinite(y)]
    x0, x1 = _data_range(xs_all)
    y0, y1 = _data_range(ys_all)
    yt = nice_ticks(y0, y1)
    xt = nice_ticks(x0, x1)
    y0, y1 = min(y0, yt[0]), max(y1, yt[-1])

    pw = PANEL_W - MARGIN_L - MARGIN_R
    ph = PANEL_H - MARGIN_T - MARGIN_B
    left, top = ox + MARGIN_L, oy + MARGIN_T

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + ph - (y - y0) / (y1 - y0) * ph

    out = [f'<g class="panel">']
    out.append(f'<text x="{_num(left + pw / 2)}" y="{_num(oy + 18)}" text-anchor="middle" '
               f'font-size="13">{escape(panel.title)}</text>')
    out.append(f'<rect x="{_num(left)}" y="{_num(top)}" width="{_num(pw)}" height="{_num(ph)}" '
               f'fill="none" stroke="#000" stroke-width="1"/>')
    for t in xt:
        if x0 <= t <= x1:
            X = sx(t)
            out.append(f'<line x1="{_num(X)}" y1="{_num(top + ph)}" x2="{_num(X)}" y2="{_num(top + ph + 4)}" stroke="#000"/>')
            out.append(f'<text x="{_num(X)}" y="{_num(top + ph + 16)}" text-anchor="middle" font-size="10">{_label(t)}</text>')
    for t in yt:
        Y = sy(t)
        out.append(f'<line x1="{_num(left - 4)}" y1="{_num(Y)}" x2="{_num(left)}" y2="{_num(Y)}" stroke="#000"/>')
        out.append(f'<line x1="{_num(left)}" y1="{_num(Y)}" x2="{_num(left + pw)}" y2="{_num(Y)}" stroke="#ddd"/>')
        out.append(f'<text x="{_num(left - 6)}" y="{_num(Y + 3)}" text-anchor="end" font-size="10">{_label(t)}</text>')
    out.append(f'<text x="{_num(left + pw / 2)}" y="{_num(top + ph + 32)}" text-anchor="middle" font-size="11">{escape(panel.xlabel)}</text>')
    if panel.ylabel:
        cx, cy = ox + 14, top + ph / 2
        out.append(f'<text x="{_num(cx)}" y="{_num(cy)}" text-anchor="middle" font-size="11" '
                   f'transform="rotate(-90 {_num(cx)} {_num(cy)})">{escape(panel.ylabel)}</text>')

    for i, s in enumerate(panel.series):
        color = PALETTE[i % len(PALETTE)]
        dash = DASHES[i % len(DASHES)]
        style = f' stroke-dasharray="{dash}"' if dash else ""
        for seg in _segments(s.xs, s.ys):
            pts = " ".join(f"{_num(sx(x))},{_num(sy(y))}" for x, y in seg)
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.4"{style} points="{pts}"/>')
        ly = top + 12 + 14 * i
        lx = left + pw - 90
        out.append(f'<line x1="{_num(lx)}" y1="{_num(ly - 4)}" x2="{_num(lx + 22)}" y2="{_num(ly - 4)}" '
                   f'stroke="{color}" stroke-width="1.4"{style}/>')
        out.append(f'<text x="{_num(lx + 26)}" y="{_num(ly)}" font-size="10">{escape(s.label)}</text>')
    out.append("</g>")
    return out


def render(panels: Sequence[Panel], title: str = "", columns: int = 2) -> str:
    rows = (len(panels) + columns - 1) // columns
    head = 30 if title else 0
    width = PANEL_W * min(columns, len(panels))
    height = PANEL_H * rows + head
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#fff"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.2f}" y="20" text-anchor="middle" font-size="15">{escape(title)}</text>')
    for idx, panel in enumerate(panels):
        r, c = divmod(idx, columns)
        out.extend(render_panel(panel, c * PANEL_W, head + r * PANEL_H))
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- sweep figures -------------------------------------------------------

Quantity = Tuple[str, str, Callable]


def _v_minus(res):
    return res.velocities.v_minus


QUANTITIES: Dict[str, Quantity] = {
    "absR": ("|R|", "|R|", lambda r: abs(r.solution.R)),
    "absRt": ("|R~|", "|R~|", lambda r: abs(r.solution.R_tilde)),
    "absT": ("|T|", "|T|", lambda r: abs(r.solution.T)),
    "absTt": ("|T~|", "|T~|", lambda r: abs(r.solution.T_tilde)),
    "reflected": ("reflected flux", "|R|^2 + |R~|^2", lambda r: r.solution.reflection),
    "transmitted": ("transmitted flux", "rho|T|^2 + rho~|T~|^2",
                    lambda r: r.weights.rho * abs(r.solution.T) ** 2
                    + r.weights.rho_tilde * abs(r.solution.T_tilde) ** 2),
    "flux_residual": ("flux residual", "residual", lambda r: r.flux_residual),
    "v_plus": ("v+", "v+", lambda r: r.velocities.v_plus),
    "v_minus": ("v-", "v-", _v_minus),
}

SWEEP_PANELS = ("absR", "absRt", "absT", "absTt", "flux_residual", "v_plus", "v_minus")

FIGURE_PANELS = {
    1: ("Reflection amplitudes", ("absR", "absRt")),
    2: ("Transmission amplitudes", ("absT", "absTt")),
    3: ("Probability conservation", ("reflected", "transmitted", "flux_residual")),
    4: ("Group velocities", ("v_plus", "v_minus")),
}


def _panels(result, keys: Sequence[str]) -> List[Panel]:
    from .sweep import series, w_values

    panels = []
    for key in keys:
        title, ylabel, fn = QUANTITIES[key]
        lines = []
        for w in w_values(result):
            xs, ys = series(result, w, fn)
            lines.append(Series(f"|W0| = {w:g}", xs, ys))
        panels.append(Panel(title, lines, ylabel=ylabel))
    return panels


def _subtitle(result) -> str:
    cfg = result.config
    return f"V0 = {cfg.V0:g}, m = {cfg.m:g}"


def sweep_figure(result) -> str:
    return render(_panels(result, SWEEP_PANELS), title=f"Quaternionic step sweep ({_subtitle(result)})")


def preset_figure(result, number: int) -> str:
    title, keys = FIGURE_PANELS[number]
    return render(_panels(result, keys), title=f"{title} ({_subtitle(result)})")
