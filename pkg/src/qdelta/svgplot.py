"""Minimal self-contained SVG rendering for resonance curves.

No plotting dependency: output is assembled as fixed-format strings so that
identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import math

WIDTH = 760
HEIGHT = 500
MARGIN_LEFT = 70
MARGIN_RIGHT = 30
MARGIN_TOP = 50
MARGIN_BOTTOM = 60

COLOR_R = "#1f77b4"
COLOR_T = "#d62728"
COLOR_MARKER = "#444444"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _log_points(energies: list[float], values: list[float]) -> list[tuple[float, float]]:
    pts = []
    for e, v in zip(energies, values):
        if v > 0.0 and math.isfinite(v):
            pts.append((e, math.log10(v)))
    return pts


def render_curves_svg(energies: list[float], big_r: list[float], big_t: list[float],
                      markers: list[float], title: str) -> str:
    """Log-scaled reflection and transmission curves with vertical markers at
    each supplied energy. Non-positive or non-finite values are dropped."""
    pts_r = _log_points(energies, big_r)
    pts_t = _log_points(energies, big_t)
    x_lo, x_hi = energies[0], energies[-1]
    ys = [y for _, y in pts_r] + [y for _, y in pts_t]
    if ys:
        y_lo = math.floor(min(ys))
        y_hi = math.ceil(max(ys))
    else:
        y_lo, y_hi = -1, 1
    if y_lo == y_hi:
        y_lo -= 1
        y_hi += 1
    y_lo = max(y_lo, -18)
    y_hi = min(y_hi, 18)

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(e: float) -> float:
        return MARGIN_LEFT + (e - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    def polyline(pts: list[tuple[float, float]], color: str, cls: str) -> str:
        if not pts:
            return f'<polyline class="{cls}" points="" fill="none" stroke="{color}"/>'
        coords = " ".join(f"{_fmt(px(e))},{_fmt(py(y))}" for e, y in pts)
        return (f'<polyline class="{cls}" points="{coords}" fill="none" '
                f'stroke="{color}" stroke-width="1.5"/>')

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.0f}" y="28" text-anchor="middle" font-size="16" '
        f'font-family="monospace">{title}</text>',
    ]
    axis_bottom = HEIGHT - MARGIN_BOTTOM
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{axis_bottom}" x2="{WIDTH - MARGIN_RIGHT}" '
               f'y2="{axis_bottom}" stroke="#000000"/>')
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
               f'y2="{axis_bottom}" stroke="#000000"/>')
    for i in range(6):
        e = x_lo + (x_hi - x_lo) * i / 5
        x = px(e)
        out.append(f'<line x1="{_fmt(x)}" y1="{axis_bottom}" x2="{_fmt(x)}" '
                   f'y2="{axis_bottom + 5}" stroke="#000000"/>')
        out.append(f'<text x="{_fmt(x)}" y="{axis_bottom + 20}" text-anchor="middle" '
                   f'font-size="11" font-family="monospace">{e:.3g}</text>')
    y_step = max(1, (y_hi - y_lo) // 8)
    y_tick = y_lo
    while y_tick <= y_hi:
        y = py(y_tick)
        out.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" '
                   f'y2="{_fmt(y)}" stroke="#000000"/>')
        out.append(f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(y + 4)}" text-anchor="end" '
                   f'font-size="11" font-family="monospace">1e{y_tick}</text>')
        y_tick += y_step
    out.append(f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 14}" text-anchor="middle" '
               f'font-size="12" font-family="monospace">E</text>')
    for e_marker in markers:
        x = px(e_marker)
        out.append(f'<line class="ss-marker" data-energy="{e_marker:.12g}" '
                   f'x1="{_fmt(x)}" y1="{MARGIN_TOP}" x2="{_fmt(x)}" y2="{axis_bottom}" '
                   f'stroke="{COLOR_MARKER}" stroke-dasharray="4,3"/>')
        out.append(f'<text x="{_fmt(x + 4)}" y="{MARGIN_TOP + 14}" font-size="11" '
                   f'font-family="monospace" fill="{COLOR_MARKER}">E={e_marker:.6g}</text>')
    out.append(polyline(pts_r, COLOR_R, "curve-r"))
    out.append(polyline(pts_t, COLOR_T, "curve-t"))
    legend_x = WIDTH - MARGIN_RIGHT - 130
    out.append(f'<line x1="{legend_x}" y1="{MARGIN_TOP + 8}" x2="{legend_x + 24}" '
               f'y2="{MARGIN_TOP + 8}" stroke="{COLOR_R}" stroke-width="2"/>')
    out.append(f'<text x="{legend_x + 30}" y="{MARGIN_TOP + 12}" font-size="12" '
               f'font-family="monospace">R = |r|^2</text>')
    out.append(f'<line x1="{legend_x}" y1="{MARGIN_TOP + 26}" x2="{legend_x + 24}" '
               f'y2="{MARGIN_TOP + 26}" stroke="{COLOR_T}" stroke-width="2"/>')
    out.append(f'<text x="{legend_x + 30}" y="{MARGIN_TOP + 30}" font-size="12" '
               f'font-family="monospace">T = |t|^2</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
