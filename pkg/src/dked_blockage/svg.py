"""Minimal standalone SVG line chart of relative received power vs time."""
from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 720, 360
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 16, 28, 48


def _nice_step(span: float, target_ticks: int = 6) -> float:
    raw = span / target_ticks
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step) * step
    n = int(math.floor((hi - first) / step + 1e-9)) + 1
    return [first + i * step for i in range(n)]


def line_chart(x: Sequence[float], y: Sequence[float], title: str = "") -> str:
    if len(x) != len(y) or not x:
        raise ValueError("x and y must be non-empty and equal length")
    x0, x1 = min(x), max(x)
    if x1 == x0:
        x1 = x0 + 1.0
    y_lo = min(min(y), -1.0)
    y_hi = max(max(y), 0.0) + 1.0
    y_lo = math.floor(y_lo / 5) * 5
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(v: float) -> float:
        return MARGIN_L + (v - x0) / (x1 - x0) * pw

    def py(v: float) -> float:
        return MARGIN_T + (y_hi - v) / (y_hi - y_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for t in _ticks(y_lo, y_hi):
        out.append(f'<line x1="{MARGIN_L}" y1="{py(t):.2f}" x2="{WIDTH - MARGIN_R}" y2="{py(t):.2f}" stroke="#ddd"/>')
        out.append(f'<text x="{MARGIN_L - 6}" y="{py(t) + 4:.2f}" text-anchor="end">{t:g}</text>')
    for t in _ticks(x0, x1):
        out.append(f'<line x1="{px(t):.2f}" y1="{MARGIN_T}" x2="{px(t):.2f}" y2="{HEIGHT - MARGIN_B}" stroke="#eee"/>')
        out.append(f'<text x="{px(t):.2f}" y="{HEIGHT - MARGIN_B + 16}" text-anchor="middle">{t:g}</text>')
    out.append(
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>'
    )
    points = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
    out.append(f'<polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points="{points}"/>')
    out.append(f'<text x="{MARGIN_L + pw / 2}" y="{HEIGHT - 10}" text-anchor="middle">Time (s)</text>')
    out.append(
        f'<text x="16" y="{MARGIN_T + ph / 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_T + ph / 2})">Relative received power (dB)</text>'
    )
    if title:
        out.append(f'<text x="{MARGIN_L + pw / 2}" y="18" text-anchor="middle">{escape(title)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
