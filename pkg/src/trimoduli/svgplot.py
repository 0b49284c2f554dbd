"""Hand-rolled SVG output for the two standard figures.

No plotting dependency: both figures are a few hundred primitive elements,
and writing them directly keeps the bytes deterministic, which the CLI
promises.  Coordinates are formatted with a fixed trimmed precision.
"""

from __future__ import annotations

import math

from .analysis import ObtuseCurvePoint
from .errors import GuardError
from .moduli import uniform_target, ModuliRegion
from .randgeom import langford_obtuse_probability
from .serialize import write_text


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return s if s not in ("", "-0") else "0"


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def plot_shapes(points, path: str) -> None:
    """Scatter of ab-plane shape points over the labeled region.

    points is a sequence of (a, b) pairs inside {a < 1, b < 1, a + b > 1}.
    The region boundary, the three isosceles segments, and the equilateral
    point (2/3, 2/3) are drawn for orientation.
    """
    pts = [(float(a), float(b)) for a, b in points]
    if not pts:
        raise GuardError("no points to plot")
    for a, b in pts:
        if not (math.isfinite(a) and math.isfinite(b)):
            raise GuardError(f"non-finite plot point ({a}, {b})")
        if not (-0.01 <= a <= 1.01 and -0.01 <= b <= 1.01):
            raise GuardError(f"point ({a}, {b}) far outside the unit square")

    size = 640
    margin = 60
    scale = size - 2 * margin

    def px(a: float) -> str:
        return _fmt(margin + a * scale)

    def py(b: float) -> str:
        return _fmt(margin + (1.0 - b) * scale)

    body = [f'<rect width="{size}" height="{size}" fill="white"/>']
    corners = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    poly = " ".join(f"{px(a)},{py(b)}" for a, b in corners)
    body.append(
        f'<polygon class="region" points="{poly}" fill="#f2f5fa" stroke="#333" stroke-width="1.5"/>'
    )
    iso = [((0.5, 0.5), (1.0, 1.0)), ((0.5, 1.0), (1.0, 0.0)), ((0.0, 1.0), (1.0, 0.5))]
    for (a1, b1), (a2, b2) in iso:
        body.append(
            f'<line class="iso" x1="{px(a1)}" y1="{py(b1)}" x2="{px(a2)}" '
            f'y2="{py(b2)}" stroke="#888" stroke-width="1" stroke-dasharray="5 4"/>'
        )
    for a, b in pts:
        body.append(
            f'<circle class="pt" cx="{px(a)}" cy="{py(b)}" r="2.2" '
            f'fill="#1f77b4" fill-opacity="0.35"/>'
        )
    third = 2.0 / 3.0
    body.append(
        f'<circle class="equilateral" cx="{px(third)}" cy="{py(third)}" r="4.5" '
        f'fill="none" stroke="#d62728" stroke-width="2"/>'
    )
    for a, b, label in ((1.0, 0.0, "(1,0)"), (0.0, 1.0, "(0,1)"), (1.0, 1.0, "(1,1)")):
        dy = 16 if b < 0.5 else -8
        body.append(
            f'<text x="{px(a)}" y="{_fmt(float(py(b)) + dy)}" font-size="12" '
            f'fill="#333" text-anchor="middle">{label}</text>'
        )
    write_text(path, _svg(size, size, body))


def plot_curve(points: list[ObtuseCurvePoint], path: str) -> None:
    """Obtuse fraction per grid size, weighted and distinct, with the two
    closed-form reference levels drawn as dashed lines."""
    if not points:
        raise GuardError("no curve points to plot")
    width, height = 720, 480
    left, right, top, bottom = 70, 30, 40, 60
    plot_w = width - left - right
    plot_h = height - top - bottom

    ns = [pt.n for pt in points]
    n_lo, n_hi = min(ns), max(ns)
    if n_lo == n_hi:
        n_lo -= 1
        n_hi += 1
    lang = langford_obtuse_probability()
    uni = uniform_target(ModuliRegion.OBTUSE_ALL)
    ys = [pt.weighted_fraction for pt in points] + [
        pt.distinct_fraction for pt in points
    ] + [lang, uni]
    y_lo = max(0.0, min(ys) - 0.03)
    y_hi = min(1.0, max(ys) + 0.03)

    def px(n: float) -> str:
        return _fmt(left + (n - n_lo) / (n_hi - n_lo) * plot_w)

    def py(y: float) -> str:
        return _fmt(top + (y_hi - y) / (y_hi - y_lo) * plot_h)

    body = [f'<rect width="{width}" height="{height}" fill="white"/>']
    body.append(
        f'<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#333" stroke-width="1"/>'
    )

    tick = math.ceil(y_lo * 20) / 20.0  # y ticks every 0.05
    while tick <= y_hi + 1e-9:
        body.append(
            f'<line x1="{left - 4}" y1="{py(tick)}" x2="{left}" y2="{py(tick)}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        body.append(
            f'<text x="{left - 8}" y="{_fmt(float(py(tick)) + 4)}" font-size="11" '
            f'fill="#333" text-anchor="end">{_fmt(tick)}</text>'
        )
        tick += 0.05

    for n in ns:
        body.append(
            f'<text class="xtick" x="{px(n)}" y="{height - bottom + 16}" '
            f'font-size="10" fill="#333" text-anchor="middle">{n}</text>'
        )
    body.append(
        f'<text x="{left + plot_w / 2}" y="{height - 16}" font-size="12" '
        f'fill="#333" text-anchor="middle">grid size n</text>'
    )

    for level, color, label in (
        (lang, "#b23", "random-triangle baseline"),
        (uni, "#27b", "uniform shape measure"),
    ):
        body.append(
            f'<line class="ref" x1="{left}" y1="{py(level)}" x2="{left + plot_w}" '
            f'y2="{py(level)}" stroke="{color}" stroke-width="1" '
            f'stroke-dasharray="7 5"/>'
        )
        body.append(
            f'<text x="{left + plot_w - 4}" y="{_fmt(float(py(level)) - 5)}" '
            f'font-size="11" fill="{color}" text-anchor="end">{label} '
            f"{_fmt(level)}</text>"
        )

    for attr, color, sel in (
        ("wpt", "#1f77b4", lambda pt: pt.weighted_fraction),
        ("dpt", "#ff7f0e", lambda pt: pt.distinct_fraction),
    ):
        if len(points) > 1:
            line = " ".join(f"{px(pt.n)},{py(sel(pt))}" for pt in points)
            body.append(
                f'<polyline points="{line}" fill="none" stroke="{color}" '
                f'stroke-width="1.8"/>'
            )
        for pt in points:
            body.append(
                f'<circle class="{attr}" cx="{px(pt.n)}" cy="{py(sel(pt))}" '
                f'r="3" fill="{color}"/>'
            )

    body.append(
        f'<text x="{left + 10}" y="{top + 18}" font-size="12" fill="#1f77b4">'
        f"weighted obtuse fraction</text>"
    )
    body.append(
        f'<text x="{left + 10}" y="{top + 34}" font-size="12" fill="#ff7f0e">'
        f"distinct obtuse fraction</text>"
    )
    write_text(path, _svg(width, height, body))
