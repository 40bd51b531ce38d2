"""SVG and TikZ pictures of a polygon comparison.

The lower polygon is drawn dashed, the upper one solid, and the region
between them is shaded.  Output depends only on the input points, so the
same comparison always renders to the same bytes.
"""

from __future__ import annotations

from hnpoly.errors import DomainError
from hnpoly.polygons import Polygon, polygon_leq

SCALE = 40
MARGIN = 20


def _check(lower: Polygon, upper: Polygon):
    if not polygon_leq(lower, upper):
        raise DomainError(f"{lower} is not <= {upper}; nothing to shade")


def _region(lower: Polygon, upper: Polygon) -> list[tuple[int, int]]:
    return list(lower.points) + list(reversed(upper.points[1:-1]))


def render_svg(lower: Polygon, upper: Polygon) -> str:
    _check(lower, upper)
    pts = list(lower.points) + list(upper.points)
    xmax = max(x for x, _ in pts)
    ymin = min(y for _, y in pts)
    ymax = max(y for _, y in pts)
    width = xmax * SCALE + 2 * MARGIN
    height = (ymax - ymin) * SCALE + 2 * MARGIN

    def sx(x):
        return MARGIN + x * SCALE

    def sy(y):
        # svg y grows downward
        return MARGIN + (ymax - y) * SCALE

    def path(points):
        return " ".join(f"{sx(x)},{sy(y)}" for x, y in points)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <polygon points="{path(_region(lower, upper))}" fill="#cccccc" stroke="none"/>',
        f'  <polyline points="{path(upper.points)}" fill="none" stroke="black" stroke-width="2"/>',
        f'  <polyline points="{path(lower.points)}" fill="none" stroke="black" '
        'stroke-width="2" stroke-dasharray="6,4"/>',
    ]
    for x, y in sorted(set(pts)):
        out.append(f'  <circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(lower: Polygon, upper: Polygon) -> str:
    _check(lower, upper)

    def path(points):
        return " -- ".join(f"({x},{y})" for x, y in points)

    region = path(_region(lower, upper))
    pts = sorted(set(lower.points) | set(upper.points))
    out = [
        r"\begin{tikzpicture}[scale=0.8]",
        rf"  \fill[gray!30] {region} -- cycle;",
        rf"  \draw[thick] {path(upper.points)};",
        rf"  \draw[thick, dashed] {path(lower.points)};",
    ]
    out.extend(rf"  \fill ({x},{y}) circle (1.5pt);" for x, y in pts)
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"
